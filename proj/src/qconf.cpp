#include "qalg/qconf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qalg {

// Generated from data/*.alg at build time.
extern const std::vector<std::pair<std::string, std::string>> &embedded_catalog();

namespace {

// ------------------------------------------------------------------ lexer

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, Equals,
                 Colon, Arrow, Tensor, Wedge, End };

struct Token {
  Tok kind;
  std::string text;
  int column; // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(const std::string &s, int line, int offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = offset + static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(' && i + 2 < s.size() && s[i + 1] == 'x' && s[i + 2] == ')') {
      out.push_back({Tok::Tensor, "(x)", col});
      i += 3;
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '\\') {
      out.push_back({Tok::Wedge, "/\\", col});
      i += 2;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Tok::Number, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j]))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
    case '+': k = Tok::Plus; break;
    case '-': k = Tok::Minus; break;
    case '*': k = Tok::Star; break;
    case '/': k = Tok::Slash; break;
    case '^': k = Tok::Caret; break;
    case '(': k = Tok::LParen; break;
    case ')': k = Tok::RParen; break;
    case '[': k = Tok::LBracket; break;
    case ']': k = Tok::RBracket; break;
    case ',': k = Tok::Comma; break;
    case '=': k = Tok::Equals; break;
    case ':': k = Tok::Colon; break;
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", offset + static_cast<int>(s.size()) + 1});
  return out;
}

const std::set<std::string> &reserved() {
  static const std::set<std::string> r{"z", "x", "exp", "sinh", "cosh", "eps"};
  return r;
}

// ----------------------------------------------------------------- parser

class LineParser {
public:
  LineParser(std::vector<Token> tokens, int line, const GeneratorNames &generators)
      : toks_(std::move(tokens)), line_(line), generators_(generators) {}

  const Token &peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_end() const { return at(Tok::End); }

  Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  Token expect(Tok k, const char *what) {
    if (!at(k))
      fail(std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const std::string &msg) const {
    const Token &t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " at end of line" : " near '" + t.text + "'"), line_, t.column);
  }

  void expect_end() {
    if (!at_end())
      fail("unexpected trailing input");
  }

  GeneratorId generator() {
    const Token t = expect(Tok::Ident, "a generator");
    auto it = std::find(generators_.begin(), generators_.end(), t.text);
    if (it == generators_.end())
      throw ParseError("unknown generator '" + t.text + "'", line_, t.column);
    return gen(static_cast<std::size_t>(it - generators_.begin()));
  }

  /// Optionally signed rational "p" or "p/q".
  Scalar rational() {
    bool neg = false;
    if (at(Tok::Minus)) {
      take();
      neg = true;
    }
    Scalar v = Scalar::parse(expect(Tok::Number, "a number").text);
    if (at(Tok::Slash)) {
      take();
      const Token d = expect(Tok::Number, "a denominator");
      const Scalar den = Scalar::parse(d.text);
      if (den.is_zero())
        throw ParseError("zero denominator", line_, d.column);
      v /= den;
    }
    return neg ? -v : v;
  }

  ExprPtr sum(bool allow_tensor, bool allow_wedge) {
    std::vector<ExprPtr> terms;
    bool negate = false;
    if (at(Tok::Minus)) {
      take();
      negate = true;
    } else if (at(Tok::Plus)) {
      take();
    }
    for (;;) {
      ExprPtr t = tensor_term(allow_tensor, allow_wedge);
      terms.push_back(negate ? Expr::neg(t) : t);
      if (at(Tok::Plus)) {
        take();
        negate = false;
      } else if (at(Tok::Minus)) {
        take();
        negate = true;
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
  }

private:
  ExprPtr tensor_term(bool allow_tensor, bool allow_wedge) {
    ExprPtr first = product(allow_wedge);
    if (!at(Tok::Tensor))
      return first;
    if (!allow_tensor)
      fail("tensor product not allowed here");
    std::vector<ExprPtr> slots{first};
    while (at(Tok::Tensor)) {
      take();
      slots.push_back(product(false));
    }
    if (slots.size() > 3)
      fail("at most three tensor slots");
    return Expr::tensor(std::move(slots));
  }

  ExprPtr product(bool allow_wedge) {
    std::vector<ExprPtr> factors{unary(allow_wedge)};
    for (;;) {
      if (at(Tok::Star)) {
        take();
        factors.push_back(unary(allow_wedge));
      } else if (at(Tok::Slash)) {
        take();
        const Token d = expect(Tok::Number, "a numeric divisor");
        const Scalar den = Scalar::parse(d.text);
        if (den.is_zero())
          throw ParseError("division by zero", line_, d.column);
        factors.push_back(Expr::rational(Scalar(1) / den));
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
  }

  ExprPtr unary(bool allow_wedge) {
    if (at(Tok::Minus)) {
      take();
      return Expr::neg(unary(allow_wedge));
    }
    ExprPtr base = atom(allow_wedge);
    if (at(Tok::Caret)) {
      take();
      bool neg = false;
      if (at(Tok::Minus)) {
        take();
        neg = true;
      }
      const Token n = expect(Tok::Number, "an integer exponent");
      const int e = std::stoi(n.text);
      base = Expr::power(base, neg ? -e : e);
    }
    return base;
  }

  ExprPtr atom(bool allow_wedge) {
    const Token t = peek();
    switch (t.kind) {
    case Tok::Number:
      take();
      return Expr::rational(Scalar::parse(t.text));
    case Tok::Ident: {
      if (t.text == "z") {
        take();
        return Expr::z();
      }
      if (t.text == "exp" || t.text == "sinh" || t.text == "cosh") {
        take();
        const auto f = t.text == "exp" ? Expr::Func::Exp : (t.text == "sinh" ? Expr::Func::Sinh : Expr::Func::Cosh);
        expect(Tok::LParen, "'('");
        ExprPtr arg = sum(false, false);
        expect(Tok::RParen, "')'");
        return Expr::function(f, arg);
      }
      return Expr::generator_ref(generator());
    }
    case Tok::LParen: {
      take();
      ExprPtr inner = sum(false, false);
      if (at(Tok::Wedge)) {
        if (!allow_wedge)
          fail("wedge not allowed here");
        take();
        ExprPtr right = sum(false, false);
        expect(Tok::RParen, "')'");
        return Expr::wedge(inner, right);
      }
      expect(Tok::RParen, "')'");
      return inner;
    }
    default:
      fail("expected an expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  const GeneratorNames &generators_;
};

// -------------------------------------------------------------- statements

struct Statement {
  std::string directive;
  int line = 0;
  int column = 0;
  std::string text;          // note text / contraction name
  GeneratorId a{}, b{};      // bracket pair or coproduct/counit/cocommutator target
  ExprPtr expr;
  ContractionMap contraction;
};

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

ContractionMap parse_contraction(const std::string &body, int line, int offset, const GeneratorNames &names) {
  const auto colon = body.find(':');
  if (colon == std::string::npos)
    throw ParseError("contraction needs '<name>:'", line, offset + 1);
  ContractionMap m;
  m.name = trim(body.substr(0, colon));
  if (m.name.empty())
    throw ParseError("contraction name is empty", line, offset + 1);
  m.exponents.assign(names.size(), Scalar(0));
  std::vector<bool> seen(names.size(), false);
  LineParser p(tokenize(body.substr(colon + 1), line, offset + static_cast<int>(colon) + 1), line, names);
  while (!p.at_end()) {
    const Token lhs = p.expect(Tok::Ident, "a generator or z");
    p.expect(Tok::Arrow, "'->'");
    Scalar q(0);
    if (p.at(Tok::Ident) && p.peek().text == "eps") {
      p.take();
      q = Scalar(1);
      if (p.at(Tok::Caret)) {
        p.take();
        q = p.rational();
      }
    }
    const Token rhs = p.expect(Tok::Ident, "the mapped symbol");
    if (rhs.text != lhs.text)
      throw ParseError("contraction must map '" + lhs.text + "' to a multiple of itself", line, rhs.column);
    if (lhs.text == "z") {
      m.z_exponent = -q;
    } else {
      auto it = std::find(names.begin(), names.end(), lhs.text);
      if (it == names.end())
        throw ParseError("unknown generator '" + lhs.text + "'", line, lhs.column);
      const auto i = static_cast<std::size_t>(it - names.begin());
      if (seen[i])
        throw ValidationError("generator " + lhs.text + " mapped twice in contraction " + m.name);
      seen[i] = true;
      m.exponents[i] = q;
    }
    if (p.at(Tok::Comma))
      p.take();
  }
  return m;
}

LieElement linear_form(const NCPoly &p, const std::string &where) {
  LieElement e;
  for (const auto &[w, c] : p.terms()) {
    if (w.size() != 1 || c.terms().size() != 1 || c.min_exponent() != 0)
      throw ValidationError(where + " must be a z-free linear combination of generators");
    e.emplace(index_of(w.letters[0]), c.coefficient(0));
  }
  return e;
}

/// A classical tensor z * sum c X_a (x) X_b.
Bivector classical_bivector(const Expr &e, const std::string &where) {
  const TensorPoly t = expand_tensor(e, 2);
  for (const auto &[k, c] : t.terms())
    if (k[0].size() != 1 || k[1].size() != 1 || c.terms().size() != 1 || c.min_exponent() != 1)
      throw ValidationError(where + " must be homogeneous of degree 1 in z and linear in each slot");
  return tensor_to_bivector(t, 1);
}

std::string first_failure(const CheckReport &r) {
  for (const auto &c : blocking_failures(r))
    return c.id + (c.witness.empty() ? "" : ": " + c.witness);
  return {};
}

std::string scalar_term(const Scalar &c, const std::string &body, bool first) {
  const bool neg = c.sign() < 0;
  std::string s = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  const Scalar mag = neg ? -c : c;
  if (!mag.is_one())
    s += mag.str() + "*";
  return s + body;
}

std::string wedge_str(const Bivector &b, const GeneratorNames &names) {
  std::string s;
  bool first = true;
  for (const auto &[ab, c] : b) {
    if (ab.first >= ab.second)
      continue;
    s += scalar_term(c, "z*(" + names[ab.first] + " /\\ " + names[ab.second] + ")", first);
    first = false;
  }
  return first ? "0" : s;
}

} // namespace

const ContractionMap &AlgebraBundle::contraction(const std::string &map_name) const {
  for (const auto &m : contractions)
    if (m.name == map_name)
      return m;
  throw ValidationError(name + " has no contraction named '" + map_name + "'");
}

ExprPtr parse_expression(const std::string &text, const GeneratorNames &generators) {
  LineParser p(tokenize(text, 1, 0), 1, generators);
  ExprPtr e = p.sum(true, true);
  p.expect_end();
  return e;
}

AlgebraBundle parse_algebra_file(const std::string &text, const ParseOptions &options) {
  AlgebraBundle bundle;
  GeneratorNames names;
  std::vector<Statement> stmts;
  bool have_generators = false;

  std::istringstream in(text);
  std::string source_line;
  int line_no = 0;
  while (std::getline(in, source_line)) {
    ++line_no;
    std::string line = source_line;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos)
      continue;
    const auto word_end = line.find_first_of(" \t\r", start);
    const std::string directive = line.substr(start, word_end == std::string::npos ? std::string::npos : word_end - start);
    const std::size_t body_at = word_end == std::string::npos ? line.size() : word_end;
    const std::string body = line.substr(body_at);
    const int offset = static_cast<int>(body_at);

    Statement st;
    st.directive = directive;
    st.line = line_no;
    st.column = static_cast<int>(start) + 1;

    if (directive == "algebra") {
      bundle.name = trim(body);
      if (bundle.name.empty())
        throw ParseError("algebra needs a name", line_no, offset + 1);
      continue;
    }
    if (directive == "note") {
      bundle.notes.push_back(trim(body));
      continue;
    }
    if (directive == "generators") {
      if (have_generators)
        throw ParseError("generators declared twice", line_no, st.column);
      LineParser p(tokenize(body, line_no, offset), line_no, names);
      while (!p.at_end()) {
        const Token t = p.expect(Tok::Ident, "a generator name");
        if (reserved().count(t.text))
          throw ParseError("'" + t.text + "' is reserved", line_no, t.column);
        if (std::find(names.begin(), names.end(), t.text) != names.end())
          throw ParseError("generator '" + t.text + "' declared twice", line_no, t.column);
        names.push_back(t.text);
      }
      if (names.empty() || names.size() > 255)
        throw ParseError("generators must list between 1 and 255 names", line_no, st.column);
      have_generators = true;
      continue;
    }
    if (!have_generators)
      throw ParseError("'" + directive + "' before the generators line", line_no, st.column);

    if (directive == "contraction") {
      st.contraction = parse_contraction(body, line_no, offset, names);
      stmts.push_back(std::move(st));
      continue;
    }

    LineParser p(tokenize(body, line_no, offset), line_no, names);
    if (directive == "bracket" || directive == "lie") {
      p.expect(Tok::LBracket, "'['");
      st.a = p.generator();
      p.expect(Tok::Comma, "','");
      st.b = p.generator();
      p.expect(Tok::RBracket, "']'");
      p.expect(Tok::Equals, "'='");
      if (st.a == st.b)
        throw ValidationError("line " + std::to_string(line_no) + ": bracket of a generator with itself");
      st.expr = p.sum(false, false);
    } else if (directive == "coproduct" || directive == "counit" || directive == "cocommutator") {
      st.a = p.generator();
      p.expect(Tok::Equals, "'='");
      st.expr = p.sum(directive == "coproduct", directive == "cocommutator");
    } else if (directive == "rmatrix") {
      st.expr = p.sum(false, true);
    } else if (directive == "rfactor") {
      st.expr = p.sum(true, false);
    } else {
      throw ParseError("unknown directive '" + directive + "'", line_no, st.column);
    }
    p.expect_end();
    stmts.push_back(std::move(st));
  }

  if (bundle.name.empty())
    throw ParseError("missing 'algebra <name>' line", line_no, 1);
  if (!have_generators)
    throw ParseError("missing 'generators' line", line_no, 1);

  const int order = options.order;
  const std::size_t n = names.size();
  const bool deformed = std::any_of(stmts.begin(), stmts.end(), [](const Statement &s) { return s.directive == "coproduct"; });
  const bool have_lie = std::any_of(stmts.begin(), stmts.end(), [](const Statement &s) { return s.directive == "lie"; });
  auto where = [&](const Statement &s) { return bundle.name + " line " + std::to_string(s.line); };
  auto pair_name = [&](const Statement &s) {
    return "[" + names[index_of(s.a)] + "," + names[index_of(s.b)] + "]";
  };

  bundle.algebra = LieAlgebra(bundle.name, names);
  RelationTable raw(n, order);
  std::set<std::pair<GeneratorId, GeneratorId>> lie_pairs, bracket_pairs;
  std::vector<std::optional<TensorPoly>> coproducts(n);
  std::vector<Scalar> counit(n, Scalar(0));
  std::vector<bool> counit_seen(n, false);
  std::vector<Bivector> delta(n);
  std::vector<bool> delta_seen(n, false);
  bool have_delta = false;
  std::vector<RFactor> rfactors;

  for (const auto &s : stmts) {
    const auto key = std::minmax(s.a, s.b);
    if (s.directive == "lie" || (s.directive == "bracket" && !deformed)) {
      if (s.directive == "bracket" && have_lie)
        throw ValidationError(where(s) + ": 'bracket' and 'lie' both given in a file without coproducts");
      auto &seen = s.directive == "lie" ? lie_pairs : bracket_pairs;
      if (!seen.insert({key.first, key.second}).second)
        throw ValidationError(where(s) + ": duplicate relation " + pair_name(s));
      const LieElement v = linear_form(expand_poly(*s.expr, order), where(s) + " " + pair_name(s));
      bundle.algebra.set_bracket(index_of(s.a), index_of(s.b), v);
    } else if (s.directive == "bracket") {
      if (!bracket_pairs.insert({key.first, key.second}).second)
        throw ValidationError(where(s) + ": duplicate relation " + pair_name(s));
      raw.set(s.a, s.b, expand_poly(*s.expr, order));
    } else if (s.directive == "coproduct") {
      if (coproducts[index_of(s.a)])
        throw ValidationError(where(s) + ": duplicate coproduct for " + names[index_of(s.a)]);
      coproducts[index_of(s.a)] = expand_tensor(*s.expr, order);
    } else if (s.directive == "counit") {
      if (counit_seen[index_of(s.a)])
        throw ValidationError(where(s) + ": duplicate counit for " + names[index_of(s.a)]);
      counit_seen[index_of(s.a)] = true;
      const NCPoly v = expand_poly(*s.expr, 0);
      if (v.size() > 1 || (v.size() == 1 && !v.terms().begin()->first.empty()))
        throw ValidationError(where(s) + ": counit must be a rational constant");
      counit[index_of(s.a)] = v.is_zero() ? Scalar(0) : v.terms().begin()->second.coefficient(0);
    } else if (s.directive == "rmatrix") {
      if (bundle.rmatrix)
        throw ValidationError(where(s) + ": duplicate rmatrix");
      bundle.rmatrix = RMatrix::from_bivector(classical_bivector(*s.expr, where(s) + " rmatrix"));
    } else if (s.directive == "cocommutator") {
      if (delta_seen[index_of(s.a)])
        throw ValidationError(where(s) + ": duplicate cocommutator for " + names[index_of(s.a)]);
      delta_seen[index_of(s.a)] = true;
      have_delta = true;
      delta[index_of(s.a)] = classical_bivector(*s.expr, where(s) + " cocommutator");
    } else if (s.directive == "rfactor") {
      const TensorPoly t = expand_tensor(*s.expr, 2);
      const auto &terms = t.terms();
      if (terms.size() != 1)
        throw ValidationError(where(s) + ": rfactor must be a single term c*z * X (x) Y");
      const auto &[k, c] = *terms.begin();
      if (k[0].size() != 1 || k[1].size() != 1 || c.terms().size() != 1 || c.min_exponent() != 1)
        throw ValidationError(where(s) + ": rfactor must be a single term c*z * X (x) Y");
      rfactors.push_back({c.coefficient(1), k[0].letters[0], k[1].letters[0]});
    } else if (s.directive == "contraction") {
      for (const auto &m : bundle.contractions)
        if (m.name == s.contraction.name)
          throw ValidationError(where(s) + ": duplicate contraction " + m.name);
      bundle.contractions.push_back(s.contraction);
    }
  }

  if (have_delta) {
    Cocommutator d;
    d.images = std::move(delta);
    bundle.cocommutator = std::move(d);
  }

  if (deformed) {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < y; ++x)
        if (!raw.has(gen(y), gen(x)))
          raw.set(gen(y), gen(x), NCPoly(order));
    DeformedHopfData h;
    h.name = bundle.name;
    h.generators = names;
    h.order = order;
    h.relations = RelationTable(n, order);
    {
      Normalizer bootstrap(raw, order);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < y; ++x)
          h.relations.set(gen(y), gen(x), bootstrap.normalize(raw.entry(gen(y), gen(x))));
    }
    Normalizer norm(h.relations, order);
    for (std::size_t x = 0; x < n; ++x) {
      if (!coproducts[x])
        throw ValidationError(bundle.name + ": missing coproduct for " + names[x]);
      h.coproducts.push_back(norm.normalize(*coproducts[x]));
    }
    h.counit = counit;
    if (!rfactors.empty())
      h.rmatrix_factors = rfactors;
    if (!have_lie)
      bundle.algebra = classical_limit(h);
    bundle.hopf = std::move(h);
  } else if (!rfactors.empty()) {
    throw ValidationError(bundle.name + ": rfactor lines require a deformed bundle");
  }

  if (options.validate) {
    const CheckReport j = jacobi_check(bundle.algebra);
    if (!j.passed())
      throw ValidationError(bundle.name + ": Jacobi identity fails, " + first_failure(j));
    if (bundle.cocommutator && !bundle.cocommutator->is_antisymmetric())
      throw ValidationError(bundle.name + ": cocommutator is not antisymmetric");
    if (bundle.hopf) {
      const CheckReport v = validate_hopf_data(*bundle.hopf);
      if (!first_failure(v).empty())
        throw ValidationError(bundle.name + ": Hopf data fails validation, " + first_failure(v));
    }
  }
  return bundle;
}

std::string serialize(const AlgebraBundle &b) {
  std::ostringstream os;
  const auto &names = b.algebra.generators();
  os << "algebra " << b.name << "\n";
  for (const auto &note : b.notes)
    os << "note " << note << "\n";
  os << "generators";
  for (const auto &g : names)
    os << " " << g;
  os << "\n";

  const char *lie_directive = b.hopf ? "lie" : "bracket";
  for (const auto &[ij, v] : b.algebra.structure_constants())
    os << lie_directive << " [" << names[ij.first] << ", " << names[ij.second] << "] = " << b.algebra.str(v) << "\n";

  if (b.hopf) {
    const auto &h = *b.hopf;
    for (std::size_t y = 0; y < h.dimension(); ++y)
      for (std::size_t x = 0; x < y; ++x) {
        const NCPoly &e = h.relations.entry(gen(y), gen(x));
        if (!e.is_zero())
          os << "bracket [" << names[y] << ", " << names[x] << "] = " << e.str(names) << "\n";
      }
    for (std::size_t x = 0; x < h.dimension(); ++x)
      os << "coproduct " << names[x] << " = " << h.coproducts[x].str(names) << "\n";
    for (std::size_t x = 0; x < h.dimension(); ++x)
      if (!h.counit[x].is_zero())
        os << "counit " << names[x] << " = " << h.counit[x] << "\n";
    if (h.rmatrix_factors)
      for (const auto &f : *h.rmatrix_factors)
        os << "rfactor " << scalar_term(f.coefficient, "z", true) << " * " << names[index_of(f.left)] << " (x) "
           << names[index_of(f.right)] << "\n";
  }
  if (b.rmatrix)
    os << "rmatrix " << wedge_str(b.rmatrix->to_bivector(), names) << "\n";
  if (b.cocommutator)
    for (std::size_t x = 0; x < b.cocommutator->images.size(); ++x)
      if (!b.cocommutator->images[x].empty())
        os << "cocommutator " << names[x] << " = " << wedge_str(b.cocommutator->images[x], names) << "\n";
  for (const auto &m : b.contractions) {
    os << "contraction " << m.name << ":";
    for (std::size_t i = 0; i < names.size(); ++i) {
      os << (i ? ", " : " ") << names[i] << " -> ";
      if (!m.exponents[i].is_zero())
        os << "eps^" << m.exponents[i] << " ";
      os << names[i];
    }
    if (m.z_exponent)
      os << ", z -> eps^" << -*m.z_exponent << " z";
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto &[name, text] : embedded_catalog())
    out.push_back(name);
  return out;
}

const std::string &catalog_source(const std::string &name) {
  for (const auto &[n, text] : embedded_catalog())
    if (n == name)
      return text;
  throw ValidationError("no shipped algebra named '" + name + "'");
}

AlgebraBundle load_bundle(const std::string &name, int order) {
  const std::string &text = catalog_source(name);
  try {
    return parse_algebra_file(text, ParseOptions{order, true});
  } catch (const Error &e) {
    throw ValidationError("shipped bundle " + name + ": " + e.what());
  }
}

std::vector<AlgebraBundle> load_catalog(int order) {
  std::vector<AlgebraBundle> out;
  for (const auto &name : catalog_names())
    out.push_back(load_bundle(name, order));
  return out;
}

} // namespace qalg
