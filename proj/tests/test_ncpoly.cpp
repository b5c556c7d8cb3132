#include <doctest.h>

#include "support.hpp"

using namespace qalg;
using qalg::testing::poly;
using qalg::testing::random_poly;

namespace {

// sl(2): P0 < C0 < D with [P0,C0] = D, [D,P0] = P0, [D,C0] = -C0.
const GeneratorNames kNames{"P0", "C0", "D"};
constexpr GeneratorId P0 = gen(0), C0 = gen(1), D = gen(2);

RelationTable sl2(int order) {
  RelationTable t(3, order);
  t.set(P0, C0, NCPoly::generator(D, order));
  t.set(D, P0, NCPoly::generator(P0, order));
  t.set(D, C0, -NCPoly::generator(C0, order));
  return t;
}

} // namespace

TEST_CASE("words order by length then letters") {
  CHECK(Word{P0, D} < Word{C0, C0});
  CHECK(Word{D} < Word{P0, P0});
  CHECK(Word{P0, D}.is_normal());
  CHECK_FALSE(Word{D, P0}.is_normal());
  CHECK(Word{P0, P0, D}.str(kNames) == "P0^2*D");
  CHECK(Word{}.str(kNames) == "1");
}

TEST_CASE("relation table stores both orientations") {
  const RelationTable t = sl2(2);
  CHECK(t.is_complete());
  CHECK(t.commutator(C0, P0) == -NCPoly::generator(D, 2));
  CHECK(t.entry(C0, P0) == -NCPoly::generator(D, 2));
  RelationTable partial(3, 2);
  partial.set(D, P0, NCPoly::generator(P0, 2));
  CHECK(partial.missing().size() == 2);
  CHECK_THROWS_AS(partial.entry(C0, P0), IncompleteTable);
}

TEST_CASE("hand normal forms in U(sl2)") {
  const RelationTable t = sl2(2);
  Normalizer n(t, 2);
  CHECK(n.normalize(poly("D*P0", kNames, 2)) == poly("P0*D + P0", kNames, 2));
  CHECK(n.normalize(poly("C0*P0", kNames, 2)) == poly("P0*C0 - D", kNames, 2));
  // D*P0^2 = P0*D*P0 + P0^2 = P0^2*D + 2*P0^2.
  CHECK(n.normalize(poly("D*P0^2", kNames, 2)) == poly("P0^2*D + 2*P0^2", kNames, 2));
  // C0*P0*D = (P0*C0 - D)*D.
  CHECK(n.normalize(poly("C0*P0*D", kNames, 2)) == poly("P0*C0*D - D^2", kNames, 2));
}

TEST_CASE("normalization is idempotent and multiplicative") {
  const RelationTable t = sl2(3);
  Normalizer n(t, 3);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const NCPoly a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3);
    const NCPoly na = n.normalize(a);
    CHECK(na.is_normal());
    CHECK(n.normalize(na) == na);
    CHECK(n.normalize(poly_mul(na, n.normalize(b))) == n.normalize(poly_mul(a, b)));
  }
}

TEST_CASE("rewriting strategies agree on a confluent table") {
  const RelationTable t = sl2(3);
  Normalizer left(t, 3, RewriteStrategy::LeftmostInnermost);
  Normalizer right(t, 3, RewriteStrategy::RightmostInnermost);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const NCPoly a = random_poly(rng, 3, 3, 4);
    CHECK(left.normalize(a) == right.normalize(a));
  }
}

TEST_CASE("rewriting step budget") {
  const RelationTable t = sl2(2);
  Normalizer n(t, 2, RewriteStrategy::LeftmostInnermost, 3);
  CHECK_THROWS_AS(n.normalize(poly("D^3*C0^3*P0^3", kNames, 2)), NonTermination);
}

TEST_CASE("tensor products, flip and embedding") {
  const NCPoly p = NCPoly::generator(P0, 2), d = NCPoly::generator(D, 2);
  const TensorPoly pd = TensorPoly::outer(p, d);
  CHECK(flip(pd) == TensorPoly::outer(d, p));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const TensorPoly t = TensorPoly::outer(random_poly(rng, 3, 2), random_poly(rng, 3, 2));
    CHECK(flip(flip(t)) == t);
  }
  CHECK(tensor_mul(pd, pd) == TensorPoly::outer(poly_mul(p, p), poly_mul(d, d)));
  const NCPoly one = NCPoly::unit(2);
  CHECK(pd.embed(0, 2) == TensorPoly::outer(p, one, d));
  CHECK(pd.embed(2, 0) == TensorPoly::outer(d, one, p));
  CHECK_THROWS_AS(tensor_mul(pd, TensorPoly::outer(p, p, p)), RankMismatch);
  CHECK_THROWS_AS(flip(TensorPoly::outer(p, p, p)), RankMismatch);
  CHECK(pd.str(kNames) == "P0 (x) D");
  CHECK((pd * Scalar(-2)).str(kNames) == "-2*P0 (x) D");
  CHECK(TensorPoly::unit(2, 2).str(kNames) == "1 (x) 1");
}
