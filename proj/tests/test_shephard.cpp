#include "afkit/errors.hpp"
#include "afkit/generators.hpp"
#include "afkit/mixdisc.hpp"
#include "afkit/shephard.hpp"
#include "afkit/torus.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace afkit;

namespace {

GramTable table(std::initializer_list<std::initializer_list<long>> rows) {
  RatMat d(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) d(i, j++) = x;
    ++i;
  }
  return GramTable(d);
}

} // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(table({{1}}), DomainError);
  CHECK_THROWS_AS(table({{1, 2}, {3, 4}}), DomainError);
  CHECK(table({{1, 2}, {2, 4}}).r() == 1);
}

TEST_CASE("r = 1 is the classical gap") {
  const GramTable g = table({{2, 3}, {3, 4}});
  const RatMat s = shephard_matrix(g);
  REQUIRE(s.size() == 1);
  CHECK(s(0, 0) == 9 - 8);
  CHECK(check_psd_shephard(g).psd);
  CHECK_FALSE(check_psd_shephard(table({{2, 1}, {1, 4}})).psd);
  CHECK(det_identity_check(g));
}

TEST_CASE("constant table gives the zero matrix") {
  const GramTable g = table({{5, 5, 5}, {5, 5, 5}, {5, 5, 5}});
  CHECK(shephard_matrix(g).is_zero());
}

TEST_CASE("adapter entries are mixed discriminants") {
  gen::Rng rng(51);
  const auto classes = support::pd_tuple(rng, 3, 2);
  const GramTable g = gram_from_discriminants(classes, {});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(g(i, j) == oracle::mixed_discriminant(to_gen({classes[i], classes[j]})).re);
    }
  }
  CHECK_THROWS_AS(gram_from_discriminants({classes[0], HermMat::diagonal({Rat(1), Rat(-1)})}, {}),
                  DomainError);
  CHECK_THROWS_AS(gram_from_discriminants({classes[0]}, {}), DimensionError);
}

TEST_CASE("adapter tables give PSD Shephard matrices") {
  gen::Rng rng(52);
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto classes = support::pd_tuple(rng, r + 1, n);
      const auto rest = support::pd_tuple(rng, n - 2, n);
      const GramTable g = gram_from_discriminants(classes, rest);
      CHECK(check_psd_shephard(g).psd);
      CHECK(det_identity_check(g));
    }
  }
}

TEST_CASE("inflated d00 produces a witness") {
  gen::Rng rng(53);
  const auto classes = support::pd_tuple(rng, 3, 3);
  const auto rest = support::pd_tuple(rng, 1, 3);
  RatMat d = gram_from_discriminants(classes, rest).table();
  d(0, 0) *= 100;
  const ShephardPsd res = check_psd_shephard(GramTable(d));
  CHECK_FALSE(res.psd);
  REQUIRE(res.witness.has_value());
  CHECK(sgn(res.witness->value) < 0);
  CHECK_FALSE(res.boundary);
}

TEST_CASE("determinant identity holds for arbitrary symmetric tables") {
  CHECK(det_identity_check(table({{0, 1}, {1, 0}})));
  gen::Rng rng(54);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + t % 4;
    const GramTable g = gen::symmetric_table(rng, r, 5);
    CHECK(det_identity_check(g));
    Rat rhs = rat_pow(g(0, 0), static_cast<unsigned>(r - 1)) * oracle::det(g.table());
    if (r % 2 == 1) rhs = -rhs;
    CHECK(oracle::det(shephard_matrix(g)) == rhs);
  }
}

TEST_CASE("r = 2 inequality") {
  CHECK_THROWS_AS(r2_inequality(table({{1, 2}, {2, 1}})), DomainError);
  // u1 = u2: both sides equal (d01^2 - d00 d11)^2.
  const GramTable same = table({{1, 3, 3}, {3, 2, 2}, {3, 2, 2}});
  const GapReport e = r2_inequality(same);
  CHECK(e.equality);
  CHECK(e.lhs == 49);

  gen::Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    const auto classes = support::pd_tuple(rng, 3, 3);
    const auto rest = support::pd_tuple(rng, 1, 3);
    CHECK(sgn(r2_inequality(gram_from_discriminants(classes, rest)).gap) >= 0);
  }
}

TEST_CASE("equality propagation") {
  gen::Rng rng(56);
  for (int t = 0; t < 20; ++t) {
    auto classes = support::pd_tuple(rng, 3, 3);
    classes[1] = classes[0] * rng.positive_rational(5);
    const auto rest = support::pd_tuple(rng, 1, 3);
    const auto prop = r2_equality_propagation(gram_from_discriminants(classes, rest));
    REQUIRE(prop.has_value());
    CHECK(*prop);
  }
  gen::Rng rng2(57);
  const auto generic = support::pd_tuple(rng2, 3, 3);
  CHECK_FALSE(r2_equality_propagation(gram_from_discriminants(generic, support::pd_tuple(rng2, 1, 3))).has_value());
}

TEST_CASE("torus tables are scaled discriminant tables") {
  gen::Rng rng(58);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto classes = support::pd_tuple(rng, 3, n);
    const auto rest = support::pd_tuple(rng, n - 2, n);
    const GramTable t = gram_from_torus(classes, rest);
    CHECK(t == scaled(gram_from_discriminants(classes, rest), torus_volume_factor(n)));
    CHECK(check_psd_shephard(t).psd);
  }
}
