#include "afkit/errors.hpp"
#include "afkit/generators.hpp"
#include "afkit/matrix.hpp"
#include "afkit/scalar.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace afkit;
using support::diag;
using support::real_herm;

TEST_CASE("rationals parse to lowest terms") {
  CHECK(format_rat(parse_rat("6/4")) == "3/2");
  CHECK(format_rat(parse_rat("-6/4")) == "-3/2");
  CHECK(format_rat(parse_rat("8/4")) == "2");
  CHECK(format_rat(parse_rat("0/7")) == "0");
  CHECK(format_rat(parse_rat("12345678901234567890123")) == "12345678901234567890123");
  CHECK(parse_rat("3/2").get_den() == 2);
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("abc"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/2/3"), ParseError);
}

TEST_CASE("Gaussian rational arithmetic") {
  const GaussRat a{Rat(1), Rat(2)};
  const GaussRat b{Rat(3), Rat(-1)};
  CHECK(a * b == GaussRat{Rat(5), Rat(5)});
  CHECK(a.conj().conj() == a);
  CHECK(a.norm2() == 5);
  CHECK((a * b) / b == a);
  CHECK((a * a.conj()).is_real());
  CHECK_THROWS_AS(a / GaussRat{}, DomainError);
}

TEST_CASE("Hermitian matrices enforce conjugate symmetry") {
  GenMat m(2);
  m(0, 1) = GaussRat{Rat(1), Rat(1)};
  m(1, 0) = GaussRat{Rat(1), Rat(1)};
  CHECK_THROWS_AS(HermMat{m}, DomainError);
  m(1, 0) = GaussRat{Rat(1), Rat(-1)};
  CHECK_NOTHROW(HermMat{m});
  m(0, 0) = GaussRat{Rat(0), Rat(1)};
  CHECK_THROWS_AS(HermMat{m}, DomainError);
  CHECK_THROWS_AS(HermMat{GenMat(0)}, DomainError);
}

TEST_CASE("positive semi-definiteness") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(is_psd(HermMat::identity(n)));
  CHECK_FALSE(is_psd(HermMat::diagonal({Rat(1), Rat(-1)})));
  CHECK(is_psd(diag({1, 0})));
  CHECK(is_psd(HermMat::zero(3)));
  CHECK_FALSE(is_psd(real_herm({{0, 1}, {1, 0}})));
}

TEST_CASE("Gram matrices are PSD, cross-checked by quadratic forms and minors") {
  gen::Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 4;
    GenMat g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.gaussian_integer(3);
    }
    const HermMat a = HermMat::gram(g);
    REQUIRE(is_psd(a));
    const auto e = oracle::principal_minor_sums(a.mat());
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(e[k].is_real());
      CHECK(sgn(e[k].re) >= 0);
    }
    std::vector<std::vector<GaussRat>> probes;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<GaussRat> v(n);
      v[i] = GaussRat(Rat(1));
      probes.push_back(v);
    }
    for (int s = 0; s < 5; ++s) {
      std::vector<GaussRat> v(n);
      for (auto& x : v) x = {rng.rational(4), rng.rational(4)};
      probes.push_back(v);
    }
    for (const auto& v : probes) {
      const GaussRat q = oracle::quadratic_form(a.mat(), v);
      CHECK(q.is_real());
      CHECK(sgn(q.re) >= 0);
    }
  }
}

TEST_CASE("principal minor sums agree with subset enumeration") {
  gen::Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 5;
    const GenMat m = support::random_gen(rng, n, 5);
    const auto lib = principal_minor_sums(m);
    const auto ref = oracle::principal_minor_sums(m);
    REQUIRE(lib.size() == n + 1);
    for (std::size_t k = 0; k <= n; ++k) CHECK(lib[k] == ref[k]);
    CHECK(det(m) == oracle::det(m));
  }
}

TEST_CASE("adjugate satisfies A adj(A) = det(A) I") {
  gen::Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + t % 4;
    const GenMat m = support::random_gen(rng, n, 4);
    GenMat rhs = GenMat::identity(n);
    const GaussRat d = det(m);
    for (std::size_t i = 0; i < n; ++i) rhs(i, i) = d;
    CHECK(m * adjugate(m) == rhs);
  }
}

TEST_CASE("positive definiteness") {
  CHECK(is_pd(HermMat::identity(3)));
  CHECK_FALSE(is_pd(diag({1, 0})));
  CHECK(is_pd(real_herm({{2, 1}, {1, 2}})));
  CHECK_FALSE(is_pd(real_herm({{1, 2}, {2, 1}})));
  gen::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    CHECK(is_pd(gen::pd_hermitian(rng, 1 + t % 5, 3)));
    CHECK_FALSE(is_pd(gen::psd_singular(rng, 2 + t % 4, 3)));
  }
}

TEST_CASE("psd witness names the first negative minor sum") {
  RatMat m(2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  const auto w = psd_witness(m);
  REQUIRE(w.has_value());
  CHECK(w->k == 2);
  CHECK(w->value == -1);
  CHECK_FALSE(psd_witness(RatMat::identity(3)).has_value());
}

TEST_CASE("proportionality") {
  const auto l = proportional(HermMat::identity(3), HermMat::identity(3) * Rat(3));
  REQUIRE(l.has_value());
  CHECK(*l == 3);
  CHECK_FALSE(proportional(diag({1, 2}), diag({2, 1})).has_value());
  const auto z = proportional(diag({1, 2}), HermMat::zero(2));
  REQUIRE(z.has_value());
  CHECK(*z == 0);
  CHECK_FALSE(proportional(HermMat::zero(2), diag({1, 2})).has_value());

  GenMat a = GenMat::identity(2);
  GenMat b = a * Rat(1);
  for (std::size_t i = 0; i < 2; ++i) b(i, i) = GaussRat{Rat(0), Rat(1)};
  CHECK_FALSE(proportional(a, b).has_value());
  CHECK_THROWS_AS(proportional(diag({1, 2}), diag({1, 2, 3})), DimensionError);
}
