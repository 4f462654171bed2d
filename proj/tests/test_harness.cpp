#include "afkit/errors.hpp"
#include "afkit/generators.hpp"
#include "afkit/harness.hpp"
#include "afkit/json_io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace afkit;

TEST_CASE("splitmix64 reference values") {
  // First outputs of the reference generator seeded with 0.
  CHECK(gen::splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(gen::splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("bounded draws stay in range and cover it") {
  gen::Rng rng(71);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform(-3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
    ++seen[static_cast<std::size_t>(v + 3)];
  }
  for (int c : seen) CHECK(c > 0);
  CHECK(rng.uniform(5, 5) == 5);
  CHECK_THROWS_AS(rng.uniform(2, 1), DomainError);
}

TEST_CASE("generators are seed-stable") {
  CHECK(gen::gen_pd_hermitian(99, 4, 3) == gen::gen_pd_hermitian(99, 4, 3));
  CHECK_FALSE(gen::gen_pd_hermitian(99, 4, 3) == gen::gen_pd_hermitian(100, 4, 3));
  CHECK(gen::gen_polytope(5, 3, 8, 2) == gen::gen_polytope(5, 3, 8, 2));
}

TEST_CASE("PD generator sweep") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const HermMat a = gen::gen_pd_hermitian(s, 1 + s % 5, 3);
    REQUIRE(is_pd(a));
  }
}

TEST_CASE("singular generator") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const HermMat a = gen::gen_psd_singular(s, 2 + s % 4, 3);
    CHECK(det(a) == 0);
    CHECK(is_psd(a));
    CHECK_FALSE(is_pd(a));
  }
  CHECK_THROWS_AS(gen::gen_psd_singular(1, 1, 3), DomainError);
}

TEST_CASE("polytope generator respects bounds") {
  const Polytope p = gen::gen_polytope(3, 3, 10, 2);
  CHECK(p.dim() == 3);
  for (const auto& v : p.vertices()) {
    for (const auto& x : v) {
      CHECK(abs(x) <= 2);
      CHECK(x.get_den() <= 2);
    }
  }
  CHECK_THROWS_AS(gen::gen_polytope(1, 5, 4, 1), DimensionError);
}

TEST_CASE("JSON round trips") {
  gen::Rng rng(72);
  const HermMat a = gen::pd_gauss_rational(rng, 3, 3);
  CHECK(io::herm_matrix_from(io::matrix_json(a)) == a);
  const auto t = support::pd_tuple(rng, 3, 3);
  const auto back = io::tuple_from(io::tuple_json(t));
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == t[i]);
  const Polytope p = gen::full_polytope(rng, 3, 7, 2);
  CHECK(io::polytope_from(io::polytope_json(p)) == p);
  const GramTable g = gen::symmetric_table(rng, 3, 4);
  CHECK(io::gram_from(io::gram_json(g)) == g);
}

TEST_CASE("JSON wire format") {
  const io::Json m = io::matrix_json(HermMat::diagonal({Rat(3, 2), Rat(-4)}));
  CHECK(m.dump() ==
        R"({"n":2,"entries":[[{"re":"3/2","im":"0"},{"re":"0","im":"0"}],[{"re":"0","im":"0"},{"re":"-4","im":"0"}]]})");
  GapReport r = GapReport::make(Rat(25, 4), Rat(4));
  CHECK(io::gap_json(r).dump() == R"({"lhs":"25/4","rhs":"4","gap":"9/4","equality":false,"lambda":null})");
  r.lambda = Rat(2);
  CHECK(io::gap_json(r)["lambda"] == "2");
  const io::Json c = io::torus_class_json(TorusClass::from(HermMat::identity(1)));
  CHECK(c["kahler"] == true);
  CHECK(c["nef"] == true);
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS(io::parse_document("{"), ParseError);
  CHECK_THROWS_AS(io::herm_matrix_from(io::parse_document(R"({"n":2})")), ParseError);
  CHECK_THROWS_AS(io::herm_matrix_from(io::parse_document(R"({"n":2,"entries":[["1","0"]]})")), ParseError);
  CHECK_THROWS_AS(io::herm_matrix_from(io::parse_document(R"({"n":1,"entries":[[{"re":1}]]})")), ParseError);
  CHECK_THROWS_AS(io::gram_from(io::parse_document(R"({"r":1,"d":[["1","2/0"],["2","1"]]})")), ParseError);
  CHECK_THROWS_AS(io::fixtures_from(io::parse_document(R"({"x":1})")), ParseError);
  // Well-formed but not Hermitian.
  CHECK_THROWS_AS(io::herm_matrix_from(io::parse_document(R"({"n":2,"entries":[["1","1"],["2","1"]]})")),
                  DomainError);
}

TEST_CASE("fixture classification") {
  const auto doc = io::parse_document(R"([
    {"n":1,"entries":[["2"]]},
    {"n":1,"mats":[{"n":1,"entries":[["2"]]}]},
    {"dim":1,"vertices":[["0"],["3/2"]]},
    {"r":1,"d":[["1","2"],["2","3"]]}
  ])");
  const auto fx = io::fixtures_from(doc);
  REQUIRE(fx.size() == 4);
  CHECK(fx[0].index() == 0);
  CHECK(fx[1].index() == 1);
  CHECK(fx[2].index() == 2);
  CHECK(fx[3].index() == 3);
}

TEST_CASE("configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg = RunConfig{};
  cfg.n = 7;
  CHECK_THROWS_AS(validate(cfg), DimensionError);
  cfg.mode = Mode::volume;
  cfg.n = 5;
  CHECK_THROWS_AS(validate(cfg), DimensionError);
  cfg = RunConfig{};
  cfg.m = 4;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg = RunConfig{};
  cfg.mode = Mode::bm;
  cfg.exact_only = true;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  CHECK(mode_from("torus") == Mode::torus);
  CHECK_FALSE(mode_from("nope").has_value());
}

TEST_CASE("suite runs are deterministic and pass") {
  RunConfig cfg;
  cfg.mode = Mode::all;
  cfg.n = 3;
  cfg.trials = 3;
  cfg.seed = 1234;
  const RunRecord a = run_suite(cfg);
  const RunRecord b = run_suite(cfg);
  CHECK(a.ok());
  CHECK(a.jsonl() == b.jsonl());
  CHECK(a.instances.size() == 15);
  cfg.exec = Exec::serial;
  CHECK(run_suite(cfg).jsonl() == a.jsonl());
  cfg.seed = 1235;
  CHECK(run_suite(cfg).jsonl() != a.jsonl());

  const auto summary = io::parse_document(a.jsonl().substr(a.jsonl().rfind('\n', a.jsonl().size() - 2) + 1));
  CHECK(summary["summary"]["ok"] == true);
  CHECK(summary["summary"]["failed"] == 0);
}

TEST_CASE("fixtures: corrupted table fails with a witness") {
  const auto good = io::fixtures_from(io::parse_document(R"({"r":1,"d":[["1","2"],["2","3"]]})"));
  CHECK(run_fixtures(good, RunConfig{}).ok());
  const auto bad = io::fixtures_from(io::parse_document(R"({"r":1,"d":[["2","1"],["1","3"]]})"));
  const RunRecord rec = run_fixtures(bad, RunConfig{});
  CHECK_FALSE(rec.ok());
  REQUIRE(rec.failures.size() == 1);
  CHECK(rec.instances[0]["witness"]["k"] == 1);
  const auto boundary = io::fixtures_from(io::parse_document(R"({"r":1,"d":[["0","0"],["0","3"]]})"));
  CHECK(run_fixtures(boundary, RunConfig{}).ok());
}
