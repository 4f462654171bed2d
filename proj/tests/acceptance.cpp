// Acceptance suite: one PASS/FAIL line per criterion.

#include "afkit/convexvol.hpp"
#include "afkit/errors.hpp"
#include "afkit/generators.hpp"
#include "afkit/harness.hpp"
#include "afkit/ineqcheck.hpp"
#include "afkit/json_io.hpp"
#include "afkit/mixdisc.hpp"
#include "afkit/shephard.hpp"
#include "afkit/torus.hpp"

#include "oracles.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#ifndef AFKIT_CLI_PATH
#error "AFKIT_CLI_PATH must point at the afkit executable"
#endif

using namespace afkit;

namespace {

// Thrown by require() with the reason for the failure.
struct Unmet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Unmet(what);
}

HermMat pd(gen::Rng& rng, std::size_t n) { return gen::pd_gauss_rational(rng, n, 3); }

std::vector<HermMat> pd_tuple(gen::Rng& rng, std::size_t count, std::size_t n) {
  std::vector<HermMat> t;
  for (std::size_t i = 0; i < count; ++i) t.push_back(pd(rng, n));
  return t;
}

std::vector<HermMat> tail(const std::vector<HermMat>& t, std::size_t from) {
  return {t.begin() + static_cast<std::ptrdiff_t>(from), t.end()};
}

std::string c1_routes() {
  gen::Rng rng(1001);
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 200; ++t) {
      std::vector<HermMat> tuple;
      for (std::size_t i = 0; i < n; ++i) tuple.push_back(gen::hermitian(rng, n, 5));
      require(mixed_discriminant(tuple) == mixed_discriminant_polarized(tuple),
              "routes differ at n = " + std::to_string(n));
      ++count;
    }
  }
  return std::to_string(count) + " tuples";
}

std::string c2_af_discriminant() {
  gen::Rng rng(1002);
  std::size_t generic = 0;
  std::size_t planted = 0;
  std::size_t strict = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 500; ++t) {
      const auto tuple = pd_tuple(rng, n, n);
      const GapReport r = af_gap_discriminant(tuple[0], tuple[1], tail(tuple, 2));
      require(sgn(r.gap) >= 0, "negative gap");
      ++generic;
      // Independent non-proportionality check on the entries.
      if (!proportional(tuple[0], tuple[1])) {
        require(sgn(r.gap) > 0, "non-proportional pair with zero gap");
        ++strict;
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const auto tuple = pd_tuple(rng, n, n);
    const Rat lambda = rng.positive_rational(9);
    const GapReport r = af_gap_discriminant(tuple[0], tuple[0] * lambda, tail(tuple, 2));
    require(r.gap == 0 && r.equality, "B = lambda A with nonzero gap");
    require(r.lambda.has_value() && *r.lambda == lambda, "recovered lambda differs");
    ++planted;
  }
  require(strict >= 500, "fewer than 500 non-proportional pairs");
  return std::to_string(generic) + " generic (" + std::to_string(strict) + " strict), " +
         std::to_string(planted) + " planted";
}

std::string c3_m_fold() {
  gen::Rng rng(1003);
  const std::size_t n = 4;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (int t = 0; t < 200; ++t) {
      const auto tuple = pd_tuple(rng, n, n);
      require(sgn(af_m_fold_discriminant(tuple, m).gap) >= 0, "negative m-fold gap");
      auto fam = tuple;
      for (std::size_t i = 1; i < m; ++i) fam[i] = tuple[0] * rng.positive_rational(7);
      require(af_m_fold_discriminant(fam, m).gap == 0, "proportional family with nonzero gap");
    }
  }
  return "600 generic + 600 proportional";
}

std::string c4_mixed_volumes() {
  gen::Rng rng(1004);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t % 4);
    std::vector<Polytope> boxes;
    RatMat edges(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rat> e;
      for (std::size_t k = 0; k < d; ++k) {
        e.push_back(rng.positive_rational(4));
        edges(k, i) = e.back();
      }
      boxes.push_back(make_box(e));
    }
    require(mixed_volume(boxes) == oracle::permanent(edges) / oracle::fact(d), "box permanent mismatch");
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
    std::vector<Point> vs;
    std::vector<Polytope> segs;
    for (std::size_t i = 0; i < d; ++i) {
      vs.push_back(gen::random_vector(rng, d, 3));
      segs.push_back(make_segment(vs.back()));
    }
    require(mixed_volume(segs) == abs(oracle::det(oracle::columns(vs))) / oracle::fact(d),
            "segment determinant mismatch");
  }
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t m = 2; m <= 3; ++m) {
      for (int t = 0; t < 50; ++t) {
        std::vector<Polytope> bodies;
        std::vector<Rat> l;
        for (std::size_t i = 0; i < m; ++i) {
          bodies.push_back(gen::full_polytope(rng, d, d + 2, 2));
          l.push_back(rng.positive_rational(3));
        }
        require(minkowski_expansion_check(bodies, l), "Minkowski expansion mismatch");
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    const Polytope k = gen::full_polytope(rng, 2, 6, 3);
    const Polytope l = gen::full_polytope(rng, 2, 6, 3);
    require(sgn(af_gap_volume(k, l, {}).gap) >= 0, "negative planar volume gap");
  }
  for (int t = 0; t < 30; ++t) {
    const Polytope k = gen::full_polytope(rng, 3, 6, 3);
    const Polytope l = gen::full_polytope(rng, 3, 6, 3);
    const Polytope c = gen::full_polytope(rng, 3, 5, 3);
    require(sgn(af_gap_volume(k, l, {c}).gap) >= 0, "negative 3D volume gap");
  }
  return "100 box, 100 segment, 200 expansion, 130 gap instances";
}

std::string c5_shephard() {
  gen::Rng rng(1005);
  std::size_t tables = 0;
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (int t = 0; t < 200; ++t) {
        const GramTable g = gram_from_discriminants(pd_tuple(rng, r + 1, n), pd_tuple(rng, n - 2, n));
        require(check_psd_shephard(g).psd, "adapter table with non-PSD Shephard matrix");
        require(det_identity_check(g), "determinant identity fails on adapter table");
        ++tables;
      }
    }
  }
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = 1 + static_cast<std::size_t>(t % 4);
    const GramTable g = gen::symmetric_table(rng, r, 6);
    require(det_identity_check(g), "determinant identity fails on a signed table");
    Rat rhs = rat_pow(g(0, 0), static_cast<unsigned>(r - 1)) * oracle::det(g.table());
    if (r % 2 == 1) rhs = -rhs;
    require(oracle::det(shephard_matrix(g)) == rhs, "Leibniz check of the identity fails");
  }
  return std::to_string(tables) + " adapter tables, 500 signed tables";
}

std::string c6_r2() {
  gen::Rng rng(1006);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const GramTable g = gram_from_discriminants(pd_tuple(rng, 3, n), pd_tuple(rng, n - 2, n));
    require(sgn(r2_inequality(g).gap) >= 0, "negative r = 2 gap");
  }
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    auto classes = pd_tuple(rng, 3, n);
    classes[1] = classes[0] * rng.positive_rational(7);
    const GramTable g = gram_from_discriminants(classes, pd_tuple(rng, n - 2, n));
    require(g(0, 1) * g(0, 1) == g(0, 0) * g(1, 1), "construction did not give d01^2 = d00 d11");
    require(g(0, 1) * g(0, 2) == g(0, 0) * g(1, 2), "equality did not propagate");
  }
  return "200 inequality + 200 propagation";
}

std::string c7_torus() {
  const auto i2 = TorusClass::from(HermMat::identity(2));
  require(intersection_number({i2, i2}) == 8, "identity classes on the 2-torus do not give 8");
  gen::Rng rng(1007);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto mats = pd_tuple(rng, n, n);
      const Rat d = oracle::mixed_discriminant(to_gen(mats)).re;
      require(intersection_number(torus_classes(mats)) == oracle::fact(n) * Rat(1L << n) * d,
              "intersection number is not n! 2^n D");
    }
  }
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const auto a = TorusClass::from(t % 2 == 0 ? gen::psd_singular(rng, n, 3) : pd(rng, n));
    const auto b = TorusClass::from(t % 3 == 0 ? gen::psd_singular(rng, n, 3) : pd(rng, n));
    const auto s = kt_sequence(a, b);
    for (std::size_t m = 1; m < n; ++m) require(s[m] * s[m] >= s[m - 1] * s[m + 1], "KT fails");
  }
  return "bridge n <= 4, 500 KT pairs";
}

std::string c8_equality() {
  gen::Rng rng(1008);
  for (std::size_t n = 3; n <= 4; ++n) {
    for (int t = 0; t < 100; ++t) {
      const HermMat base = pd(rng, n);
      std::vector<HermMat> fam;
      for (std::size_t i = 0; i < n; ++i) fam.push_back(base * rng.positive_rational(6));
      const auto cls = torus_classes(fam);
      const auto pair = equality_theorem_pair(cls[0], cls[1], {cls.begin() + 2, cls.end()});
      require(pair.gap.gap == 0 && pair.adjugate_ratio && pair.class_ratio, "pair: planted equality");
      for (std::size_t m = 2; m <= n; ++m) {
        const auto v = equality_theorem_m(cls, m);
        require(v.gap.gap == 0 && v.adjugates_proportional && v.classes_proportional,
                "m-fold: planted equality");
      }
      const auto full = equality_corollary_full(cls);
      require(full.gap.gap == 0 && full.classes_proportional, "full: planted equality");
    }
    for (int t = 0; t < 200; ++t) {
      const auto cls = torus_classes(pd_tuple(rng, n, n));
      const auto pair = equality_theorem_pair(cls[0], cls[1], {cls.begin() + 2, cls.end()});
      require(sgn(pair.gap.gap) > 0 && !pair.adjugate_ratio, "pair: generic family");
      const auto v = equality_theorem_m(cls, n);
      require(sgn(v.gap.gap) > 0 && !v.adjugates_proportional, "m-fold: generic family");
      require(sgn(equality_corollary_full(cls).gap.gap) > 0, "full: generic family");
    }
    const auto cls = torus_classes(pd_tuple(rng, n, n));
    const auto sing = TorusClass::from(gen::psd_singular(rng, n, 3));
    bool rejected = false;
    try {
      (void)equality_theorem_pair(sing, cls[1], {cls.begin() + 2, cls.end()});
    } catch (const NotBigError&) {
      rejected = true;
    }
    require(rejected, "non-big class not rejected");
  }
  return "200 planted, 400 generic families";
}

std::string c9_concavity() {
  gen::Rng rng(1009);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const std::size_t m = 2 + static_cast<std::size_t>(t % (n - 1));
    const HermMat a0 = pd(rng, n);
    const HermMat a1 = pd(rng, n);
    const auto rest = pd_tuple(rng, n - m, n);
    const auto rep = bm_concavity_discriminant(a0, a1, rest, m, 11);
    require(rep.max_midpoint_violation <= 1e-9 && rep.max_chord_violation <= 1e-9, "concavity violated");
    worst = std::max(worst, rep.max_violation);
    const auto prop = bm_concavity_discriminant(a0, a0 * rng.positive_rational(5), rest, m, 11);
    require(prop.max_chord_deviation <= 1e-9, "proportional family off the chord");
  }
  for (int t = 0; t < 10; ++t) {
    const Polytope k0 = gen::full_polytope(rng, 2, 5, 3);
    const Polytope k1 = gen::full_polytope(rng, 2, 5, 3);
    require(bm_concavity_volume(k0, k1, {}, 2, 11).max_violation <= 1e-9, "body concavity violated");
    require(bm_concavity_volume(k0, dilate(k0, rng.positive_rational(3)), {}, 2, 11).max_chord_deviation <= 1e-9,
            "homothetic bodies off the chord");
  }
  std::ostringstream os;
  os << "100 matrix + 10 body instances, worst violation " << worst;
  return os.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(AFKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string c10_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("afkit_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string a = (dir / "a.jsonl").string();
  const std::string b = (dir / "b.jsonl").string();
  const std::string common = "--mode all --n 3 --trials 4 --seed 2024";
  require(run(common + " --out " + a) == 0, "clean run exited nonzero");
  require(run(common + " --out " + b) == 0, "second clean run exited nonzero");
  require(!slurp(a).empty() && slurp(a) == slurp(b), "outputs differ between identical runs");

  gen::Rng rng(1010);
  RatMat d = gram_from_discriminants(pd_tuple(rng, 3, 3), pd_tuple(rng, 1, 3)).table();
  const std::string good = (dir / "good.json").string();
  const std::string bad = (dir / "bad.json").string();
  std::ofstream(good) << io::gram_json(GramTable(d)).dump();
  d(0, 0) *= 10;
  std::ofstream(bad) << io::gram_json(GramTable(d)).dump();
  require(run("--in " + good + " --out " + a) == 0, "valid fixture rejected");
  require(run("--in " + bad + " --out " + b) == 1, "corrupted fixture did not exit with status 1");
  const std::string out = slurp(b);
  require(out.find("\"witness\"") != std::string::npos, "no witness in the corrupted fixture output");
  fs::remove_all(dir);
  return "byte-identical reruns; corrupted fixture exits 1";
}

struct Criterion {
  int id;
  const char* name;
  double limit_s; // 0 = no limit
  std::function<std::string()> body;
};

} // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "route equivalence", 30, c1_routes},
      {2, "AF for mixed discriminants", 120, c2_af_discriminant},
      {3, "m-fold inequality", 0, c3_m_fold},
      {4, "mixed volumes", 300, c4_mixed_volumes},
      {5, "Shephard determinantal theorem", 0, c5_shephard},
      {6, "r = 2 inequality and propagation", 0, c6_r2},
      {7, "torus bridge and KT", 0, c7_torus},
      {8, "equality theorems on the torus", 0, c8_equality},
      {9, "Brunn-Minkowski concavity", 0, c9_concavity},
      {10, "determinism and exit codes", 0, c10_determinism},
  };
  configure_threads();
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    std::printf("%s criterion %d: %s - %s [%.2f s]\n", ok ? "PASS" : "FAIL", c.id, c.name,
                detail.c_str(), secs);
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
