#include "afkit/harness.hpp"

#include "afkit/errors.hpp"
#include "afkit/generators.hpp"
#include "afkit/ineqcheck.hpp"
#include "afkit/mixdisc.hpp"
#include "afkit/shephard.hpp"
#include "afkit/torus.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <sstream>

namespace afkit {

using io::Json;

namespace {

constexpr std::size_t kMatrixDimLimit = kPermutationRouteLimit;
constexpr std::int64_t kEntryBoundLimit = 1000000;
constexpr std::size_t kGramRankLimit = 12;

enum class Status { pass, flagged, fail };

// Collects the checks of one instance. A failed exact assertion is recorded
// once, with the first message.
class Instance {
public:
  Instance(Mode mode, std::size_t index, std::uint64_t seed) {
    rec_["mode"] = mode_name(mode);
    rec_["index"] = index;
    rec_["instance_seed"] = seed;
    rec_["status"] = "pass";
  }
  Instance(const char* kind, std::size_t index) {
    rec_["mode"] = "fixture";
    rec_["index"] = index;
    rec_["kind"] = kind;
    rec_["status"] = "pass";
  }

  Json& operator[](const char* key) { return rec_[key]; }

  void gap(const char* key, const GapReport& r) {
    rec_[key] = io::gap_json(r);
    if (r.equality) ++equalities_;
    if (!min_gap_ || r.gap < *min_gap_) min_gap_ = r.gap;
  }

  void fail(const std::string& message) {
    if (status_ == Status::fail) return;
    status_ = Status::fail;
    rec_["status"] = "fail";
    rec_["message"] = message;
  }

  void flag(const std::string& message) {
    if (status_ != Status::pass) return;
    status_ = Status::flagged;
    rec_["status"] = "flagged";
    rec_["message"] = message;
  }

  void expect(bool ok, const std::string& message) {
    if (!ok) fail(message);
  }

  [[nodiscard]] Status status() const { return status_; }
  [[nodiscard]] const Json& record() const { return rec_; }
  [[nodiscard]] std::size_t equalities() const { return equalities_; }
  [[nodiscard]] const std::optional<Rat>& min_gap() const { return min_gap_; }

private:
  Json rec_ = Json::object();
  Status status_ = Status::pass;
  std::size_t equalities_ = 0;
  std::optional<Rat> min_gap_;
};

// Runs `body`, turning any exception into a failed assertion on the record.
void guarded(Instance& inst, const std::function<void()>& body) {
  try {
    body();
  } catch (const TheoremViolation& e) {
    inst.fail(std::string("theorem violation: ") + e.what());
  } catch (const Error& e) {
    inst.fail(std::string("error: ") + e.what());
  } catch (const std::exception& e) {
    inst.fail(std::string("unexpected exception: ") + e.what());
  }
}

std::vector<HermMat> pd_family(gen::Rng& rng, std::size_t count, std::size_t n, std::int64_t b) {
  std::vector<HermMat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen::pd_gauss_rational(rng, n, b));
  return out;
}

void discriminant_instance(const RunConfig& cfg, gen::Rng& rng, Instance& inst) {
  const std::size_t n = cfg.n;
  const std::int64_t b = cfg.entry_bound;
  const auto tuple = pd_family(rng, n, n, b);
  const std::vector<HermMat> rest(tuple.begin() + 2, tuple.end());

  const Rat by_perm = mixed_discriminant(tuple, cfg.exec);
  const Rat by_pol = mixed_discriminant_polarized(tuple, cfg.exec);
  inst["discriminant"] = io::rat_json(by_perm);
  inst["routes_agree"] = by_perm == by_pol;
  inst.expect(by_perm == by_pol, "permutation and polarization routes disagree");

  inst.gap("generic", af_gap_discriminant(tuple[0], tuple[1], rest));

  const Rat lambda = rng.positive_rational(b + 1);
  const GapReport prop = af_gap_discriminant(tuple[0], tuple[0] * lambda, rest);
  inst.gap("proportional", prop);
  inst.expect(prop.equality && prop.lambda == lambda,
              "B = lambda A did not give equality with the planted lambda");

  const HermMat sing = gen::psd_singular(rng, n, b);
  inst.gap("semidefinite", af_gap_discriminant(sing, tuple[1], rest));

  if (cfg.m <= n) {
    inst.gap("m_fold", af_m_fold_discriminant(tuple, cfg.m));
    auto planted = tuple;
    for (std::size_t i = 1; i < cfg.m; ++i) planted[i] = tuple[0] * rng.positive_rational(b + 1);
    const GapReport eq = af_m_fold_discriminant(planted, cfg.m);
    inst.gap("m_fold_proportional", eq);
    inst.expect(eq.equality, "proportional m-fold family has a positive gap");
  }
}

void volume_instance(const RunConfig& cfg, gen::Rng& rng, Instance& inst, std::size_t d) {
  const std::int64_t b = cfg.entry_bound;
  const Polytope k = gen::full_polytope(rng, d, d + 2, b);
  const Polytope l = gen::full_polytope(rng, d, d + 2, b);
  std::vector<Polytope> rest;
  for (std::size_t i = 2; i < d; ++i) rest.push_back(gen::full_polytope(rng, d, d + 1, b));
  inst["dim"] = d;
  inst["volume_k"] = io::rat_json(volume(k));
  inst["volume_l"] = io::rat_json(volume(l));

  inst.gap("generic", af_gap_volume(k, l, rest));

  const Rat lambda = rng.positive_rational(3);
  const Polytope homothetic = translate(dilate(k, lambda), gen::random_vector(rng, d, b));
  const GapReport eq = af_gap_volume(k, homothetic, rest);
  inst.gap("homothetic", eq);
  inst.expect(eq.equality && eq.lambda == lambda,
              "homothetic bodies did not give equality with the planted ratio");

  if (cfg.m <= d) {
    std::vector<Polytope> tuple{k, l};
    tuple.insert(tuple.end(), rest.begin(), rest.end());
    inst.gap("m_fold", af_m_fold_volume(tuple, cfg.m));
  }
}

void shephard_instance(const RunConfig& cfg, gen::Rng& rng, Instance& inst) {
  const std::size_t n = cfg.n;
  const std::size_t r = cfg.r;
  const std::int64_t b = cfg.entry_bound;
  const auto classes = pd_family(rng, r + 1, n, b);
  const auto rest = pd_family(rng, n - 2, n, b);

  const GramTable g = gram_from_discriminants(classes, rest);
  inst["gram"] = io::gram_json(g);
  const ShephardPsd psd = check_psd_shephard(g);
  inst["psd"] = psd.psd;
  if (!psd.psd) {
    const std::string w = "Shephard matrix not PSD: E_" + std::to_string(psd.witness->k) + " = " +
                          format_rat(psd.witness->value);
    if (psd.boundary) {
      inst.flag(w + " (d00 = 0)");
    } else {
      inst.fail(w);
    }
  }
  const bool ident = det_identity_check(g);
  inst["det_identity"] = ident;
  inst.expect(ident, "determinant identity fails");
  if (r == 2) inst.gap("r2", r2_inequality(g));

  // Singular first class exercises the closed-cone boundary.
  auto semi = classes;
  semi[0] = gen::psd_singular(rng, n, b);
  const GramTable gs = gram_from_discriminants(semi, rest);
  const ShephardPsd spsd = check_psd_shephard(gs);
  inst["semidefinite_psd"] = spsd.psd;
  if (!spsd.psd) {
    if (spsd.boundary) {
      inst.flag("Shephard matrix not PSD on the d00 = 0 boundary");
    } else {
      inst.fail("Shephard matrix not PSD for a semidefinite table");
    }
  }

  if (r >= 2) {
    auto planted = classes;
    planted[1] = classes[0] * rng.positive_rational(b + 1);
    const auto prop = r2_equality_propagation(gram_from_discriminants(planted, rest));
    inst["equality_propagation"] = prop.has_value() ? Json(*prop) : Json(nullptr);
    inst.expect(prop.value_or(false), "d01^2 = d00 d11 did not propagate to d01 d02 = d00 d12");
  }
}

void torus_instance(const RunConfig& cfg, gen::Rng& rng, Instance& inst) {
  const std::size_t n = cfg.n;
  const std::int64_t b = cfg.entry_bound;
  const auto mats = pd_family(rng, n, n, b);
  const auto classes = torus_classes(mats);
  const std::vector<TorusClass> rest(classes.begin() + 2, classes.end());
  Json flags = Json::array();
  for (const auto& c : classes) {
    flags.push_back(Json::object({{"nef", c.nef()}, {"big", c.big()}, {"kahler", c.kahler()}}));
    inst.expect(c.kahler(), "generated nef and big class is not PD");
  }
  inst["classes"] = std::move(flags);
  inst["intersection"] = io::rat_json(intersection_number(classes));

  const auto alpha = TorusClass::from(gen::hermitian(rng, n, b));
  inst.gap("hodge_index", af_gap_torus(alpha, classes[0], rest));

  const auto pair = equality_theorem_pair(classes[0], classes[1], rest);
  inst.gap("pair", pair.gap);
  inst["pair_adjugates_proportional"] = pair.adjugate_ratio.has_value();

  const Rat lambda = rng.positive_rational(b + 1);
  const auto scaled_class = TorusClass::from(mats[0] * lambda);
  const auto pair_eq = equality_theorem_pair(classes[0], scaled_class, rest);
  inst.gap("pair_proportional", pair_eq.gap);
  inst.expect(pair_eq.gap.equality && pair_eq.adjugate_ratio.has_value(),
              "proportional pair did not give equality with proportional adjugates");

  if (cfg.m <= n) {
    const auto multi = equality_theorem_m(classes, cfg.m);
    inst.gap("m_fold", multi.gap);
    auto planted = mats;
    for (std::size_t i = 1; i < cfg.m; ++i) planted[i] = mats[0] * rng.positive_rational(b + 1);
    const auto multi_eq = equality_theorem_m(torus_classes(planted), cfg.m);
    inst.gap("m_fold_proportional", multi_eq.gap);
    inst.expect(multi_eq.gap.equality && multi_eq.adjugates_proportional,
                "proportional m-fold family did not give equality");
  }

  inst.gap("full", equality_corollary_full(classes).gap);

  const auto nef = TorusClass::from(gen::psd_singular(rng, n, b));
  inst["kt_sequence"] = io::rat_vector_json(kt_sequence(classes[0], nef));
  bool rejected = false;
  try {
    (void)equality_theorem_pair(nef, classes[1], rest);
  } catch (const NotBigError&) {
    rejected = true;
  }
  inst["non_big_rejected"] = rejected;
  inst.expect(rejected, "nef class with det 0 was not rejected as non-big");

  const std::size_t r = std::min<std::size_t>(cfg.r, n - 1);
  const std::vector<HermMat> betas(mats.begin(), mats.begin() + static_cast<std::ptrdiff_t>(r + 1));
  const std::vector<HermMat> gammas = pd_family(rng, n - 2, n, b);
  const ShephardPsd psd = check_psd_shephard(gram_from_torus(betas, gammas));
  inst["gram_psd"] = psd.psd;
  inst.expect(psd.psd, "torus Gram table gives a non-PSD Shephard matrix");
}

void bm_instance(const RunConfig& cfg, gen::Rng& rng, Instance& inst) {
  const std::size_t n = cfg.n;
  const std::size_t m = cfg.m;
  const std::int64_t b = cfg.entry_bound;
  const HermMat a0 = gen::pd_gauss_rational(rng, n, b);
  const HermMat a1 = gen::pd_gauss_rational(rng, n, b);
  const auto rest = pd_family(rng, n - m, n, b);

  const auto rep = bm_concavity_discriminant(a0, a1, rest, m, cfg.grid);
  inst["concavity"] = io::concavity_json(rep);
  inst.expect(rep.max_violation <= cfg.tolerance, "concavity violated beyond tolerance");

  const auto prop = bm_concavity_discriminant(a0, a0 * rng.positive_rational(b + 1), rest, m, cfg.grid);
  inst["proportional_chord_deviation"] = prop.max_chord_deviation;
  inst.expect(prop.max_chord_deviation <= cfg.tolerance,
              "proportional family is not linear along the chord");

  if (n <= 3) {
    const Polytope k0 = gen::full_polytope(rng, n, n + 2, b);
    const Polytope k1 = gen::full_polytope(rng, n, n + 2, b);
    std::vector<Polytope> brest;
    for (std::size_t i = m; i < n; ++i) brest.push_back(gen::full_polytope(rng, n, n + 1, b));
    const auto vrep = bm_concavity_volume(k0, k1, brest, m, cfg.grid);
    inst["volume_concavity"] = io::concavity_json(vrep);
    inst.expect(vrep.max_violation <= cfg.tolerance, "volume concavity violated beyond tolerance");
  }
}

std::uint64_t instance_seed(std::uint64_t seed, Mode mode, std::size_t index) {
  return gen::splitmix64(gen::splitmix64(seed ^ (static_cast<std::uint64_t>(mode) + 1)) ^ index);
}

Instance run_instance(const RunConfig& cfg, Mode mode, std::size_t index) {
  const std::uint64_t s = instance_seed(cfg.seed, mode, index);
  Instance inst(mode, index, s);
  gen::Rng rng(s);
  guarded(inst, [&] {
    switch (mode) {
    case Mode::discriminant: discriminant_instance(cfg, rng, inst); break;
    case Mode::volume: volume_instance(cfg, rng, inst, std::min<std::size_t>(cfg.n, kMaxBodyDim)); break;
    case Mode::shephard: shephard_instance(cfg, rng, inst); break;
    case Mode::torus: torus_instance(cfg, rng, inst); break;
    case Mode::bm: bm_instance(cfg, rng, inst); break;
    case Mode::all: break;
    }
  });
  return inst;
}

void absorb(RunRecord& rec, const Instance& inst) {
  rec.instances.push_back(inst.record());
  rec.equalities += inst.equalities();
  if (inst.min_gap() && (!rec.min_gap || *inst.min_gap() < *rec.min_gap)) rec.min_gap = inst.min_gap();
  switch (inst.status()) {
  case Status::pass: ++rec.passed; break;
  case Status::flagged: ++rec.flagged; break;
  case Status::fail:
    rec.failures.push_back({inst.record().at("mode").get<std::string>(),
                            inst.record().at("index").get<std::size_t>(),
                            inst.record().at("message").get<std::string>()});
    break;
  }
}

template <class Make>
void run_indexed(RunRecord& rec, std::size_t count, Exec exec, Make make) {
  std::vector<std::optional<Instance>> out(count);
  if (exec == Exec::parallel && count > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < count; ++i) out[i].emplace(make(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i].emplace(make(i));
  }
  for (const auto& inst : out) absorb(rec, *inst);
}

void fixture_matrix(const HermMat& a, Instance& inst) {
  const auto c = TorusClass::from(a);
  inst["class"] = io::torus_class_json(c);
  inst["det"] = io::rat_json(det(a));
  inst["psd"] = is_psd(a);
  inst["pd"] = is_pd(a);
}

void fixture_tuple(const std::vector<HermMat>& tuple, const RunConfig& cfg, Instance& inst) {
  const std::size_t n = tuple.empty() ? 0 : tuple.front().size();
  if (tuple.size() != n) throw DimensionError("tuple must hold n matrices of size n");
  const Rat by_pol = mixed_discriminant_polarized(tuple, cfg.exec);
  inst["discriminant"] = io::rat_json(by_pol);
  if (n <= kPermutationRouteLimit) {
    const bool agree = mixed_discriminant(tuple, cfg.exec) == by_pol;
    inst["routes_agree"] = agree;
    inst.expect(agree, "permutation and polarization routes disagree");
  }
  const bool all_psd = std::all_of(tuple.begin(), tuple.end(), [](const HermMat& a) { return is_psd(a); });
  inst["all_psd"] = all_psd;
  if (all_psd && n >= 2) {
    inst.gap("af", af_gap_discriminant(tuple[0], tuple[1], {tuple.begin() + 2, tuple.end()}));
    if (cfg.m <= n) inst.gap("m_fold", af_m_fold_discriminant(tuple, cfg.m));
  }
}

void fixture_polytope(const Polytope& p, Instance& inst) {
  inst["dim"] = p.dim();
  inst["vertex_count"] = p.vertices().size();
  inst["volume"] = io::rat_json(volume(p));
}

void fixture_gram(const GramTable& g, Instance& inst) {
  inst["r"] = g.r();
  const ShephardPsd psd = check_psd_shephard(g);
  inst["psd"] = psd.psd;
  if (!psd.psd) {
    inst["witness"] = Json::object({{"k", psd.witness->k}, {"value", io::rat_json(psd.witness->value)}});
    const std::string w = "Shephard matrix not PSD: E_" + std::to_string(psd.witness->k) + " = " +
                          format_rat(psd.witness->value);
    if (psd.boundary) {
      inst.flag(w + " (d00 = 0)");
    } else {
      inst.fail(w);
    }
  }
  const bool ident = det_identity_check(g);
  inst["det_identity"] = ident;
  inst.expect(ident, "determinant identity fails");
  if (g.r() == 2) inst.gap("r2", r2_inequality(g));
}

} // namespace

std::optional<Mode> mode_from(const std::string& name) {
  for (Mode m : {Mode::discriminant, Mode::volume, Mode::shephard, Mode::torus, Mode::bm, Mode::all}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string mode_name(Mode m) {
  switch (m) {
  case Mode::discriminant: return "discriminant";
  case Mode::volume: return "volume";
  case Mode::shephard: return "shephard";
  case Mode::torus: return "torus";
  case Mode::bm: return "bm";
  case Mode::all: return "all";
  }
  return "?";
}

void validate(const RunConfig& cfg) {
  if (cfg.trials < 1) throw DomainError("--trials must be at least 1");
  if (cfg.entry_bound < 1 || cfg.entry_bound > kEntryBoundLimit) {
    throw DomainError("--entry-bound must lie in [1, " + std::to_string(kEntryBoundLimit) + "]");
  }
  if (cfg.grid < 3) throw DomainError("--grid must be at least 3");
  if (!(cfg.tolerance >= 0)) throw DomainError("--tol must be nonnegative");
  if (cfg.r < 1 || cfg.r > kGramRankLimit) {
    throw DomainError("--r must lie in [1, " + std::to_string(kGramRankLimit) + "]");
  }
  if (cfg.m < 2) throw DomainError("--m must be at least 2");
  if (cfg.n < 2) throw DimensionError("--n must be at least 2");
  const bool volume = cfg.mode == Mode::volume;
  const std::size_t limit = volume ? kMaxBodyDim : kMatrixDimLimit;
  if (cfg.n > limit) {
    throw DimensionError("--n " + std::to_string(cfg.n) + " exceeds the limit " +
                         std::to_string(limit) + " for mode " + mode_name(cfg.mode) +
                         (volume ? "" : " (permutation route of the mixed discriminant)"));
  }
  if (cfg.m > cfg.n) throw DomainError("--m must not exceed --n");
  if (cfg.mode == Mode::bm && cfg.exact_only) {
    throw DomainError("--exact-only excludes --mode bm, whose checks are tolerance based");
  }
}

io::Json config_json(const RunConfig& cfg) {
  Json j = Json::object();
  j["mode"] = mode_name(cfg.mode);
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["n"] = cfg.n;
  j["r"] = cfg.r;
  j["m"] = cfg.m;
  j["tol"] = cfg.tolerance;
  j["entry_bound"] = cfg.entry_bound;
  j["grid"] = cfg.grid;
  j["exact_only"] = cfg.exact_only;
  return j;
}

io::Json RunRecord::summary() const {
  Json s = Json::object();
  s["config"] = config;
  s["instances"] = instances.size();
  s["passed"] = passed;
  s["flagged"] = flagged;
  s["failed"] = failures.size();
  s["equalities"] = equalities;
  s["min_gap"] = min_gap ? io::rat_json(*min_gap) : Json(nullptr);
  Json f = Json::array();
  for (const auto& x : failures) {
    f.push_back(Json::object({{"mode", x.mode}, {"index", x.index}, {"message", x.message}}));
  }
  s["failures"] = std::move(f);
  s["ok"] = ok();
  return Json::object({{"summary", std::move(s)}});
}

std::string RunRecord::jsonl() const {
  std::ostringstream os;
  for (const auto& line : instances) os << line.dump() << '\n';
  os << summary().dump() << '\n';
  return os.str();
}

RunRecord run_suite(const RunConfig& cfg) {
  validate(cfg);
  RunRecord rec;
  rec.config = config_json(cfg);
  std::vector<Mode> modes;
  if (cfg.mode == Mode::all) {
    modes = {Mode::discriminant, Mode::shephard, Mode::torus};
    if (cfg.n <= kMaxBodyDim) modes.insert(modes.begin() + 1, Mode::volume);
    if (!cfg.exact_only) modes.push_back(Mode::bm);
  } else {
    modes = {cfg.mode};
  }
  for (Mode mode : modes) {
    run_indexed(rec, cfg.trials, cfg.exec, [&](std::size_t i) { return run_instance(cfg, mode, i); });
  }
  return rec;
}

RunRecord run_fixtures(const std::vector<io::Fixture>& fixtures, const RunConfig& cfg) {
  RunRecord rec;
  rec.config = config_json(cfg);
  rec.config["source"] = "fixtures";
  run_indexed(rec, fixtures.size(), cfg.exec, [&](std::size_t i) {
    const auto& fx = fixtures[i];
    static constexpr const char* kinds[] = {"matrix", "tuple", "polytope", "gram"};
    Instance inst(kinds[fx.index()], i);
    guarded(inst, [&] {
      if (const auto* a = std::get_if<HermMat>(&fx)) fixture_matrix(*a, inst);
      if (const auto* t = std::get_if<std::vector<HermMat>>(&fx)) fixture_tuple(*t, cfg, inst);
      if (const auto* p = std::get_if<Polytope>(&fx)) fixture_polytope(*p, inst);
      if (const auto* g = std::get_if<GramTable>(&fx)) fixture_gram(*g, inst);
    });
    return inst;
  });
  return rec;
}

} // namespace afkit
