#include "lcgerm/fuzz.hpp"

#include <algorithm>
#include <thread>

#include "detrand.hpp"
#include "lcgerm/config.hpp"
#include "lcgerm/errors.hpp"

namespace lcgerm {

namespace {

using detail::uniform;

class Drawer {
 public:
  Drawer(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {}

  LocalConfig next() {
    while (true) {
      try {
        return draw();
      } catch (const InvariantError&) {
        // Shared components or a degenerate change of coordinates: redraw.
      }
    }
  }

 private:
  long pick(long lo, long hi) { return uniform(rng_, lo, hi); }

  // p/q in [0, max] with q <= bound.
  // A denominator with no positive numerator under the cap is redrawn.
  Rational coefficient(bool positive) {
    while (true) {
      const long q = pick(1, spec_.coefficient_bound);
      const Rational top_r = spec_.max_coefficient * q;
      const Integer top_i = top_r.get_num() / top_r.get_den();
      const long top = std::min<long>(top_i.get_si(), spec_.coefficient_bound * q);
      if (positive && top < 1) continue;
      return frac(pick(positive ? 1 : 0, top), q);
    }
  }

  Rational nonzero_small() {
    long p = 0;
    while (p == 0) p = pick(-3, 3);
    return frac(p, pick(1, 3));
  }

  BivarPoly family_member(int family) {
    const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
    switch (family) {
      case 0: {
        // y - (c_k x^k + c_{k+1} x^{k+1} + ...)
        const int k = static_cast<int>(pick(1, spec_.max_order));
        BivarPoly q = BivarPoly::monomial(nullptr, Elem(nonzero_small()), k, 0);
        const int extra = static_cast<int>(pick(0, 2));
        for (int i = 1; i <= extra; ++i) {
          const long c = pick(-2, 2);
          if (c != 0) q = q + BivarPoly::monomial(nullptr, Elem(c), k + i, 0);
        }
        return y - q;
      }
      case 1: {
        const int s = static_cast<int>(pick(1, std::max(1, spec_.max_order / 2)));
        return y * y - BivarPoly::monomial(nullptr, Elem(nonzero_small()), 2 * s + 1, 0);
      }
      default: {
        const int s = static_cast<int>(pick(1, std::max(1, spec_.max_order / 2)));
        const Rational c = nonzero_small();
        return y * y - BivarPoly::monomial(nullptr, Elem(Rational(c * c)), 2 * s, 0);
      }
    }
  }

  BivarPoly component() {
    const auto& w = spec_.weights;
    const long total = w.branch + w.cusp + w.tacnode;
    long r = pick(0, total - 1);
    const int family = r < w.branch ? 0 : r < w.branch + w.cusp ? 1 : 2;
    BivarPoly f = family_member(family);
    if (pick(0, total + w.swapped - 1) >= total) f = f.linear_substitution(Elem(0), Elem(1), Elem(1), Elem(0));
    return f;
  }

  LocalConfig draw() {
    BivarPoly d1 = BivarPoly::x(), d2 = BivarPoly::y();
    std::vector<BivarPoly> polys;
    const int n = static_cast<int>(pick(1, spec_.max_components));
    for (int i = 0; i < n; ++i) polys.push_back(component());
    const Rational a1 = coefficient(false), a2 = coefficient(false);
    std::vector<Rational> cs;
    for (int i = 0; i < n; ++i) cs.push_back(coefficient(true));
    if (spec_.shear) {
      Elem m[4];
      do {
        for (auto& e : m) e = Elem(frac(pick(-2, 2), pick(1, 2)));
        m[0] = m[0] + Elem(1);
        m[3] = m[3] + Elem(1);
      } while ((m[0] * m[3] - m[1] * m[2]).is_zero());
      auto sub = [&](const BivarPoly& f) { return f.linear_substitution(m[0], m[1], m[2], m[3]); };
      d1 = sub(d1);
      d2 = sub(d2);
      for (auto& f : polys) f = sub(f);
    }
    std::vector<WeightedGerm::Component> comps;
    for (int i = 0; i < n; ++i) comps.push_back({CurveGerm(polys[i]), cs[i]});
    return LocalConfig(CurveGerm(d1), CurveGerm(d2), a1, a2, WeightedGerm(std::move(comps)));
  }

  const GenSpec& spec_;
  std::mt19937_64 rng_;
};

struct Outcome {
  bool lc = false;
  enum class Status { Asserted, Vacuous, Lc };
  Status adjunction = Status::Lc, main = Status::Lc, kosta = Status::Lc, kosta_original = Status::Lc;
  long kosta_instances = 0, kosta_original_instances = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // theorem, detail
};

std::string describe(const Conclusion& c) {
  std::string out;
  for (const auto& b : c.disjuncts) {
    if (!out.empty()) out += " or ";
    out += b.label + " = " + to_display(b.value) + " > " + to_display(b.threshold);
  }
  return out + " fails";
}

std::string describe(const KostaParams& p) {
  return "(alpha, beta, A, B, M, N) = (" + to_display(p.alpha) + ", " + to_display(p.beta) + ", " + to_display(p.A) +
         ", " + to_display(p.B) + ", " + to_display(p.M) + ", " + to_display(p.N) + "): ";
}

Outcome evaluate(const LocalConfig& cfg, const std::vector<KostaParams>& pool) {
  Outcome o;
  LocalAnalysis a;
  try {
    a = analyze(cfg);
  } catch (const InvariantError& e) {
    o.failures.push_back({"oracle", e.what()});
    return o;
  }
  o.lc = a.lc.is_lc;
  if (o.lc) return o;
  using S = Outcome::Status;

  o.adjunction = S::Vacuous;
  for (int which : {1, 2}) {
    try {
      const auto c = adjunction_conclusion(cfg, which, a);
      o.adjunction = S::Asserted;
      if (!c.holds()) o.failures.push_back({"adjunction", "delta" + std::to_string(which) + ": " + describe(c)});
    } catch (const HypothesisNotMet&) {
    }
  }

  o.main = S::Vacuous;
  try {
    const auto c = main_conclusion(cfg, a);
    o.main = S::Asserted;
    if (!c.holds()) o.failures.push_back({"main", describe(c)});
  } catch (const HypothesisNotMet&) {
  }

  o.kosta = S::Vacuous;
  for (const auto& p : pool) {
    try {
      const auto c = kosta_conclusion(cfg, p, a);
      o.kosta = S::Asserted;
      ++o.kosta_instances;
      if (!c.holds()) o.failures.push_back({"kosta", describe(p) + describe(c)});
    } catch (const HypothesisNotMet&) {
    }
  }

  o.kosta_original = S::Vacuous;
  for (long n : {3L, 4L, 5L}) {
    try {
      const auto c = kosta_original_conclusion(cfg, n, a);
      o.kosta_original = S::Asserted;
      ++o.kosta_original_instances;
      if (!c.holds()) o.failures.push_back({"kosta-original", "n = " + std::to_string(n) + ": " + describe(c)});
    } catch (const HypothesisNotMet&) {
    }
  }
  return o;
}

void tally(TheoremTally& t, Outcome::Status s) {
  switch (s) {
    case Outcome::Status::Asserted: ++t.asserted; break;
    case Outcome::Status::Vacuous: ++t.vacuous; break;
    case Outcome::Status::Lc: ++t.lc; break;
  }
}

}  // namespace

std::vector<LocalConfig> generate(const GenSpec& spec) {
  if (spec.count < 0 || spec.max_components < 1 || spec.coefficient_bound < 1 || spec.max_order < 1 ||
      spec.max_coefficient < 0) {
    throw InvariantError("invalid generator spec");
  }
  if (spec.max_coefficient * spec.coefficient_bound < 1) {
    throw InvariantError("max_coefficient leaves no positive p/q with q <= coefficient_bound");
  }
  const auto& w = spec.weights;
  if (w.branch < 0 || w.cusp < 0 || w.tacnode < 0 || w.swapped < 0 || w.branch + w.cusp + w.tacnode == 0) {
    throw InvariantError("invalid family weights");
  }
  Drawer d(spec);
  std::vector<LocalConfig> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (long i = 0; i < spec.count; ++i) out.push_back(d.next());
  return out;
}

std::vector<KostaParams> kosta_param_pool(std::uint64_t seed) {
  std::vector<KostaParams> fixed;
  for (long m : {2, 3}) {
    for (long k : {2, 3}) fixed.push_back({1, 1, frac(1, k * m - 1), Rational(k * m), 1, 0});
  }
  fixed.push_back({1, 1, 1, 2, 1, 0});

  std::vector<KostaParams> grid;
  const Rational weights[] = {frac(1, 2), 1, 2};
  const Rational as[] = {frac(1, 3), frac(1, 2), 1, 2};
  const Rational bs[] = {2, 3, 4, 6};
  const Rational ms[] = {0, frac(1, 2), 1};
  for (const auto& alpha : weights)
    for (const auto& beta : weights)
      for (const auto& A : as)
        for (const auto& B : bs)
          for (const auto& M : ms)
            for (const auto& N : ms) {
              const KostaParams p{alpha, beta, A, B, M, N};
              if (kosta_hypotheses(p, 0, 0).holds()) grid.push_back(p);
            }
  std::mt19937_64 rng(seed);
  detail::shuffle(grid, rng);
  grid.resize(std::min<std::size_t>(grid.size(), 8));
  fixed.insert(fixed.end(), grid.begin(), grid.end());
  return fixed;
}

CampaignReport run_campaign(const GenSpec& spec) {
  const auto configs = generate(spec);
  const auto pool = kosta_param_pool(spec.seed);
  std::vector<Outcome> outcomes(configs.size());
  unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(configs.size(), 1))));
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < configs.size(); i += threads) outcomes[i] = evaluate(configs[i], pool);
    });
  }
  for (auto& w : workers) w.join();

  CampaignReport r;
  r.spec = spec;
  r.generated = static_cast<long>(configs.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    (o.lc ? r.lc : r.not_lc)++;
    tally(r.adjunction, o.adjunction);
    tally(r.main, o.main);
    tally(r.kosta, o.kosta);
    tally(r.kosta_original, o.kosta_original);
    r.kosta_instances += o.kosta_instances;
    r.kosta_original_instances += o.kosta_original_instances;
    for (const auto& [theorem, detail] : o.failures) {
      TheoremTally* t = theorem == "adjunction"            ? &r.adjunction
                        : theorem == "main"           ? &r.main
                        : theorem == "kosta"          ? &r.kosta
                        : theorem == "kosta-original" ? &r.kosta_original
                                                           : nullptr;
      if (t) ++t->failures;
      r.failures.push_back({static_cast<long>(i), theorem, detail, config_to_json(to_config_file(configs[i]))});
    }
  }
  return r;
}

}  // namespace lcgerm
