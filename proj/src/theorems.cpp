#include "lcgerm/theorems.hpp"

#include <algorithm>

#include "lcgerm/errors.hpp"

namespace lcgerm {

LocalConfig::LocalConfig(CurveGerm delta1, CurveGerm delta2, Rational a1, Rational a2, WeightedGerm omega)
    : delta1_(std::move(delta1)),
      delta2_(std::move(delta2)),
      a1_(std::move(a1)),
      a2_(std::move(a2)),
      omega_(std::move(omega)) {
  if (!is_smooth_at_origin(delta1_) || !is_smooth_at_origin(delta2_)) {
    throw InvariantError("delta1 and delta2 must be smooth at the origin");
  }
  if (!are_transverse_at_origin(delta1_, delta2_)) throw InvariantError("delta1 and delta2 must be transverse");
  if (a1_ < 0 || a2_ < 0) throw InvariantError("a1 and a2 must be non-negative");
  for (const auto& c : omega_.components()) {
    if (!are_coprime(c.germ.poly(), delta1_.poly()) || !are_coprime(c.germ.poly(), delta2_.poly())) {
      throw InvariantError("omega component " + c.germ.poly().to_string() + " shares a component with a delta");
    }
  }
}

LocalAnalysis analyze(const LocalConfig& cfg, const TreeOptions& options) {
  std::vector<CurveGerm> germs{cfg.delta1(), cfg.delta2()};
  std::vector<Rational> coeffs{cfg.a1(), cfg.a2()};
  for (const auto& c : cfg.omega().components()) {
    germs.push_back(c.germ);
    coeffs.push_back(c.coefficient);
  }
  const auto tree = build_tree(germs, options);
  LocalAnalysis out;
  out.lc = lc_report(tree, coeffs);
  out.m = total_mult(cfg.omega());
  for (std::size_t j = 2; j < germs.size(); ++j) {
    out.omega_delta1 += coeffs[j] * Rational(noether_pair(tree, 0, static_cast<int>(j)));
    out.omega_delta2 += coeffs[j] * Rational(noether_pair(tree, 1, static_cast<int>(j)));
  }
  return out;
}

bool Conclusion::holds() const {
  return std::any_of(disjuncts.begin(), disjuncts.end(), [](const Bound& b) { return b.holds(); });
}

namespace {

void require_not_lc(const LcReport& lc) {
  if (lc.is_lc) throw HypothesisNotMet("pair is log canonical at the origin");
}

void require_n(long n) {
  if (n < 3) throw InvariantError("n must be at least 3, got " + std::to_string(n));
}

}  // namespace

Conclusion adjunction_conclusion(const CurveGerm& delta, const Rational& a, const WeightedGerm& omega,
                                 const TreeOptions& options) {
  if (!is_smooth_at_origin(delta)) throw InvariantError("delta must be smooth at the origin");
  if (a < 0) throw InvariantError("a must be non-negative");
  if (a > 1) throw HypothesisNotMet("a = " + to_display(a) + " exceeds 1");
  std::vector<CurveGerm> germs{delta};
  std::vector<Rational> coeffs{a};
  for (const auto& c : omega.components()) {
    if (!are_coprime(c.germ.poly(), delta.poly())) {
      throw InvariantError("omega component " + c.germ.poly().to_string() + " shares a component with delta");
    }
    germs.push_back(c.germ);
    coeffs.push_back(c.coefficient);
  }
  const auto tree = build_tree(germs, options);
  require_not_lc(lc_report(tree, coeffs));
  Rational value = 0;
  for (std::size_t j = 1; j < germs.size(); ++j) value += coeffs[j] * Rational(noether_pair(tree, 0, static_cast<int>(j)));
  return Conclusion{{Bound{"mult(omega.delta)", value, Rational(1)}}};
}

Conclusion adjunction_conclusion(const LocalConfig& cfg, int which, const LocalAnalysis& analysis) {
  if (which != 1 && which != 2) throw InvariantError("delta index must be 1 or 2");
  const Rational& a = which == 1 ? cfg.a1() : cfg.a2();
  const Rational& other = which == 1 ? cfg.a2() : cfg.a1();
  if (a > 1) throw HypothesisNotMet("a = " + to_display(a) + " exceeds 1");
  require_not_lc(analysis.lc);
  // The deltas meet transversally, so the moved delta contributes its coefficient.
  const Rational value = other + (which == 1 ? analysis.omega_delta1 : analysis.omega_delta2);
  return Conclusion{{Bound{which == 1 ? "mult(omega.delta1)" : "mult(omega.delta2)", value, Rational(1)}}};
}

bool kosta_original_hypothesis(const Rational& a1, const Rational& a2, long n) {
  require_n(n);
  return frac(2 * n - 2, n + 1) * a1 + frac(2, n + 1) * a2 <= 1;
}

Conclusion kosta_original_conclusion(const LocalConfig& cfg, long n, const LocalAnalysis& analysis) {
  if (!kosta_original_hypothesis(cfg.a1(), cfg.a2(), n)) {
    throw HypothesisNotMet("(2n-2)/(n+1) a1 + 2/(n+1) a2 exceeds 1");
  }
  require_not_lc(analysis.lc);
  return Conclusion{{
      Bound{"mult(omega.delta1)", analysis.omega_delta1, 2 * cfg.a1() - cfg.a2()},
      Bound{"mult(omega.delta2)", analysis.omega_delta2, frac(n, n - 1) * cfg.a2() - cfg.a1()},
  }};
}

Conclusion kosta_original_conclusion(const LocalConfig& cfg, long n, const TreeOptions& options) {
  require_n(n);
  return kosta_original_conclusion(cfg, n, analyze(cfg, options));
}

const std::array<const char*, 7> KostaCheck::kClauseText = {
    "alpha*a1 + beta*a2 <= 1",
    "A*(B - 1) >= 1",
    "M <= 1",
    "N <= 1",
    "alpha*(A + M - 1) >= A^2*(B + N - 1)*beta",
    "alpha*(1 - M) + A*beta >= A",
    "2*M + A*N <= 2 or alpha*(B + 1 - M*B - N) + beta*(A + 1 - A*N - M) >= A*B - 1",
};

bool KostaCheck::holds() const { return std::all_of(clauses.begin(), clauses.end(), [](bool b) { return b; }); }

KostaCheck kosta_hypotheses(const KostaParams& p, const Rational& a1, const Rational& a2) {
  for (const Rational* v : {&p.alpha, &p.beta, &p.A, &p.B, &p.M, &p.N}) {
    if (*v < 0) throw InvariantError("Kosta parameters must be non-negative");
  }
  const auto& [alpha, beta, A, B, M, N] = p;
  KostaCheck k;
  k.clauses[0] = alpha * a1 + beta * a2 <= 1;
  k.clauses[1] = A * (B - 1) >= 1;
  k.clauses[2] = M <= 1;
  k.clauses[3] = N <= 1;
  k.clauses[4] = alpha * (A + M - 1) >= A * A * (B + N - 1) * beta;
  k.clauses[5] = alpha * (1 - M) + A * beta >= A;
  k.clauses[6] = 2 * M + A * N <= 2 || alpha * (B + 1 - M * B - N) + beta * (A + 1 - A * N - M) >= A * B - 1;
  return k;
}

Conclusion kosta_conclusion(const LocalConfig& cfg, const KostaParams& p, const LocalAnalysis& analysis) {
  const auto check = kosta_hypotheses(p, cfg.a1(), cfg.a2());
  if (!check.holds()) {
    std::string failed;
    for (std::size_t i = 0; i < check.clauses.size(); ++i) {
      if (!check.clauses[i]) failed += (failed.empty() ? "c" : ", c") + std::to_string(i + 1);
    }
    throw HypothesisNotMet("parameter clauses fail: " + failed);
  }
  require_not_lc(analysis.lc);
  return Conclusion{{
      Bound{"mult(omega.delta1)", analysis.omega_delta1, p.M + p.A * cfg.a1() - cfg.a2()},
      Bound{"mult(omega.delta2)", analysis.omega_delta2, p.N + p.B * cfg.a2() - cfg.a1()},
  }};
}

Conclusion kosta_conclusion(const LocalConfig& cfg, const KostaParams& p, const TreeOptions& options) {
  if (!kosta_hypotheses(p, cfg.a1(), cfg.a2()).holds()) return kosta_conclusion(cfg, p, LocalAnalysis{});
  return kosta_conclusion(cfg, p, analyze(cfg, options));
}

Conclusion main_conclusion(const LocalConfig& cfg, const LocalAnalysis& analysis) {
  if (analysis.m > 1) throw HypothesisNotMet("mult(omega) = " + to_display(analysis.m) + " exceeds 1");
  require_not_lc(analysis.lc);
  return Conclusion{{
      Bound{"mult(omega.delta1)", analysis.omega_delta1, 2 * (1 - cfg.a2())},
      Bound{"mult(omega.delta2)", analysis.omega_delta2, 2 * (1 - cfg.a1())},
  }};
}

Conclusion main_conclusion(const LocalConfig& cfg, const TreeOptions& options) {
  if (total_mult(cfg.omega()) > 1) {
    throw HypothesisNotMet("mult(omega) = " + to_display(total_mult(cfg.omega())) + " exceeds 1");
  }
  return main_conclusion(cfg, analyze(cfg, options));
}

bool in_dominance_region(const Rational& a1, const Rational& a2, const Rational& m, long n) {
  require_n(n);
  return a1 >= 0 && a2 >= 0 && m >= 0 && 2 * a1 - a2 >= m && frac(n, n - 1) * a2 - a1 >= m &&
         frac(2 * n - 2, n + 1) * a1 + frac(2, n + 1) * a2 <= 1;
}

bool DominanceReport::holds() const {
  return delta1_dominates && delta2_dominates && a1_at_most_half && a2_at_most_one && m_at_most_one;
}

DominanceReport dominance_in_region(const Rational& a1, const Rational& a2, const Rational& m, long n) {
  if (!in_dominance_region(a1, a2, m, n)) throw HypothesisNotMet("point lies outside the region: not applicable");
  DominanceReport r;
  r.delta1_dominates = 2 * (1 - a2) >= 2 * a1 - a2;
  r.delta2_dominates = 2 * (1 - a1) >= frac(2 * n - 2, n + 1) * a1 + frac(2, n + 1) * a2;
  r.delta2_dominates_bound = 2 * (1 - a1) >= frac(n, n - 1) * a2 - a1;
  r.a1_at_most_half = a1 <= frac(1, 2);
  r.a2_at_most_one = a2 <= 1;
  r.m_at_most_one = m <= 1;
  return r;
}

std::vector<RegionPoint> dominance_region_grid(long n, std::size_t min_points) {
  require_n(n);
  // With a1 = i/q, a2 = j/q, m = k/q the region is
  //   2i - j >= k,  n j - (n-1) i >= (n-1) k,  (2n-2) i + 2 j <= (n+1) q.
  for (long q = 1;; ++q) {
    std::vector<RegionPoint> out;
    for (long i = 0; (2 * n - 2) * i <= (n + 1) * q; ++i) {
      for (long j = 0; (2 * n - 2) * i + 2 * j <= (n + 1) * q; ++j) {
        for (long k = 0; k <= 2 * i - j && (n - 1) * k <= n * j - (n - 1) * i; ++k) {
          out.push_back({frac(i, q), frac(j, q), frac(k, q)});
        }
      }
    }
    if (out.size() >= min_points) {
      for (auto& p : out) {
        p.a1.canonicalize();
        p.a2.canonicalize();
        p.m.canonicalize();
      }
      return out;
    }
  }
}

}  // namespace lcgerm
