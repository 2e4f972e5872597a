#include "lcgerm/linfeas.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "lcgerm/errors.hpp"

namespace lcgerm {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
  }
  return "?";
}

LinSystem::LinSystem(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw InvariantError("duplicate variable '" + vars_[i] + "'");
    }
  }
}

void LinSystem::add(LinConstraint c) {
  if (vars_.empty()) throw InvariantError("constraint added to a system without variables");
  if (c.coeffs.size() != vars_.size()) {
    throw InvariantError("constraint has " + std::to_string(c.coeffs.size()) + " coefficients, system has " +
                         std::to_string(vars_.size()) + " variables");
  }
  constraints_.push_back(std::move(c));
}

// ---------------------------------------------------------------------------
// Linear forms

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  LinearForm out{a.coeffs, a.constant + b.constant};
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + Rational(-1) * b; }

LinearForm operator*(const Rational& s, const LinearForm& a) {
  LinearForm out{a.coeffs, s * a.constant};
  for (auto& c : out.coeffs) c *= s;
  return out;
}

bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs && a.constant == b.constant; }

namespace {

bool is_constant(const LinearForm& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const Rational& c) { return c == 0; });
}

class FormParser {
 public:
  FormParser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  LinearForm parse_all() {
    LinearForm f = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  LinearForm zero() const { return LinearForm{std::vector<Rational>(vars_.size()), Rational(0)}; }

  LinearForm expr() {
    LinearForm f = zero();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    LinearForm t = term();
    f = negate ? f - t : f + t;
    while (true) {
      if (accept('+')) f = f + term();
      else if (accept('-')) f = f - term();
      else return f;
    }
  }

  LinearForm term() {
    LinearForm f = factor();
    while (accept('*')) {
      const std::size_t at = pos_;
      LinearForm g = factor();
      if (is_constant(f)) f = f.constant * g;
      else if (is_constant(g)) f = g.constant * f;
      else throw ParseError("product of two non-constant terms", at);
    }
    return f;
  }

  LinearForm factor() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LinearForm f = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer num(std::string(s_.substr(start, pos_ - start)));
      Integer den = 1;
      const std::size_t save = pos_;
      if (accept('/')) {
        skip();
        const std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) {
          pos_ = save;  // a '/' not followed by digits is not part of a literal
        } else {
          den = Integer(std::string(s_.substr(ds, pos_ - ds)));
          if (den == 0) throw ParseError("zero denominator", ds);
        }
      }
      Rational q(num, den);
      q.canonicalize();
      LinearForm f = zero();
      f.constant = q;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      LinearForm f = zero();
      f.coeffs[it - vars_.begin()] = 1;
      return f;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LinearForm parse_linear_form(std::string_view text, const std::vector<std::string>& variables) {
  return FormParser(text, variables).parse_all();
}

void LinSystem::add(std::string_view text) {
  static const char* ops[] = {"<=", ">=", "==", "<", ">", "="};
  std::size_t at = std::string_view::npos;
  std::string op;
  for (std::size_t i = 0; i < text.size() && at == std::string_view::npos; ++i) {
    for (const char* o : ops) {
      if (text.substr(i, std::char_traits<char>::length(o)) == o) {
        at = i;
        op = o;
        break;
      }
    }
  }
  if (at == std::string_view::npos) throw ParseError("missing relation", text.size());
  const std::size_t rhs_at = at + op.size();
  LinearForm lhs, rhs;
  try {
    lhs = parse_linear_form(text.substr(0, at), vars_);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in left-hand side: ") + e.what(), e.position());
  }
  try {
    rhs = parse_linear_form(text.substr(rhs_at), vars_);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in right-hand side: ") + e.what(), rhs_at + e.position());
  }
  // lhs op rhs  <=>  (lhs - rhs).coeffs . x  op  -(lhs - rhs).constant
  LinearForm d = lhs - rhs;
  if (op == ">=" || op == ">") d = Rational(-1) * d;
  const Relation rel = (op == "<=" || op == ">=") ? Relation::Le : (op == "<" || op == ">") ? Relation::Lt : Relation::Eq;
  add(LinConstraint{d.coeffs, rel, -d.constant});
}

std::string LinSystem::constraint_text(std::size_t i) const {
  const auto& c = constraints_.at(i);
  std::string out;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    const Rational& a = c.coeffs[k];
    if (a == 0) continue;
    const Rational mag = abs(a);
    if (out.empty()) out += a < 0 ? "-" : "";
    else out += a < 0 ? " - " : " + ";
    if (mag != 1) out += to_display(mag) + "*";
    out += vars_[k];
  }
  if (out.empty()) out = "0";
  return out + " " + to_string(c.rel) + " " + to_display(c.rhs);
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

// a . x  (< if strict, else <=)  b, with the multipliers that produced it.
struct Row {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
  std::vector<Rational> hist;
};

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

// For a row with zero left-hand side: 0 < b or 0 <= b fails?
bool contradictory(const Row& r) { return r.strict ? r.b <= 0 : r.b < 0; }

void scale(Row& r, const Rational& s) {
  for (auto& c : r.a) c *= s;
  r.b *= s;
  for (auto& h : r.hist) h *= s;
}

// Scales so the first nonzero coefficient has absolute value 1.
void normalize(Row& r) {
  for (const auto& c : r.a) {
    if (c != 0) {
      scale(r, 1 / abs(c));
      return;
    }
  }
}

std::vector<Row> initial_rows(const LinSystem& sys) {
  std::vector<Row> rows;
  const std::size_t m = sys.constraints().size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = sys.constraints()[i];
    Row r{c.coeffs, c.rhs, c.rel == Relation::Lt, std::vector<Rational>(m)};
    r.hist[i] = 1;
    if (c.rel == Relation::Eq) {
      Row neg = r;
      scale(neg, Rational(-1));
      rows.push_back(std::move(neg));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// Keeps, for every normalized direction, only the tightest row.
std::vector<Row> prune(std::vector<Row> rows) {
  std::map<std::vector<Rational>, Row> best;
  std::vector<std::vector<Rational>> order;
  for (auto& r : rows) {
    normalize(r);
    auto it = best.find(r.a);
    if (it == best.end()) {
      order.push_back(r.a);
      best.emplace(r.a, std::move(r));
      continue;
    }
    Row& cur = it->second;
    if (r.b < cur.b || (r.b == cur.b && r.strict && !cur.strict)) cur = std::move(r);
  }
  std::vector<Row> out;
  for (const auto& key : order) out.push_back(std::move(best.at(key)));
  return out;
}

Rational choose_value(const std::optional<Rational>& lo, bool lo_strict, const std::optional<Rational>& hi,
                      bool hi_strict) {
  auto fits = [&](const Rational& v) {
    if (lo && (lo_strict ? v <= *lo : v < *lo)) return false;
    if (hi && (hi_strict ? v >= *hi : v > *hi)) return false;
    return true;
  };
  if (fits(Rational(0))) return 0;
  if (lo && !lo_strict && fits(*lo)) return *lo;
  if (hi && !hi_strict && fits(*hi)) return *hi;
  if (lo && hi) return (*lo + *hi) / 2;
  if (lo) return *lo + 1;
  return *hi - 1;
}

}  // namespace

FeasibilityResult is_feasible(const LinSystem& sys, const std::vector<int>& order_in) {
  const std::size_t n = sys.arity();
  if (n == 0 && !sys.constraints().empty()) throw InvariantError("system has constraints but no variables");
  for (const auto& c : sys.constraints()) {
    if (c.coeffs.size() != n) throw InvariantError("constraint arity does not match the variables");
  }
  std::vector<int> order = order_in;
  if (order.empty()) {
    for (std::size_t i = 0; i < n; ++i) order.push_back(static_cast<int>(i));
  }
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != n || sorted[i] != static_cast<int>(i)) {
        throw InvariantError("elimination order is not a permutation of the variables");
      }
    }
  }

  FeasibilityResult result;
  auto check_constants = [&](std::vector<Row>& rows) {
    std::vector<Row> kept;
    for (auto& r : rows) {
      if (!all_zero(r.a)) {
        kept.push_back(std::move(r));
        continue;
      }
      if (contradictory(r)) {
        result.certificate = r.hist;
        return true;
      }
    }
    rows = std::move(kept);
    return false;
  };

  std::vector<Row> rows = initial_rows(sys);
  if (check_constants(rows)) return result;
  rows = prune(std::move(rows));

  std::vector<std::vector<Row>> stages;
  for (int v : order) {
    stages.push_back(rows);
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[v] > 0) pos.push_back(std::move(r));
      else if (r.a[v] < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Rational lp = -q.a[v], lq = p.a[v];
        Row c{std::vector<Rational>(n), lp * p.b + lq * q.b, p.strict || q.strict, std::vector<Rational>(p.hist.size())};
        for (std::size_t k = 0; k < n; ++k) c.a[k] = lp * p.a[k] + lq * q.a[k];
        c.a[v] = 0;
        for (std::size_t k = 0; k < c.hist.size(); ++k) c.hist[k] = lp * p.hist[k] + lq * q.hist[k];
        next.push_back(std::move(c));
      }
    }
    if (check_constants(next)) return result;
    rows = prune(std::move(next));
  }

  result.feasible = true;
  result.witness.assign(n, Rational(0));
  for (std::size_t s = order.size(); s-- > 0;) {
    const int v = order[s];
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : stages[s]) {
      if (r.a[v] == 0) continue;
      Rational rest = r.b;
      for (std::size_t k = 0; k < n; ++k) {
        if (static_cast<int>(k) != v) rest -= r.a[k] * result.witness[k];
      }
      const Rational bound = rest / r.a[v];
      if (r.a[v] > 0) {
        if (!hi || bound < *hi || (bound == *hi && r.strict)) {
          hi_strict = r.strict || (hi && bound == *hi && hi_strict);
          hi = bound;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo_strict = r.strict || (lo && bound == *lo && lo_strict);
          lo = bound;
        }
      }
    }
    result.witness[v] = choose_value(lo, lo_strict, hi, hi_strict);
  }
  return result;
}

bool verify_certificate(const LinSystem& sys, const std::vector<Rational>& multipliers) {
  const auto& cs = sys.constraints();
  if (multipliers.size() != cs.size()) return false;
  std::vector<Rational> lhs(sys.arity());
  Rational rhs = 0;
  bool strict_used = false;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Rational& l = multipliers[i];
    if (cs[i].rel != Relation::Eq && l < 0) return false;
    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += l * cs[i].coeffs[k];
    rhs += l * cs[i].rhs;
    strict_used = strict_used || (cs[i].rel == Relation::Lt && l > 0);
  }
  if (!all_zero(lhs)) return false;
  return rhs < 0 || (rhs == 0 && strict_used);
}

bool verify_witness(const LinSystem& sys, const std::vector<Rational>& point) {
  if (point.size() != sys.arity()) return false;
  for (const auto& c : sys.constraints()) {
    Rational v = 0;
    for (std::size_t k = 0; k < point.size(); ++k) v += c.coeffs[k] * point[k];
    const bool ok = c.rel == Relation::Le ? v <= c.rhs : c.rel == Relation::Lt ? v < c.rhs : v == c.rhs;
    if (!ok) return false;
  }
  return true;
}

}  // namespace lcgerm
