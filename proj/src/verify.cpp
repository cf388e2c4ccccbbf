#include "ddm/verify.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <unordered_map>

namespace ddm {

using Json = nlohmann::ordered_json;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "FAIL";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

void Check::record_fail(Json w) {
  if (verdict != Verdict::Fail) witness = std::move(w);
  verdict = Verdict::Fail;
}

void Check::record_inconclusive(Json w) {
  if (verdict == Verdict::Pass) {
    witness = std::move(w);
    verdict = Verdict::Inconclusive;
  }
}

Json Check::to_json() const {
  Json j;
  j["check"] = name;
  j["verdict"] = to_string(verdict);
  j["cases"] = cases;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

Check& Report::add(std::string check_name) {
  Check c;
  c.name = std::move(check_name);
  checks.push_back(std::move(c));
  return checks.back();
}

Verdict Report::verdict() const {
  Verdict v = Verdict::Pass;
  for (const Check& c : checks) v = combine(v, c.verdict);
  return v;
}

Json Report::to_json() const {
  Json j;
  j["report"] = name;
  j["verdict"] = to_string(verdict());
  j["surrogate"] = surrogate;
  j["checks"] = Json::array();
  for (const Check& c : checks) j["checks"].push_back(c.to_json());
  if (!not_finitely_decidable.empty()) j["not_finitely_decidable"] = not_finitely_decidable;
  return j;
}

// ---------------------------------------------------------------------------------------------

struct SetFunctionHandle::State {
  std::string label;
  Alphabet alphabet;
  Evaluator evaluator;
  std::mutex mutex;
  std::unordered_map<std::string, Rational> cache;
};

SetFunctionHandle::SetFunctionHandle(std::string label, Alphabet alphabet, Evaluator evaluator)
    : state_(std::make_shared<State>()) {
  state_->label = std::move(label);
  state_->alphabet = alphabet;
  state_->evaluator = std::move(evaluator);
  if ((*this)(WindowSet::empty(alphabet)) != 0)
    fail(ErrorKind::InvalidInput, "set function '" + state_->label + "' is nonzero on the empty set");
}

Rational SetFunctionHandle::operator()(const WindowSet& s) const {
  const std::string key = to_literal(s);
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->cache.find(key);
    if (it != state_->cache.end()) return it->second;
  }
  Rational value = state_->evaluator(s);
  std::lock_guard lock(state_->mutex);
  state_->cache.emplace(key, value);
  return value;
}

const std::string& SetFunctionHandle::label() const { return state_->label; }
Alphabet SetFunctionHandle::alphabet() const { return state_->alphabet; }

SetFunctionHandle SetFunctionHandle::measure(const CylinderMeasure& mu) {
  return SetFunctionHandle("eval0(" + mu.describe() + ")", mu.alphabet(),
                           [mu](const WindowSet& s) { return eval0(mu, s); });
}

namespace {

std::string config_label(const TruncationConfig& cfg) {
  return "D=" + std::to_string(cfg.depth) + ",W=" + std::to_string(cfg.width) + ",i=" + std::to_string(cfg.shift);
}

}  // namespace

SetFunctionHandle SetFunctionHandle::truncated_phi(const CylinderMeasure& phi, const TruncationConfig& cfg,
                                                   const EngineLimits& limits) {
  return SetFunctionHandle("phi_truncated(" + phi.describe() + ";" + config_label(cfg) + ")", phi.alphabet(),
                           [phi, cfg, limits](const WindowSet& s) { return phi_truncated(s, phi, cfg, limits).value; });
}

SetFunctionHandle SetFunctionHandle::budgeted_psi(const CylinderMeasure& psi, const CylinderMeasure& phi,
                                                  const Rational& budget, const TruncationConfig& cfg,
                                                  const EngineLimits& limits) {
  return SetFunctionHandle(
      "psi_budgeted(" + psi.describe() + ";" + phi.describe() + "<" + to_string(budget) + ";" + config_label(cfg) + ")",
      psi.alphabet(), [psi, phi, budget, cfg, limits](const WindowSet& s) {
        auto cert = psi_budgeted({s, psi, {{phi, budget}}, cfg}, limits);
        if (!cert) fail(ErrorKind::InvalidInput, "budgeted psi infeasible on " + to_literal(s));
        return cert->value;
      });
}

SetFunctionHandle SetFunctionHandle::psi_family_member(const CylinderMeasure& psi, const CylinderMeasure& phi,
                                                       const Rational& eps, const TruncationConfig& cfg,
                                                       const EngineLimits& limits) {
  return SetFunctionHandle(
      "psi_eps(" + psi.describe() + ";" + phi.describe() + ";eps=" + to_string(eps) + ";" + config_label(cfg) + ")",
      psi.alphabet(), [psi, phi, eps, cfg, limits](const WindowSet& s) {
        const Rational budget = phi_truncated(s, phi, cfg, limits).value + eps;
        auto cert = psi_budgeted({s, psi, {{phi, budget}}, cfg}, limits);
        if (!cert) fail(ErrorKind::InvalidInput, "psi family member infeasible on " + to_literal(s));
        return cert->value;
      });
}

// ---------------------------------------------------------------------------------------------

namespace {

Window span_of(const std::vector<WindowSet>& sets) {
  std::optional<Window> span;
  for (const WindowSet& s : sets) {
    if (!s.window()) continue;
    if (!span) span = *s.window();
    else span = Window{std::min(span->lo, s.window()->lo), std::max(span->hi, s.window()->hi)};
  }
  return span.value_or(Window{0, 0});
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Alphabet alphabet, std::vector<WindowSet> generators)
    : alphabet_(alphabet), generators_(std::move(generators)) {
  atoms_.push_back(WindowSet::full(alphabet));
  for (const WindowSet& g : generators_) {
    if (g.alphabet() != alphabet) fail(ErrorKind::InvalidInput, "generator alphabet differs from algebra");
    std::vector<WindowSet> next;
    for (const WindowSet& a : atoms_) {
      WindowSet in = set_intersection(a, g);
      WindowSet out = set_difference(a, g);
      if (!in.is_empty()) next.push_back(std::move(in));
      if (!out.is_empty()) next.push_back(std::move(out));
    }
    atoms_ = std::move(next);
  }
  if (std::any_of(atoms_.begin(), atoms_.end(), [](const WindowSet& a) { return !a.is_degenerate(); }))
    common_window_ = span_of(atoms_);
}

FiniteAlgebra FiniteAlgebra::window_algebra(Alphabet alphabet, Window window) {
  std::vector<WindowSet> generators;
  for (int j = window.lo; j <= window.hi; ++j)
    for (Symbol a = 0; a + 1 < alphabet.size; ++a) {
      const Symbol word[] = {a};
      generators.push_back(WindowSet::cylinder(alphabet, j, word));
    }
  return FiniteAlgebra(alphabet, std::move(generators));
}

WindowSet FiniteAlgebra::element(const boost::dynamic_bitset<>& mask) const {
  if (mask.size() != atoms_.size()) fail(ErrorKind::InvalidInput, "atom mask has the wrong size");
  if (!common_window_) return mask.any() ? WindowSet::full(alphabet_) : WindowSet::empty(alphabet_);
  boost::dynamic_bitset<> bits(word_count(alphabet_, *common_window_));
  for (std::size_t k = mask.find_first(); k != boost::dynamic_bitset<>::npos; k = mask.find_next(k))
    bits |= refine(atoms_[k], *common_window_).bits();
  return WindowSet::from_bits(alphabet_, *common_window_, std::move(bits));
}

bool FiniteAlgebra::contains(const WindowSet& s) const {
  boost::dynamic_bitset<> mask(atoms_.size());
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (is_subset(atoms_[k], s)) mask.set(k);
  return element(mask) == s;
}

std::vector<WindowSet> FiniteAlgebra::test_sets(std::size_t max_count, std::uint64_t seed) const {
  std::vector<WindowSet> out;
  const std::size_t k = atoms_.size();
  if (k < 20 && (std::size_t{1} << k) <= max_count) {
    for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) out.push_back(element(boost::dynamic_bitset<>(k, m)));
    return out;
  }
  auto push = [&](WindowSet s) {
    if (out.size() < max_count) out.push_back(std::move(s));
  };
  push(WindowSet::empty(alphabet_));
  push(WindowSet::full(alphabet_));
  for (const WindowSet& g : generators_) push(g.canonical());
  for (const WindowSet& g : generators_) push(complement(g));
  for (const WindowSet& a : atoms_) push(a);
  std::mt19937_64 rng(seed);
  while (out.size() < max_count) {
    boost::dynamic_bitset<> mask(k);
    for (std::size_t b = 0; b < k; ++b)
      if (rng() & 1U) mask.set(b);
    out.push_back(element(mask));
  }
  return out;
}

std::string FiniteAlgebra::describe() const {
  std::string s = "finite algebra with " + std::to_string(generators_.size()) + " generators and " +
                  std::to_string(atoms_.size()) + " atoms";
  if (common_window_)
    s += " on [" + std::to_string(common_window_->lo) + "," + std::to_string(common_window_->hi) + "]";
  return s;
}

// ---------------------------------------------------------------------------------------------

MeasurabilityResult caratheodory_measurable(const SetFunctionHandle& mu, const WindowSet& a,
                                            const std::vector<WindowSet>& tests) {
  MeasurabilityResult r;
  for (const WindowSet& q : tests) {
    ++r.tested;
    const Rational whole = mu(q);
    const Rational inside = mu(set_intersection(q, a));
    const Rational outside = mu(set_difference(q, a));
    if (whole != inside + outside) {
      r.measurable = false;
      r.counterexample = q;
      r.whole = whole;
      r.inside = inside;
      r.outside = outside;
      return r;
    }
  }
  return r;
}

MeasurabilityResult caratheodory_measurable(const SetFunctionHandle& mu, const WindowSet& a,
                                            const FiniteAlgebra& tests, std::size_t max_tests, std::uint64_t seed) {
  return caratheodory_measurable(mu, a, tests.test_sets(max_tests, seed));
}

namespace {

Json split_witness(const WindowSet& a, const MeasurabilityResult& r) {
  Json w;
  w["A"] = to_literal(a);
  w["Q"] = to_literal(*r.counterexample);
  w["mu(Q)"] = to_string(r.whole);
  w["mu(Q&A)"] = to_string(r.inside);
  w["mu(Q\\A)"] = to_string(r.outside);
  return w;
}

}  // namespace

Report check_measurable_family(const SetFunctionHandle& mu, const FiniteAlgebra& algebra,
                               const std::vector<WindowSet>& candidates, std::size_t max_tests,
                               std::size_t max_pairs, std::uint64_t seed) {
  Report report;
  report.name = "measurable family of " + mu.label();
  report.surrogate = algebra.describe() + ", " + std::to_string(max_tests) + " test sets";
  const std::vector<WindowSet> tests = algebra.test_sets(max_tests, seed);

  auto measurable = [&](Check& check, const WindowSet& a) {
    ++check.cases;
    const MeasurabilityResult r = caratheodory_measurable(mu, a, tests);
    if (!r.measurable) check.record_fail(split_witness(a, r));
    return r.measurable;
  };

  Check& splitting = report.add("splitting identity");
  std::vector<WindowSet> passing;
  for (const WindowSet& a : candidates) {
    if (!algebra.contains(a)) fail(ErrorKind::InvalidInput, "candidate " + to_literal(a) + " is outside the algebra");
    if (measurable(splitting, a)) passing.push_back(a);
  }

  Check& compl_check = report.add("closed under complement");
  for (const WindowSet& a : passing) measurable(compl_check, complement(a));

  Check& inter_check = report.add("closed under intersection");
  Check& union_check = report.add("closed under disjoint union");
  Check& additive = report.add("finitely additive");
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < passing.size() && pairs < max_pairs; ++x)
    for (std::size_t y = x + 1; y < passing.size() && pairs < max_pairs; ++y, ++pairs) {
      const WindowSet& a = passing[x];
      const WindowSet rest = set_difference(passing[y], a);
      measurable(inter_check, set_intersection(a, passing[y]));
      const WindowSet u = set_union(a, rest);
      measurable(union_check, u);
      ++additive.cases;
      const Rational lhs = mu(u);
      const Rational rhs = mu(a) + mu(rest);
      if (lhs != rhs) {
        Json w;
        w["A"] = to_literal(a);
        w["B"] = to_literal(rest);
        w["mu(A|B)"] = to_string(lhs);
        w["mu(A)+mu(B)"] = to_string(rhs);
        additive.record_fail(std::move(w));
      }
    }
  return report;
}

Report check_outer_measure_axioms(const SetFunctionHandle& mu, const std::vector<WindowSet>& samples) {
  Report report;
  report.name = "outer measure axioms of " + mu.label();
  report.surrogate = std::to_string(samples.size()) + " sample sets, finite families only";
  report.not_finitely_decidable.push_back("countable subadditivity");

  Check& empty = report.add("empty set");
  ++empty.cases;
  if (mu(WindowSet::empty(mu.alphabet())) != 0) empty.record_fail(Json{{"mu(empty)", to_string(mu(WindowSet::empty(mu.alphabet())))}});

  Check& monotone = report.add("monotone");
  auto check_nested = [&](const WindowSet& small, const WindowSet& big) {
    ++monotone.cases;
    const Rational a = mu(small), b = mu(big);
    if (a > b)
      monotone.record_fail(Json{{"A", to_literal(small)}, {"B", to_literal(big)}, {"mu(A)", to_string(a)},
                                {"mu(B)", to_string(b)}});
  };
  Check& sub2 = report.add("subadditive on pairs");
  Check& sub3 = report.add("subadditive on triples");
  for (std::size_t x = 0; x < samples.size(); ++x) {
    for (std::size_t y = 0; y < samples.size(); ++y) {
      if (x == y) continue;
      if (is_subset(samples[x], samples[y])) check_nested(samples[x], samples[y]);
      if (y > x) {
        check_nested(set_intersection(samples[x], samples[y]), samples[x]);
        ++sub2.cases;
        const Rational lhs = mu(set_union(samples[x], samples[y]));
        const Rational rhs = mu(samples[x]) + mu(samples[y]);
        if (lhs > rhs)
          sub2.record_fail(Json{{"A", to_literal(samples[x])}, {"B", to_literal(samples[y])},
                                {"mu(A|B)", to_string(lhs)}, {"mu(A)+mu(B)", to_string(rhs)}});
      }
    }
    if (x + 2 < samples.size()) {
      ++sub3.cases;
      const WindowSet u = set_union(set_union(samples[x], samples[x + 1]), samples[x + 2]);
      const Rational lhs = mu(u);
      const Rational rhs = mu(samples[x]) + mu(samples[x + 1]) + mu(samples[x + 2]);
      if (lhs > rhs)
        sub3.record_fail(Json{{"first", x}, {"mu(union)", to_string(lhs)}, {"sum", to_string(rhs)}});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------------------------

PiecewiseLinear PiecewiseLinear::identity() {
  PiecewiseLinear f({{Rational(0), Rational(0)}});
  f.identity_ = true;
  return f;
}

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<Rational, Rational>> points) : points_(std::move(points)) {
  if (points_.empty() || points_.front().first != 0 || points_.front().second != 0)
    fail(ErrorKind::InvalidInput, "piecewise-linear f must start at (0,0)");
  for (std::size_t k = 1; k < points_.size(); ++k)
    if (points_[k].first <= points_[k - 1].first || points_[k].second < points_[k - 1].second)
      fail(ErrorKind::InvalidInput, "piecewise-linear f needs increasing x and nondecreasing y");
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  if (identity_) return x;
  if (x <= 0) return Rational(0);
  for (std::size_t k = 1; k < points_.size(); ++k)
    if (x <= points_[k].first) {
      const auto& [x0, y0] = points_[k - 1];
      const auto& [x1, y1] = points_[k];
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  return points_.back().second;
}

Report check_approximation(const ApproxFamilySpec& spec, const std::vector<std::pair<WindowSet, WindowSet>>& pairs,
                           const std::vector<std::vector<WindowSet>>& disjoint_families) {
  const auto& t = spec.t;
  const auto& mu = spec.family;
  if (t.empty() || t.size() != mu.size()) fail(ErrorKind::InvalidInput, "grid and family sizes differ");
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] <= 0) fail(ErrorKind::InvalidInput, "grid points must be positive");
    if (k > 0 && t[k] >= t[k - 1]) fail(ErrorKind::InvalidInput, "grid must be decreasing");
  }
  const std::size_t last = t.size() - 1;
  auto index_of = [&](const Rational& v) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k] == v) return k;
    return std::nullopt;
  };

  Report report;
  report.name = "outer measure approximation";
  report.surrogate = "limit represented by the member at t=" + to_string(t[last]) + "; " + std::to_string(t.size()) +
                     " grid points";
  report.not_finitely_decidable.push_back("limit t -> 0 of the family");
  report.not_finitely_decidable.push_back("property (ii) for every eps > 0");
  report.not_finitely_decidable.push_back("property (iii) for countable families");

  std::vector<WindowSet> samples{WindowSet::empty(spec.nu.alphabet())};
  for (const auto& [a, b] : pairs) {
    samples.push_back(a);
    samples.push_back(b);
  }
  for (const auto& fam : disjoint_families) {
    samples.insert(samples.end(), fam.begin(), fam.end());
    WindowSet u = WindowSet::empty(spec.nu.alphabet());
    for (const WindowSet& s : fam) u = set_union(u, s);
    samples.push_back(u);
  }
  for (const WindowSet& s : samples)
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
      if (mu[k](s) > mu[k + 1](s))
        fail(ErrorKind::GridNotMonotone, "mu_" + to_string(t[k + 1]) + " < mu_" + to_string(t[k]) + " on " +
                                             to_literal(s));

  Check& empty = report.add("(i) empty set");
  for (std::size_t k = 0; k < t.size(); ++k) {
    ++empty.cases;
    const Rational v = mu[k](WindowSet::empty(spec.nu.alphabet()));
    if (v != 0) empty.record_fail(Json{{"t", to_string(t[k])}, {"value", to_string(v)}});
  }

  Check& relaxed = report.add("(ii) relaxed monotonicity");
  for (const auto& [a, b] : pairs) {
    if (!is_subset(a, b)) fail(ErrorKind::InvalidInput, "pair " + to_literal(a) + " is not a subset of " + to_literal(b));
    ++relaxed.cases;
    const Rational s = spec.f(spec.nu(set_difference(b, a))) + t[last];
    std::size_t k = 0;
    while (t[k] > s) ++k;
    const Rational lhs = mu[k](a);
    const Rational rhs = mu[last](b);
    if (lhs > rhs)
      relaxed.record_inconclusive(Json{{"A", to_literal(a)},
                                       {"B", to_literal(b)},
                                       {"index", to_string(s)},
                                       {"grid_point", to_string(t[k])},
                                       {"mu_index(A)", to_string(lhs)},
                                       {"mu(B)", to_string(rhs)}});
  }

  Check& subadd = report.add("(iii) subadditivity");
  for (const auto& fam : disjoint_families) {
    for (std::size_t x = 0; x < fam.size(); ++x)
      for (std::size_t y = x + 1; y < fam.size(); ++y)
        if (!are_disjoint(fam[x], fam[y])) fail(ErrorKind::InvalidInput, "family members are not disjoint");
    ++subadd.cases;
    WindowSet u = WindowSet::empty(spec.nu.alphabet());
    for (const WindowSet& s : fam) u = set_union(u, s);
    // Matched indices: mu_{2t}(union) <= sum_n mu_{t 2^-n}(A_n); coarse form otherwise.
    std::optional<std::size_t> union_index;
    std::vector<std::size_t> part_index;
    for (std::size_t k = 0; k < t.size() && !union_index; ++k) {
      std::vector<std::size_t> parts;
      Rational step = t[k] / 2;
      for (std::size_t n = 0; n < fam.size(); ++n) {
        step /= 2;
        auto idx = index_of(step);
        if (!idx) break;
        parts.push_back(*idx);
      }
      if (parts.size() == fam.size()) {
        union_index = k;
        part_index = std::move(parts);
      }
    }
    if (!union_index) {
      union_index = 0;
      part_index.assign(fam.size(), last);
    }
    const Rational lhs = mu[*union_index](u);
    Rational rhs = 0;
    for (std::size_t n = 0; n < fam.size(); ++n) rhs += mu[part_index[n]](fam[n]);
    if (lhs > rhs)
      subadd.record_fail(Json{{"union", to_literal(u)},
                              {"union_index", to_string(t[*union_index])},
                              {"mu(union)", to_string(lhs)},
                              {"sum", to_string(rhs)}});
  }
  return report;
}

// ---------------------------------------------------------------------------------------------

Rational norm_defect(const CylinderMeasure& phi, int window_cap, int m_cap) {
  if (window_cap < 0 || m_cap < 0) fail(ErrorKind::InvalidInput, "caps must be nonnegative");
  if (!phi.nonnegative()) fail(ErrorKind::InvalidInput, "norm defect needs a nonnegative phi");
  const Alphabet alphabet = phi.alphabet();
  const Window w{0, window_cap};
  const std::size_t count = word_count(alphabet, w);
  Rational best = 0;
  for (int m = 0; m >= -m_cap; --m) {
    Rational pos = 0, neg = 0;
    for (std::size_t idx = 0; idx < count; ++idx) {
      const std::vector<Symbol> word = WindowSet::decode(alphabet, w, idx);
      const Rational d = phi.cylinder(-m, word) - phi.cylinder(0, word);
      if (d > 0) pos += d;
      else neg -= d;
    }
    best = std::max({best, pos, neg});
  }
  return best;
}

NormDefectReport norm_defect_report(const CylinderMeasure& phi, int window_cap, int m_cap,
                                    const TruncationConfig& cfg, const EngineLimits& limits) {
  NormDefectReport r;
  r.defect = norm_defect(phi, window_cap, m_cap);
  r.mass = total_mass(phi);
  r.phi_truncated_x = phi_truncated(WindowSet::full(phi.alphabet()), phi, cfg, limits).value;
  r.bound = r.phi_truncated_x <= r.mass - r.defect ? Verdict::Pass : Verdict::Inconclusive;
  return r;
}

// ---------------------------------------------------------------------------------------------

namespace {

bool fits(const WindowSet& q, const TruncationConfig& cfg) {
  if (!q.window()) return true;
  return q.window()->lo >= cfg.shift - cfg.depth && q.window()->hi <= cfg.width;
}

WindowSet to_grade_zero(const WindowSet& s) {
  const auto mc = min_coordinate(s);
  return mc && *mc < 0 ? shift(s, *mc) : s;
}

}  // namespace

Report check_consistency(const CylinderMeasure& phi, const std::vector<WindowSet>& samples,
                         const ConsistencyOptions& options, const EngineLimits& limits) {
  Report report;
  report.name = "consistency of " + phi.describe();
  report.surrogate = std::to_string(samples.size()) + " samples, " + std::to_string(options.configs.size()) +
                     " truncations";
  report.not_finitely_decidable.push_back("identity on every set of the algebra");

  Check& identity = report.add("consistency identity");
  for (const WindowSet& s : samples) {
    ++identity.cases;
    const WindowSet a = to_grade_zero(s);
    const Rational at0 = eval0(phi, a);
    const Rational at1 = eval_shifted(phi, -1, a);
    if (at0 != at1)
      identity.record_fail(Json{{"A", to_literal(a)}, {"grades", {0, -1}}, {"phi_0(A)", to_string(at0)},
                                {"phi_-1(A)", to_string(at1)}});
  }
  if (identity.verdict == Verdict::Pass) {
    Check& direct = report.add("truncated value equals direct value");
    for (const WindowSet& q : samples)
      for (const TruncationConfig& cfg : options.configs) {
        if (!fits(q, cfg)) continue;
        ++direct.cases;
        const auto mc = min_coordinate(q);
        const Rational want = eval_shifted(phi, mc ? std::min(0, *mc) : 0, q);
        const Rational got = phi_truncated(q, phi, cfg, limits).value;
        if (got != want)
          direct.record_fail(Json{{"Q", to_literal(q)}, {"config", config_label(cfg)}, {"truncated", to_string(got)},
                                  {"direct", to_string(want)}});
      }
  }
  if (options.lambda && !options.configs.empty()) {
    const CylinderMeasure& lambda = *options.lambda;
    Check& prepend = report.add("prepending a consistent chain");
    const TruncationConfig& cfg = options.configs.front();
    for (const WindowSet& s : samples) {
      const WindowSet a = to_grade_zero(s);
      if (eval0(lambda, a) != eval_shifted(lambda, -1, a))
        fail(ErrorKind::InvalidInput, "prepended chain is not consistent");
    }
    for (const WindowSet& q : samples) {
      ++prepend.cases;
      const Rational plain = phi_truncated(q, phi, cfg, limits).value;
      const Rational lambda_ref = phi_truncated(q, lambda, cfg, limits).value;
      const auto pre = psi_budgeted({q, phi, {{lambda, lambda_ref + options.eps}}, cfg}, limits);
      Json w{{"Q", to_literal(q)}, {"plain", to_string(plain)}};
      if (!pre || pre->value < plain) {
        w["prepended"] = pre ? to_string(pre->value) : "infeasible";
        prepend.record_fail(std::move(w));
      } else if (pre->value != plain) {
        w["prepended"] = to_string(pre->value);
        prepend.record_inconclusive(std::move(w));
      }
    }
  }
  return report;
}

}  // namespace ddm
