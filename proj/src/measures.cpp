#include "ddm/measures.hpp"

#include <mutex>
#include <sstream>
#include <variant>

#include "ddm/errors.hpp"

namespace ddm {

Symbol PeriodicPoint::at(int j) const {
  if (auto it = exceptions.find(j); it != exceptions.end()) return it->second;
  const int len = static_cast<int>(period.size());
  return period[static_cast<std::size_t>(((j % len) + len) % len)];
}

namespace {

struct MarkovData {
  RationalVector initial;
  RationalMatrix transition;
  // Marginal laws initial * A^j, extended on demand.
  mutable std::mutex mutex;
  mutable std::vector<RationalVector> marginals;

  RationalVector marginal(int j) const {
    std::lock_guard lock(mutex);
    if (marginals.empty()) marginals.push_back(initial);
    const std::size_t n = initial.size();
    while (marginals.size() <= static_cast<std::size_t>(j)) {
      const RationalVector& prev = marginals.back();
      RationalVector next(n, Rational(0));
      for (std::size_t a = 0; a < n; ++a) {
        if (prev[a] == 0) continue;
        for (std::size_t b = 0; b < n; ++b) next[b] += prev[a] * transition[a][b];
      }
      if (next == prev) break;  // stationary from here on
      marginals.push_back(std::move(next));
    }
    return marginals[std::min(marginals.size() - 1, static_cast<std::size_t>(j))];
  }
};

struct DiracData {
  PeriodicPoint point;
};

struct BernoulliData {
  RationalVector p;
};

struct CesaroData {
  CylinderMeasure base;
  int n;
};

struct ConvexData {
  RationalVector weights;
  std::vector<CylinderMeasure> parts;
};

struct SignedDiffData {
  CylinderMeasure psi;
  Rational c;
  CylinderMeasure phi;
};

bool is_nonnegative_vector(const RationalVector& v) {
  for (const Rational& x : v)
    if (x < 0) return false;
  return true;
}

Rational sum(const RationalVector& v) {
  Rational s = 0;
  for (const Rational& x : v) s += x;
  return s;
}

}  // namespace

struct CylinderMeasure::Node {
  Alphabet alphabet;
  std::variant<std::shared_ptr<MarkovData>, DiracData, BernoulliData, CesaroData, ConvexData, SignedDiffData>
      data;
};

void check_stochastic(const RationalMatrix& transition) {
  const std::size_t n = transition.size();
  if (n == 0) fail(ErrorKind::NotStochastic, "empty transition matrix");
  for (std::size_t a = 0; a < n; ++a) {
    if (transition[a].size() != n) fail(ErrorKind::NotStochastic, "transition matrix is not square");
    if (!is_nonnegative_vector(transition[a]))
      fail(ErrorKind::NotStochastic, "negative entry in row " + std::to_string(a));
    if (sum(transition[a]) != 1)
      fail(ErrorKind::NotStochastic, "row " + std::to_string(a) + " sums to " + to_string(sum(transition[a])));
  }
}

bool is_irreducible(const RationalMatrix& transition) {
  const std::size_t n = transition.size();
  // Reachability closure: every state reaches every state.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) reach[a][b] = a == b || transition[a][b] > 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (reach[k][b]) reach[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!reach[a][b]) return false;
  return true;
}

RationalVector stationary_distribution(const RationalMatrix& transition) {
  check_stochastic(transition);
  if (!is_irreducible(transition)) fail(ErrorKind::NotIrreducible, "transition matrix is not irreducible");
  const std::size_t n = transition.size();
  // Unknowns pi_0..pi_{n-1}. Equations: (A^T - I) pi = 0 for the first n-1 columns, sum pi = 1.
  RationalMatrix system(n, RationalVector(n + 1, Rational(0)));
  for (std::size_t row = 0; row + 1 < n; ++row) {
    for (std::size_t a = 0; a < n; ++a) system[row][a] = transition[a][row];
    system[row][row] -= 1;
  }
  for (std::size_t a = 0; a < n; ++a) system[n - 1][a] = 1;
  system[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && system[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::NotIrreducible, "singular stationary system");
    std::swap(system[pivot], system[col]);
    const Rational inv = 1 / system[col][col];
    for (Rational& x : system[col]) x *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || system[row][col] == 0) continue;
      const Rational factor = system[row][col];
      for (std::size_t k = col; k <= n; ++k) system[row][k] -= factor * system[col][k];
    }
  }
  RationalVector pi(n);
  for (std::size_t a = 0; a < n; ++a) pi[a] = system[a][n];
  return pi;
}

CylinderMeasure CylinderMeasure::markov(RationalVector initial, RationalMatrix transition) {
  check_stochastic(transition);
  if (initial.size() != transition.size())
    fail(ErrorKind::InvalidInput, "initial distribution and transition matrix sizes differ");
  if (!is_nonnegative_vector(initial) || sum(initial) != 1)
    fail(ErrorKind::InvalidInput, "initial distribution must be nonnegative and sum to 1");
  auto data = std::make_shared<MarkovData>();
  data->initial = std::move(initial);
  data->transition = std::move(transition);
  const Alphabet alphabet{static_cast<int>(data->initial.size())};
  return CylinderMeasure(std::make_shared<const Node>(Node{alphabet, std::move(data)}));
}

CylinderMeasure CylinderMeasure::stationary_markov(RationalMatrix transition) {
  RationalVector pi = stationary_distribution(transition);
  return markov(std::move(pi), std::move(transition));
}

CylinderMeasure CylinderMeasure::dirac(Alphabet alphabet, PeriodicPoint point) {
  if (point.period.empty()) fail(ErrorKind::InvalidInput, "dirac point needs a nonempty period");
  auto check = [&](Symbol s) {
    if (s < 0 || s >= alphabet.size) fail(ErrorKind::InvalidInput, "dirac point symbol outside alphabet");
  };
  for (Symbol s : point.period) check(s);
  for (const auto& [j, s] : point.exceptions) check(s);
  return CylinderMeasure(std::make_shared<const Node>(Node{alphabet, DiracData{std::move(point)}}));
}

CylinderMeasure CylinderMeasure::bernoulli(RationalVector p) {
  if (p.empty() || !is_nonnegative_vector(p) || sum(p) != 1)
    fail(ErrorKind::InvalidInput, "bernoulli weights must be nonnegative and sum to 1");
  const Alphabet alphabet{static_cast<int>(p.size())};
  return CylinderMeasure(std::make_shared<const Node>(Node{alphabet, BernoulliData{std::move(p)}}));
}

CylinderMeasure CylinderMeasure::cesaro(CylinderMeasure base, int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "cesaro order must be positive");
  const Alphabet alphabet = base.alphabet();
  return CylinderMeasure(std::make_shared<const Node>(Node{alphabet, CesaroData{std::move(base), n}}));
}

CylinderMeasure CylinderMeasure::convex(RationalVector weights, std::vector<CylinderMeasure> parts) {
  if (parts.empty() || weights.size() != parts.size())
    fail(ErrorKind::InvalidInput, "convex combination needs one weight per part");
  if (!is_nonnegative_vector(weights)) fail(ErrorKind::InvalidInput, "convex weights must be nonnegative");
  const Alphabet alphabet = parts.front().alphabet();
  for (const CylinderMeasure& p : parts)
    if (p.alphabet() != alphabet) fail(ErrorKind::InvalidInput, "convex parts over different alphabets");
  return CylinderMeasure(
      std::make_shared<const Node>(Node{alphabet, ConvexData{std::move(weights), std::move(parts)}}));
}

CylinderMeasure CylinderMeasure::signed_diff(CylinderMeasure psi, Rational c, CylinderMeasure phi) {
  if (c < 0) fail(ErrorKind::InvalidInput, "signed difference needs c >= 0");
  if (psi.alphabet() != phi.alphabet()) fail(ErrorKind::InvalidInput, "signed difference over different alphabets");
  const Alphabet alphabet = psi.alphabet();
  return CylinderMeasure(
      std::make_shared<const Node>(Node{alphabet, SignedDiffData{std::move(psi), std::move(c), std::move(phi)}}));
}

CylinderMeasure::Kind CylinderMeasure::kind() const {
  return static_cast<Kind>(node_->data.index());
}

Alphabet CylinderMeasure::alphabet() const { return node_->alphabet; }

bool CylinderMeasure::nonnegative() const {
  return std::visit(
      [](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CesaroData>) {
          return d.base.nonnegative();
        } else if constexpr (std::is_same_v<T, ConvexData>) {
          for (const auto& p : d.parts)
            if (!p.nonnegative()) return false;
          return true;
        } else if constexpr (std::is_same_v<T, SignedDiffData>) {
          return d.c == 0 && d.psi.nonnegative();
        } else {
          return true;
        }
      },
      node_->data);
}

bool CylinderMeasure::is_probability() const { return nonnegative() && total_mass(*this) == 1; }

std::string CylinderMeasure::describe() const {
  std::ostringstream out;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, std::shared_ptr<MarkovData>>) {
          out << "markov(pi=[";
          for (std::size_t a = 0; a < d->initial.size(); ++a) out << (a ? "," : "") << to_string(d->initial[a]);
          out << "])";
        } else if constexpr (std::is_same_v<T, DiracData>) {
          out << "dirac(period=[";
          for (std::size_t t = 0; t < d.point.period.size(); ++t) out << (t ? "," : "") << d.point.period[t];
          out << "])";
        } else if constexpr (std::is_same_v<T, BernoulliData>) {
          out << "bernoulli([";
          for (std::size_t a = 0; a < d.p.size(); ++a) out << (a ? "," : "") << to_string(d.p[a]);
          out << "])";
        } else if constexpr (std::is_same_v<T, CesaroData>) {
          out << "cesaro(" << d.base.describe() << "," << d.n << ")";
        } else if constexpr (std::is_same_v<T, ConvexData>) {
          out << "convex(";
          for (std::size_t k = 0; k < d.parts.size(); ++k)
            out << (k ? "," : "") << to_string(d.weights[k]) << "*" << d.parts[k].describe();
          out << ")";
        } else {
          out << "signed(" << d.psi.describe() << "-" << to_string(d.c) << "*" << d.phi.describe() << ")";
        }
      },
      node_->data);
  return out.str();
}

Rational CylinderMeasure::cylinder(int start, std::span<const Symbol> word) const {
  if (start < 0) fail(ErrorKind::NegativeCoordinate, "cylinder at negative coordinate " + std::to_string(start));
  return std::visit(
      [&](const auto& d) -> Rational {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, std::shared_ptr<MarkovData>>) {
          if (word.empty()) return sum(d->initial);
          Rational v = d->marginal(start)[static_cast<std::size_t>(word[0])];
          for (std::size_t t = 1; t < word.size() && v != 0; ++t)
            v *= d->transition[static_cast<std::size_t>(word[t - 1])][static_cast<std::size_t>(word[t])];
          return v;
        } else if constexpr (std::is_same_v<T, DiracData>) {
          for (std::size_t t = 0; t < word.size(); ++t)
            if (d.point.at(start + static_cast<int>(t)) != word[t]) return Rational(0);
          return Rational(1);
        } else if constexpr (std::is_same_v<T, BernoulliData>) {
          Rational v = 1;
          for (Symbol s : word) v *= d.p[static_cast<std::size_t>(s)];
          return v;
        } else if constexpr (std::is_same_v<T, CesaroData>) {
          Rational v = 0;
          for (int t = 0; t <= d.n; ++t) v += d.base.cylinder(start + t, word);
          return v / (d.n + 1);
        } else if constexpr (std::is_same_v<T, ConvexData>) {
          Rational v = 0;
          for (std::size_t k = 0; k < d.parts.size(); ++k)
            if (d.weights[k] != 0) v += d.weights[k] * d.parts[k].cylinder(start, word);
          return v;
        } else {
          Rational v = d.psi.cylinder(start, word);
          if (d.c != 0) v -= d.c * d.phi.cylinder(start, word);
          return v;
        }
      },
      node_->data);
}

Rational total_mass(const CylinderMeasure& mu) { return mu.cylinder(0, {}); }

Rational eval0(const CylinderMeasure& mu, const WindowSet& s) {
  if (mu.alphabet() != s.alphabet()) fail(ErrorKind::InvalidInput, "measure and set over different alphabets");
  const WindowSet c = s.canonical();
  if (c.is_empty()) return 0;
  if (c.is_full()) return total_mass(mu);
  const Window w = *c.window();
  if (w.lo < 0)
    fail(ErrorKind::NegativeCoordinate, "set " + to_literal(c) + " depends on coordinate " + std::to_string(w.lo));
  Rational v = 0;
  for (std::size_t idx = c.bits().find_first(); idx != boost::dynamic_bitset<>::npos; idx = c.bits().find_next(idx))
    v += mu.cylinder(w.lo, WindowSet::decode(c.alphabet(), w, idx));
  return v;
}

Rational eval_shifted(const CylinderMeasure& mu, int m, const WindowSet& s) {
  if (m > 0) fail(ErrorKind::InvalidInput, "grade index must be <= 0, got " + std::to_string(m));
  if (!in_grade(s, m))
    fail(ErrorKind::GradingViolation,
         "set " + to_literal(s) + " depends on a coordinate below grade " + std::to_string(m));
  return eval0(mu, shift(s, m));
}

CylinderMeasure cesaro(const CylinderMeasure& mu, int n) { return CylinderMeasure::cesaro(mu, n); }

}  // namespace ddm
