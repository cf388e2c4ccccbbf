#include "ddm/refinement_tree.hpp"

#include <algorithm>
#include <limits>

namespace ddm {

RefinementTree::RefinementTree(TreeShape shape, const WindowSet& query, std::size_t max_cells) : shape_(shape) {
  if (shape.depth < 0) fail(ErrorKind::InvalidInput, "tree depth must be >= 0");
  if (shape.top < shape.grade_base) fail(ErrorKind::InvalidInput, "tree window is empty");
  if (query.alphabet() != shape.alphabet) fail(ErrorKind::InvalidInput, "query alphabet differs from tree alphabet");
  std::size_t total = 0;
  for (int g = 0; g <= shape.depth; ++g) {
    const Window w = window(g);
    if (w.lo < -kCoordinateBound || w.hi > kCoordinateBound)
      fail(ErrorKind::WindowOutOfRange, "tree window exceeds coordinate bound");
    // Guard against overflow before word_count, which enforces its own cap.
    double approx = 1.0;
    for (int t = 0; t < w.length(); ++t) approx *= shape.alphabet.size;
    if (approx > static_cast<double>(max_cells) || total + static_cast<std::size_t>(approx) > max_cells)
      fail(ErrorKind::TooLarge, "truncated cover class needs more than " + std::to_string(max_cells) + " cells");
    sizes_.push_back(word_count(shape.alphabet, w));
    total += sizes_.back();
  }
  for (int g = 0; g <= shape.depth; ++g) {
    const WindowSet h = refine(hull(query, window(g)), window(g));
    meets_.push_back(h.bits());
  }
}

std::size_t RefinementTree::total_cells() const {
  std::size_t total = 0;
  for (std::size_t s : sizes_) total += s;
  return total;
}

std::vector<Symbol> RefinementTree::word(int level, std::size_t idx) const {
  return WindowSet::decode(shape_.alphabet, window(level), idx);
}

WindowSet RefinementTree::cell(int level, std::size_t idx) const {
  const std::vector<Symbol> w = word(level, idx);
  return WindowSet::cylinder(shape_.alphabet, window(level).lo, w);
}

CostTable price_cells(const RefinementTree& tree, const CylinderMeasure& mu) {
  if (mu.alphabet() != tree.shape().alphabet) fail(ErrorKind::InvalidInput, "measure alphabet differs from tree");
  CostTable table;
  table.nonnegative = mu.nonnegative();
  const int start = tree.cost_start();
  if (start < 0) fail(ErrorKind::GradingViolation, "cells are priced outside the measure's grade");
  table.cells.resize(tree.levels());
  for (int g = 0; g < tree.levels(); ++g) {
    auto& row = table.cells[g];
    row.reserve(tree.size(g));
    for (std::size_t idx = 0; idx < tree.size(g); ++idx) row.push_back(mu.cylinder(start, tree.word(g, idx)));
  }
  return table;
}

namespace {

constexpr std::uint32_t kNoPick = std::numeric_limits<std::uint32_t>::max();

enum class Choice : std::uint8_t { Empty, Take, Split };

struct Entry {
  std::vector<Rational> v;
  Choice choice = Choice::Empty;
  std::vector<std::uint32_t> picks;
};

using Front = std::vector<Entry>;

bool dominates(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

class Pruner {
 public:
  Pruner(const std::vector<CostTable>& tables, const std::vector<Rational>& bounds, std::size_t max_front)
      : tables_(tables), bounds_(bounds), max_front_(max_front) {}

  Front prune(Front cand) const {
    std::erase_if(cand, [&](const Entry& e) { return over_budget(e.v); });
    std::stable_sort(cand.begin(), cand.end(), [](const Entry& a, const Entry& b) {
      return std::lexicographical_compare(a.v.begin(), a.v.end(), b.v.begin(), b.v.end());
    });
    Front kept;
    for (Entry& e : cand) {
      bool dominated = false;
      for (const Entry& k : kept)
        if (dominates(k.v, e.v)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      kept.push_back(std::move(e));
      if (kept.size() > max_front_) throw FrontOverflow(max_front_);
    }
    return kept;
  }

  /// A partial sum already at or above a bound stays there when the component is nonnegative.
  bool over_budget(const std::vector<Rational>& v) const {
    for (std::size_t k = 1; k < v.size(); ++k)
      if (tables_[k].nonnegative && v[k] >= bounds_[k - 1]) return true;
    return false;
  }

  bool feasible(const std::vector<Rational>& v) const {
    for (std::size_t k = 1; k < v.size(); ++k)
      if (!(v[k] < bounds_[k - 1])) return false;
    return true;
  }

 private:
  const std::vector<CostTable>& tables_;
  const std::vector<Rational>& bounds_;
  std::size_t max_front_;
};

/// Minkowski sum of the fronts. A null part is an idle cell and stands for the single zero vector;
/// an empty part has no admissible cover and empties the sum.
Front fold(const std::vector<const Front*>& parts, std::size_t dims, const Pruner& pruner) {
  Front acc(1);
  acc[0].v.assign(dims, Rational(0));
  acc[0].choice = Choice::Split;
  for (const Front* part : parts) {
    if (part == nullptr) {
      for (Entry& a : acc) a.picks.push_back(kNoPick);
      continue;
    }
    if (part->empty()) return {};
    Front next;
    next.reserve(acc.size() * part->size());
    for (const Entry& a : acc)
      for (std::size_t k = 0; k < part->size(); ++k) {
        Entry e;
        e.choice = Choice::Split;
        e.v.resize(dims);
        for (std::size_t d = 0; d < dims; ++d) e.v[d] = a.v[d] + (*part)[k].v[d];
        e.picks = a.picks;
        e.picks.push_back(static_cast<std::uint32_t>(k));
        next.push_back(std::move(e));
      }
    acc = pruner.prune(std::move(next));
  }
  return acc;
}

}  // namespace

std::optional<CoverSolution> solve_disjoint_covers(const RefinementTree& tree, const std::vector<CostTable>& tables,
                                                   const std::vector<Rational>& bounds, const DpLimits& limits) {
  if (tables.empty() || bounds.size() + 1 != tables.size())
    fail(ErrorKind::InvalidInput, "need one objective and one bound per constraint");
  const std::size_t dims = tables.size();
  const bool all_nonnegative =
      std::all_of(tables.begin(), tables.end(), [](const CostTable& t) { return t.nonnegative; });
  const Pruner pruner(tables, bounds, limits.max_front);
  const int alphabet = tree.shape().alphabet.size;

  // fronts[g][idx]; cells whose subtree cannot matter (all-nonnegative and disjoint from the
  // query) are marked idle and fold treats them as the zero vector.
  std::vector<std::vector<Front>> fronts(tree.levels());
  std::vector<boost::dynamic_bitset<>> idle(tree.levels());
  const auto part = [&](int g, std::size_t idx) -> const Front* {
    return idle[g].test(idx) ? nullptr : &fronts[g][idx];
  };
  for (int g = tree.levels() - 1; g >= 0; --g) {
    fronts[g].resize(tree.size(g));
    idle[g].resize(tree.size(g));
    for (std::size_t idx = 0; idx < tree.size(g); ++idx) {
      const bool meets = tree.meets_query(g, idx);
      if (!meets && all_nonnegative) {
        idle[g].set(idx);
        continue;
      }
      Front cand;
      if (!meets) {
        Entry e;
        e.v.assign(dims, Rational(0));
        e.choice = Choice::Empty;
        cand.push_back(std::move(e));
      }
      Entry take;
      take.choice = Choice::Take;
      for (std::size_t d = 0; d < dims; ++d) take.v.push_back(tables[d].cells[g][idx]);
      cand.push_back(std::move(take));
      if (g + 1 < tree.levels()) {
        std::vector<const Front*> parts;
        for (Symbol a = 0; a < alphabet; ++a) parts.push_back(part(g + 1, tree.child(g, idx, a)));
        for (Entry& e : fold(parts, dims, pruner)) cand.push_back(std::move(e));
      }
      fronts[g][idx] = pruner.prune(std::move(cand));
    }
  }

  std::vector<const Front*> roots;
  for (std::size_t idx = 0; idx < tree.size(0); ++idx) roots.push_back(part(0, idx));
  const Front root = fold(roots, dims, pruner);

  const Entry* best = nullptr;
  for (const Entry& e : root) {
    if (!pruner.feasible(e.v)) continue;
    if (best == nullptr || e.v[0] < best->v[0]) best = &e;
  }
  if (best == nullptr) return std::nullopt;

  std::vector<boost::dynamic_bitset<>> taken(tree.levels());
  for (int g = 0; g < tree.levels(); ++g) taken[g].resize(tree.size(g));
  struct Pending {
    int level;
    std::size_t idx;
    const Entry* entry;
  };
  std::vector<Pending> stack;
  for (std::size_t r = 0; r < roots.size(); ++r)
    if (best->picks[r] != kNoPick) stack.push_back({0, r, &fronts[0][r][best->picks[r]]});
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    if (p.entry->choice == Choice::Take) {
      taken[p.level].set(p.idx);
    } else if (p.entry->choice == Choice::Split) {
      for (Symbol a = 0; a < alphabet; ++a) {
        const std::uint32_t k = p.entry->picks[a];
        if (k == kNoPick) continue;
        const std::size_t c = tree.child(p.level, p.idx, a);
        stack.push_back({p.level + 1, c, &fronts[p.level + 1][c][k]});
      }
    }
  }

  CoverSolution out;
  out.costs = best->v;
  out.witness.base_shift = tree.shape().grade_base;
  for (int g = 0; g < tree.levels(); ++g) {
    if (taken[g].none()) continue;
    out.witness.entries.push_back(
        {-g, WindowSet::from_bits(tree.shape().alphabet, tree.window(g), std::move(taken[g]))});
  }
  return out;
}

}  // namespace ddm
