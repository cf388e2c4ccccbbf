#include <algorithm>
#include <functional>

#include "ddm/refinement_tree.hpp"

namespace ddm {

namespace {

struct Cell {
  int level;
  std::vector<Symbol> word;  // over [grade_base - level, top]
};

class ClassGeometry {
 public:
  ClassGeometry(const TreeShape& shape, const WindowSet& query) : shape_(shape), query_(query) {
    if (shape.depth < 0 || shape.top < shape.grade_base) fail(ErrorKind::InvalidInput, "bad cover class shape");
  }

  int lo(int level) const { return shape_.grade_base - level; }

  WindowSet set_of(const Cell& c) const { return WindowSet::cylinder(shape_.alphabet, lo(c.level), c.word); }

  bool meets(const Cell& c) const { return !set_intersection(set_of(c), query_).is_empty(); }

  std::vector<Cell> roots() const {
    std::vector<Cell> out;
    const Window w{lo(0), shape_.top};
    const std::size_t n = word_count(shape_.alphabet, w);
    for (std::size_t idx = 0; idx < n; ++idx) out.push_back({0, WindowSet::decode(shape_.alphabet, w, idx)});
    return out;
  }

  std::vector<Cell> children(const Cell& c) const {
    std::vector<Cell> out;
    for (Symbol a = 0; a < shape_.alphabet.size; ++a) {
      Cell child{c.level + 1, {a}};
      child.word.insert(child.word.end(), c.word.begin(), c.word.end());
      out.push_back(std::move(child));
    }
    return out;
  }

  Cover build(const std::vector<Cell>& chosen) const {
    Cover cover;
    cover.base_shift = shape_.grade_base;
    for (const Cell& c : chosen) cover.entries.push_back({-c.level, set_of(c)});
    return cover.canonical();
  }

  const TreeShape& shape() const { return shape_; }
  const WindowSet& query() const { return query_; }

 private:
  TreeShape shape_;
  WindowSet query_;
};

class BestTracker {
 public:
  BestTracker(const std::vector<CylinderMeasure>& measures, const std::vector<Rational>& bounds, int cost_base)
      : measures_(measures), bounds_(bounds), cost_base_(cost_base) {
    if (measures.empty() || bounds.size() + 1 != measures.size())
      fail(ErrorKind::InvalidInput, "need one objective and one bound per constraint");
  }

  void offer(const Cover& cover) {
    std::vector<Rational> costs;
    for (const CylinderMeasure& mu : measures_) costs.push_back(cover_cost_at(cover, mu, cost_base_));
    for (std::size_t k = 1; k < costs.size(); ++k)
      if (!(costs[k] < bounds_[k - 1])) return;
    if (!best_ || costs[0] < best_->costs[0]) best_ = CoverSolution{std::move(costs), cover};
  }

  std::optional<CoverSolution> result() && { return std::move(best_); }

 private:
  const std::vector<CylinderMeasure>& measures_;
  const std::vector<Rational>& bounds_;
  int cost_base_;
  std::optional<CoverSolution> best_;
};

}  // namespace

std::optional<CoverSolution> enumerate_disjoint_covers(const TreeShape& shape, const WindowSet& query,
                                                       const std::vector<CylinderMeasure>& measures,
                                                       const std::vector<Rational>& bounds,
                                                       const EnumerationLimits& limits) {
  const ClassGeometry geo(shape, query);
  BestTracker best(measures, bounds, shape.cost_base);
  std::vector<Cell> pending = geo.roots();
  std::vector<Cell> chosen;
  std::size_t visited = 0;
  const bool all_nonnegative =
      std::all_of(measures.begin(), measures.end(), [](const CylinderMeasure& mu) { return mu.nonnegative(); });

  std::function<void()> rec = [&] {
    if (pending.empty()) {
      if (++visited > limits.max_covers)
        fail(ErrorKind::TooLarge, "more than " + std::to_string(limits.max_covers) + " disjoint covers");
      const Cover cover = geo.build(chosen);
      if (!is_valid_cover(query, cover)) throw std::logic_error("enumerated cover misses the query");
      best.offer(cover);
      return;
    }
    const Cell c = pending.back();
    pending.pop_back();
    if (!geo.meets(c)) {
      rec();
      // Covering a cell that misses the query never lowers a nonnegative cost.
      if (all_nonnegative) {
        pending.push_back(c);
        return;
      }
    }
    chosen.push_back(c);
    rec();
    chosen.pop_back();
    if (c.level < shape.depth) {
      const std::vector<Cell> kids = geo.children(c);
      pending.insert(pending.end(), kids.begin(), kids.end());
      rec();
      pending.resize(pending.size() - kids.size());
    }
    pending.push_back(c);
  };
  rec();
  return std::move(best).result();
}

std::optional<CoverSolution> enumerate_overlapping_covers(const TreeShape& shape, const WindowSet& query,
                                                          const std::vector<CylinderMeasure>& measures,
                                                          const std::vector<Rational>& bounds,
                                                          const EnumerationLimits& limits) {
  const ClassGeometry geo(shape, query);
  BestTracker best(measures, bounds, shape.cost_base);

  // Finest cells are the atoms; every class cell is a union of atoms.
  std::vector<Cell> cells;
  std::vector<Cell> frontier = geo.roots();
  while (!frontier.empty()) {
    std::vector<Cell> next;
    for (const Cell& c : frontier) {
      cells.push_back(c);
      if (c.level < shape.depth)
        for (Cell& k : geo.children(c)) next.push_back(std::move(k));
    }
    frontier = std::move(next);
  }
  std::vector<const Cell*> atoms;
  for (const Cell& c : cells)
    if (c.level == shape.depth) atoms.push_back(&c);
  if (atoms.size() > 64) fail(ErrorKind::TooLarge, "overlapping enumeration supports at most 64 finest cells");

  std::vector<std::uint64_t> masks;
  std::vector<std::vector<Rational>> prices;
  for (const Cell& c : cells) {
    std::uint64_t mask = 0;
    const WindowSet s = geo.set_of(c);
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (is_subset(geo.set_of(*atoms[a]), s)) mask |= std::uint64_t{1} << a;
    masks.push_back(mask);
    std::vector<Rational> p;
    for (const CylinderMeasure& mu : measures) p.push_back(eval_shifted(mu, -c.level + shape.cost_base, s));
    prices.push_back(std::move(p));
  }
  std::uint64_t needed = 0;
  for (std::size_t a = 0; a < atoms.size(); ++a)
    if (geo.meets(*atoms[a])) needed |= std::uint64_t{1} << a;

  const bool all_nonnegative =
      std::all_of(measures.begin(), measures.end(), [](const CylinderMeasure& mu) { return mu.nonnegative(); });
  if (!all_nonnegative && cells.size() > 24)
    fail(ErrorKind::TooLarge, "signed overlapping enumeration supports at most 24 cells");

  std::vector<std::uint64_t> remaining(cells.size() + 1, 0);
  for (std::size_t k = cells.size(); k-- > 0;) remaining[k] = remaining[k + 1] | masks[k];

  std::vector<std::size_t> chosen;
  std::vector<Rational> partial(measures.size(), Rational(0));
  std::optional<Rational> incumbent;
  std::size_t nodes = 0;

  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t covered) {
    if (++nodes > limits.max_nodes)
      fail(ErrorKind::TooLarge, "overlapping enumeration exceeded " + std::to_string(limits.max_nodes) + " nodes");
    if (all_nonnegative) {
      if (incumbent && partial[0] >= *incumbent) return;
      for (std::size_t d = 1; d < partial.size(); ++d)
        if (partial[d] >= bounds[d - 1]) return;
    }
    const bool complete = (covered & needed) == needed;
    if (complete && (all_nonnegative || k == cells.size())) {
      std::vector<Cell> picked;
      for (std::size_t c : chosen) picked.push_back(cells[c]);
      const Cover cover = geo.build(picked);
      if (!is_valid_cover(query, cover)) throw std::logic_error("enumerated cover misses the query");
      bool ok = true;
      for (std::size_t d = 1; d < partial.size(); ++d) ok = ok && partial[d] < bounds[d - 1];
      if (ok && (!incumbent || partial[0] < *incumbent)) incumbent = partial[0];
      best.offer(cover);
      if (all_nonnegative) return;
    }
    if (k == cells.size()) return;
    if (((covered | remaining[k]) & needed) != needed) return;
    chosen.push_back(k);
    for (std::size_t d = 0; d < partial.size(); ++d) partial[d] += prices[k][d];
    rec(k + 1, covered | masks[k]);
    for (std::size_t d = 0; d < partial.size(); ++d) partial[d] -= prices[k][d];
    chosen.pop_back();
    rec(k + 1, covered);
  };
  rec(0, 0);
  return std::move(best).result();
}

}  // namespace ddm
