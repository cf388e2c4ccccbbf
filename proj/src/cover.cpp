#include "ddm/cover.hpp"

#include <algorithm>
#include <map>

#include "ddm/errors.hpp"

namespace ddm {

Cover Cover::canonical() const {
  std::map<int, WindowSet, std::greater<>> merged;
  for (const CoverEntry& e : entries) {
    auto [it, inserted] = merged.try_emplace(e.m, e.set.canonical());
    if (!inserted) it->second = set_union(it->second, e.set);
  }
  Cover out;
  out.base_shift = base_shift;
  for (auto& [m, set] : merged)
    if (!set.is_empty()) out.entries.push_back({m, std::move(set)});
  return out;
}

bool is_graded(const Cover& c) {
  for (const CoverEntry& e : c.entries)
    if (e.m > 0 || !in_grade(e.set, e.m + c.base_shift)) return false;
  return true;
}

WindowSet cover_union(const Cover& c, Alphabet alphabet) {
  WindowSet u = WindowSet::empty(alphabet);
  for (const CoverEntry& e : c.entries) u = set_union(u, e.set);
  return u;
}

bool is_valid_cover(const WindowSet& q, const Cover& c) {
  return is_graded(c) && is_subset(q, cover_union(c, q.alphabet()));
}

bool is_disjoint(const Cover& c) {
  for (std::size_t a = 0; a < c.entries.size(); ++a)
    for (std::size_t b = a + 1; b < c.entries.size(); ++b)
      if (!are_disjoint(c.entries[a].set, c.entries[b].set)) return false;
  return true;
}

Rational cover_cost_at(const Cover& c, const CylinderMeasure& phi, int cost_shift) {
  Rational total = 0;
  for (const CoverEntry& e : c.entries) {
    if (e.set.is_empty()) continue;
    total += eval_shifted(phi, e.m + cost_shift, e.set);
  }
  return total;
}

Rational cover_cost(const Cover& c, const CylinderMeasure& phi) { return cover_cost_at(c, phi, c.base_shift); }

Cover disjointify(const Cover& c) {
  const Cover sorted = c.canonical();
  Cover out;
  out.base_shift = c.base_shift;
  if (sorted.entries.empty()) return out;
  WindowSet above = WindowSet::empty(sorted.entries.front().set.alphabet());
  for (const CoverEntry& e : sorted.entries) {
    WindowSet rest = set_difference(e.set, above);
    if (!in_grade(rest, e.m + c.base_shift))
      fail(ErrorKind::GradingViolation, "disjointified entry at m=" + std::to_string(e.m) + " leaves its grade");
    above = set_union(above, e.set);
    if (!rest.is_empty()) out.entries.push_back({e.m, std::move(rest)});
  }
  return out;
}

void validate(const TruncationConfig& cfg) {
  if (cfg.depth < 0) fail(ErrorKind::InvalidInput, "truncation depth must be >= 0");
  if (cfg.width < 0) fail(ErrorKind::InvalidInput, "truncation width must be >= 0");
  if (cfg.shift > 0) fail(ErrorKind::InvalidInput, "base shift must be <= 0");
  if (cfg.width > kCoordinateBound || cfg.shift - cfg.depth < -kCoordinateBound)
    fail(ErrorKind::WindowOutOfRange, "truncation window [" + std::to_string(cfg.shift - cfg.depth) + "," +
                                          std::to_string(cfg.width) + "] exceeds coordinate bound");
}

}  // namespace ddm
