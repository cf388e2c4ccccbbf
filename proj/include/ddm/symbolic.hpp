#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ddm {

using Symbol = int;

/// Coordinates of every window are confined to [-kCoordinateBound, kCoordinateBound].
inline constexpr int kCoordinateBound = 64;
/// Largest number of words a single window may carry (N^(hi-lo+1)).
inline constexpr std::size_t kMaxWindowWords = std::size_t{1} << 22;

struct Alphabet {
  int size = 2;

  friend bool operator==(Alphabet, Alphabet) = default;
};

/// Closed coordinate range [lo, hi] on which a set is determined.
struct Window {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo + 1; }
  bool contains(Window other) const { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(Window, Window) = default;
};

/// Number of words over a window; throws WindowOutOfRange when the window leaves the
/// coordinate bound or the word count exceeds kMaxWindowWords.
std::size_t word_count(Alphabet alphabet, Window window);

/// A subset of X = {0..N-1}^Z determined by finitely many coordinates.
///
/// Non-degenerate sets store a window and one bit per word over that window. Words are ordered
/// lexicographically with coordinate `lo` as the most significant digit, so the word
/// (s_lo, ..., s_hi) has index sum_t s_{lo+t} * N^(hi-lo-t). X and the empty set are stored
/// without a window. Every operation except `refine` returns the canonical form, where neither
/// end coordinate of the window is redundant.
class WindowSet {
 public:
  WindowSet() = default;

  static WindowSet full(Alphabet alphabet);
  static WindowSet empty(Alphabet alphabet);
  /// The cylinder {sigma : sigma_{start+t} = word[t]}; an empty word gives X.
  static WindowSet cylinder(Alphabet alphabet, int start, std::span<const Symbol> word);
  /// Canonicalized set from raw membership bits over `window`.
  static WindowSet from_bits(Alphabet alphabet, Window window, boost::dynamic_bitset<> bits);

  Alphabet alphabet() const { return alphabet_; }
  bool is_full() const { return !window_ && full_; }
  bool is_empty() const { return !window_ && !full_; }
  bool is_degenerate() const { return !window_.has_value(); }
  /// nullopt for the degenerate representations of X and the empty set.
  const std::optional<Window>& window() const { return window_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }

  bool contains_word_index(std::size_t index) const { return bits_.test(index); }
  std::size_t member_count() const { return bits_.count(); }

  /// Same subset in canonical form.
  WindowSet canonical() const;
  bool is_canonical() const;

  /// Set equality (compares canonical forms).
  friend bool operator==(const WindowSet& a, const WindowSet& b);

  /// Decodes a word index over `window` into its symbols.
  static std::vector<Symbol> decode(Alphabet alphabet, Window window, std::size_t index);
  static std::size_t encode(Alphabet alphabet, std::span<const Symbol> word);

 private:
  WindowSet(Alphabet alphabet, std::optional<Window> window, boost::dynamic_bitset<> bits, bool full)
      : alphabet_(alphabet), window_(window), bits_(std::move(bits)), full_(full) {}

  friend WindowSet refine(const WindowSet& s, Window target);

  Alphabet alphabet_{};
  std::optional<Window> window_;
  boost::dynamic_bitset<> bits_;
  bool full_ = false;
};

/// Same subset re-expressed over `target` (not canonicalized). Throws InvalidInput when
/// `target` does not contain the set's window.
WindowSet refine(const WindowSet& s, Window target);

/// Smallest set determined on `target` that contains `s` (existential projection onto target).
WindowSet hull(const WindowSet& s, Window target);

enum class SetOp { Union, Intersection, Difference };

WindowSet set_algebra(const WindowSet& a, const WindowSet& b, SetOp op);
WindowSet set_union(const WindowSet& a, const WindowSet& b);
WindowSet set_intersection(const WindowSet& a, const WindowSet& b);
WindowSet set_difference(const WindowSet& a, const WindowSet& b);
WindowSet complement(const WindowSet& a);
bool is_subset(const WindowSet& a, const WindowSet& b);
bool are_disjoint(const WindowSet& a, const WindowSet& b);

/// S^i(s) under (S sigma)_j = sigma_{j+1}: a set determined on [lo, hi] maps to one determined
/// on [lo - i, hi - i].
WindowSet shift(const WindowSet& s, int i);

/// Smallest coordinate the set depends on; nullopt stands for +infinity (X and the empty set).
std::optional<int> min_coordinate(const WindowSet& s);
/// True iff s lies in the algebra of sets determined by coordinates >= m.
bool in_grade(const WindowSet& s, int m);

/// Parses the fixture syntax: `full`, `empty`, `cyl(j,[a,b,...])`, `union(...)`, `inter(...)`,
/// `diff(a,b)`, `compl(a)`, `shift(a,i)`.
WindowSet parse_window_set(Alphabet alphabet, std::string_view text);
/// Canonical literal: `full`, `empty`, `cyl(...)` or `union(cyl(...),...)` over the canonical window.
std::string to_literal(const WindowSet& s);

}  // namespace ddm
