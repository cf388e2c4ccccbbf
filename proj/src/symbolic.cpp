#include "ddm/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ddm/errors.hpp"

namespace ddm {

namespace {

std::size_t power(int base, int exponent) {
  std::size_t r = 1;
  for (int k = 0; k < exponent; ++k) r *= static_cast<std::size_t>(base);
  return r;
}

void check_alphabet(Alphabet alphabet) {
  if (alphabet.size < 1 || alphabet.size > 64)
    fail(ErrorKind::InvalidInput, "alphabet size must be in [1, 64], got " + std::to_string(alphabet.size));
}

void check_same_alphabet(const WindowSet& a, const WindowSet& b) {
  if (a.alphabet() != b.alphabet())
    fail(ErrorKind::InvalidInput, "set operation on different alphabets");
}

Window merged(Window a, Window b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

}  // namespace

std::size_t word_count(Alphabet alphabet, Window window) {
  check_alphabet(alphabet);
  if (window.lo > window.hi)
    fail(ErrorKind::InvalidInput, "window with lo > hi");
  if (window.lo < -kCoordinateBound || window.hi > kCoordinateBound)
    fail(ErrorKind::WindowOutOfRange, "window [" + std::to_string(window.lo) + "," +
                                          std::to_string(window.hi) + "] exceeds coordinate bound " +
                                          std::to_string(kCoordinateBound));
  std::size_t count = 1;
  for (int k = 0; k < window.length(); ++k) {
    count *= static_cast<std::size_t>(alphabet.size);
    if (count > kMaxWindowWords)
      fail(ErrorKind::WindowOutOfRange, "window [" + std::to_string(window.lo) + "," +
                                            std::to_string(window.hi) + "] has more than " +
                                            std::to_string(kMaxWindowWords) + " words");
  }
  return count;
}

WindowSet WindowSet::full(Alphabet alphabet) {
  check_alphabet(alphabet);
  return WindowSet(alphabet, std::nullopt, {}, true);
}

WindowSet WindowSet::empty(Alphabet alphabet) {
  check_alphabet(alphabet);
  return WindowSet(alphabet, std::nullopt, {}, false);
}

WindowSet WindowSet::cylinder(Alphabet alphabet, int start, std::span<const Symbol> word) {
  if (word.empty()) return full(alphabet);
  Window w{start, start + static_cast<int>(word.size()) - 1};
  boost::dynamic_bitset<> bits(word_count(alphabet, w));
  for (Symbol s : word)
    if (s < 0 || s >= alphabet.size)
      fail(ErrorKind::InvalidInput, "symbol " + std::to_string(s) + " outside alphabet");
  bits.set(encode(alphabet, word));
  return from_bits(alphabet, w, std::move(bits));
}

WindowSet WindowSet::from_bits(Alphabet alphabet, Window window, boost::dynamic_bitset<> bits) {
  if (bits.size() != word_count(alphabet, window))
    fail(ErrorKind::InvalidInput, "bit count does not match window");
  return WindowSet(alphabet, window, std::move(bits), false).canonical();
}

std::size_t WindowSet::encode(Alphabet alphabet, std::span<const Symbol> word) {
  std::size_t index = 0;
  for (Symbol s : word) index = index * static_cast<std::size_t>(alphabet.size) + static_cast<std::size_t>(s);
  return index;
}

std::vector<Symbol> WindowSet::decode(Alphabet alphabet, Window window, std::size_t index) {
  std::vector<Symbol> word(static_cast<std::size_t>(window.length()));
  for (std::size_t t = word.size(); t-- > 0;) {
    word[t] = static_cast<Symbol>(index % static_cast<std::size_t>(alphabet.size));
    index /= static_cast<std::size_t>(alphabet.size);
  }
  return word;
}

WindowSet WindowSet::canonical() const {
  if (!window_) return *this;
  if (bits_.none()) return empty(alphabet_);
  if (bits_.all()) return full(alphabet_);
  const std::size_t n = static_cast<std::size_t>(alphabet_.size);
  Window w = *window_;
  boost::dynamic_bitset<> bits = bits_;
  bool changed = true;
  while (changed) {
    changed = false;
    // Leading coordinate: the N blocks of size N^(len-1) must coincide.
    const std::size_t block = bits.size() / n;
    bool left_redundant = true;
    for (std::size_t a = 1; a < n && left_redundant; ++a)
      for (std::size_t k = 0; k < block; ++k)
        if (bits[a * block + k] != bits[k]) {
          left_redundant = false;
          break;
        }
    if (left_redundant) {
      bits.resize(block);
      ++w.lo;
      changed = true;
      continue;
    }
    // Trailing coordinate: each run of N consecutive bits must be constant.
    bool right_redundant = true;
    for (std::size_t p = 0; p < block && right_redundant; ++p)
      for (std::size_t a = 1; a < n; ++a)
        if (bits[p * n + a] != bits[p * n]) {
          right_redundant = false;
          break;
        }
    if (right_redundant) {
      boost::dynamic_bitset<> trimmed(block);
      for (std::size_t p = 0; p < block; ++p) trimmed[p] = bits[p * n];
      bits = std::move(trimmed);
      --w.hi;
      changed = true;
    }
  }
  return WindowSet(alphabet_, w, std::move(bits), false);
}

bool WindowSet::is_canonical() const {
  const WindowSet c = canonical();
  return c.window_ == window_ && c.bits_ == bits_ && c.full_ == full_;
}

bool operator==(const WindowSet& a, const WindowSet& b) {
  if (a.alphabet_ != b.alphabet_) return false;
  const WindowSet ca = a.canonical();
  const WindowSet cb = b.canonical();
  return ca.window_ == cb.window_ && ca.full_ == cb.full_ && ca.bits_ == cb.bits_;
}

WindowSet refine(const WindowSet& s, Window target) {
  const std::size_t count = word_count(s.alphabet(), target);
  if (s.is_degenerate()) {
    boost::dynamic_bitset<> bits(count);
    if (s.is_full()) bits.set();
    return WindowSet(s.alphabet(), target, std::move(bits), false);
  }
  const Window w = *s.window();
  if (!target.contains(w))
    fail(ErrorKind::InvalidInput, "refine target [" + std::to_string(target.lo) + "," +
                                      std::to_string(target.hi) + "] does not contain window [" +
                                      std::to_string(w.lo) + "," + std::to_string(w.hi) + "]");
  const std::size_t suffix = power(s.alphabet().size, target.hi - w.hi);
  const std::size_t inner = s.bits().size();
  boost::dynamic_bitset<> bits(count);
  for (std::size_t idx = 0; idx < count; ++idx)
    if (s.bits()[(idx / suffix) % inner]) bits.set(idx);
  return WindowSet(s.alphabet(), target, std::move(bits), false);
}

WindowSet hull(const WindowSet& s, Window target) {
  const std::size_t count = word_count(s.alphabet(), target);
  if (s.is_degenerate()) {
    boost::dynamic_bitset<> bits(count);
    if (s.is_full()) bits.set();
    return WindowSet::from_bits(s.alphabet(), target, std::move(bits));
  }
  const Window span = merged(*s.window(), target);
  const WindowSet r = refine(s, span);
  const std::size_t suffix = power(s.alphabet().size, span.hi - target.hi);
  boost::dynamic_bitset<> bits(count);
  for (std::size_t idx = r.bits().find_first(); idx != boost::dynamic_bitset<>::npos; idx = r.bits().find_next(idx))
    bits.set((idx / suffix) % count);
  return WindowSet::from_bits(s.alphabet(), target, std::move(bits));
}

WindowSet complement(const WindowSet& a) {
  if (a.is_full()) return WindowSet::empty(a.alphabet());
  if (a.is_empty()) return WindowSet::full(a.alphabet());
  boost::dynamic_bitset<> bits = a.bits();
  bits.flip();
  return WindowSet::from_bits(a.alphabet(), *a.window(), std::move(bits));
}

WindowSet set_algebra(const WindowSet& a, const WindowSet& b, SetOp op) {
  check_same_alphabet(a, b);
  const Alphabet alphabet = a.alphabet();
  switch (op) {
    case SetOp::Union:
      if (a.is_full() || b.is_full()) return WindowSet::full(alphabet);
      if (a.is_empty()) return b.canonical();
      if (b.is_empty()) return a.canonical();
      break;
    case SetOp::Intersection:
      if (a.is_empty() || b.is_empty()) return WindowSet::empty(alphabet);
      if (a.is_full()) return b.canonical();
      if (b.is_full()) return a.canonical();
      break;
    case SetOp::Difference:
      if (a.is_empty() || b.is_full()) return WindowSet::empty(alphabet);
      if (b.is_empty()) return a.canonical();
      if (a.is_full()) return complement(b);
      break;
  }
  const Window span = merged(*a.window(), *b.window());
  WindowSet ra = refine(a, span);
  const WindowSet rb = refine(b, span);
  boost::dynamic_bitset<> bits = ra.bits();
  switch (op) {
    case SetOp::Union: bits |= rb.bits(); break;
    case SetOp::Intersection: bits &= rb.bits(); break;
    case SetOp::Difference: bits -= rb.bits(); break;
  }
  return WindowSet::from_bits(alphabet, span, std::move(bits));
}

WindowSet set_union(const WindowSet& a, const WindowSet& b) { return set_algebra(a, b, SetOp::Union); }
WindowSet set_intersection(const WindowSet& a, const WindowSet& b) {
  return set_algebra(a, b, SetOp::Intersection);
}
WindowSet set_difference(const WindowSet& a, const WindowSet& b) {
  return set_algebra(a, b, SetOp::Difference);
}

bool is_subset(const WindowSet& a, const WindowSet& b) { return set_difference(a, b).is_empty(); }
bool are_disjoint(const WindowSet& a, const WindowSet& b) { return set_intersection(a, b).is_empty(); }

WindowSet shift(const WindowSet& s, int i) {
  const WindowSet c = s.canonical();
  if (c.is_degenerate()) return c;
  const Window w{c.window()->lo - i, c.window()->hi - i};
  return WindowSet::from_bits(c.alphabet(), w, c.bits());
}

std::optional<int> min_coordinate(const WindowSet& s) {
  const WindowSet c = s.canonical();
  if (c.is_degenerate()) return std::nullopt;
  return c.window()->lo;
}

bool in_grade(const WindowSet& s, int m) {
  const auto lo = min_coordinate(s);
  return !lo || *lo >= m;
}

// ---------------------------------------------------------------------------------------------
// Literal syntax

namespace {

class LiteralParser {
 public:
  LiteralParser(Alphabet alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  WindowSet parse() {
    WindowSet s = expression();
    skip_space();
    if (pos_ != text_.size()) error("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidInput, "set literal '" + std::string(text_) + "': " + what + " at offset " +
                                      std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) error("expected a set expression");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_ || pos_ - digits > 9) error("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<WindowSet> arguments() {
    std::vector<WindowSet> args;
    expect('(');
    if (accept(')')) return args;
    do {
      args.push_back(expression());
    } while (accept(','));
    expect(')');
    return args;
  }

  WindowSet expression() {
    const std::string name = identifier();
    if (name == "full") return WindowSet::full(alphabet_);
    if (name == "empty") return WindowSet::empty(alphabet_);
    if (name == "cyl") {
      expect('(');
      const int start = integer();
      expect(',');
      expect('[');
      std::vector<Symbol> word;
      if (!accept(']')) {
        do {
          word.push_back(integer());
        } while (accept(','));
        expect(']');
      }
      expect(')');
      return WindowSet::cylinder(alphabet_, start, word);
    }
    if (name == "shift") {
      expect('(');
      const WindowSet s = expression();
      expect(',');
      const int i = integer();
      expect(')');
      return ddm::shift(s, i);
    }
    const std::vector<WindowSet> args = arguments();
    if (name == "union" || name == "inter") {
      WindowSet acc = name == "union" ? WindowSet::empty(alphabet_) : WindowSet::full(alphabet_);
      for (const WindowSet& a : args) acc = name == "union" ? set_union(acc, a) : set_intersection(acc, a);
      return acc;
    }
    if (name == "diff") {
      if (args.size() != 2) error("diff takes two arguments");
      return set_difference(args[0], args[1]);
    }
    if (name == "compl") {
      if (args.size() != 1) error("compl takes one argument");
      return complement(args[0]);
    }
    error("unknown constructor '" + name + "'");
  }

  Alphabet alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string cylinder_literal(int start, const std::vector<Symbol>& word) {
  std::string out = "cyl(" + std::to_string(start) + ",[";
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(word[t]);
  }
  return out + "])";
}

}  // namespace

WindowSet parse_window_set(Alphabet alphabet, std::string_view text) {
  return LiteralParser(alphabet, text).parse();
}

std::string to_literal(const WindowSet& s) {
  const WindowSet c = s.canonical();
  if (c.is_full()) return "full";
  if (c.is_empty()) return "empty";
  const Window w = *c.window();
  std::vector<std::string> parts;
  for (std::size_t idx = c.bits().find_first(); idx != boost::dynamic_bitset<>::npos; idx = c.bits().find_next(idx))
    parts.push_back(cylinder_literal(w.lo, WindowSet::decode(c.alphabet(), w, idx)));
  if (parts.size() == 1) return parts.front();
  std::string out = "union(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += parts[k];
  }
  return out + ")";
}

}  // namespace ddm
