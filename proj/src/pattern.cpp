#include "gpavoid/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gpavoid {

GeneralizedPattern::GeneralizedPattern(std::vector<int> letters, std::vector<bool> adjacency)
    : letters_(std::move(letters)), adjacency_(std::move(adjacency)) {
  const int m = static_cast<int>(letters_.size());
  if (m < 1) throw std::invalid_argument("pattern must have at least one letter");
  if (static_cast<int>(adjacency_.size()) != m - 1)
    throw std::invalid_argument("pattern needs exactly one adjacency flag per gap");
  std::vector<bool> seen(m + 1, false);
  for (int v : letters_) {
    if (v < 1 || v > m)
      throw std::invalid_argument("pattern letters must form a permutation of 1..m");
    if (seen[v]) throw std::invalid_argument("pattern letter " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

GeneralizedPattern GeneralizedPattern::parse(const std::string& text) {
  std::vector<int> letters;
  std::vector<bool> adjacency;
  bool pending_dash = false;   // a dash since the previous letter
  bool any_letter = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '-') {
      if (pending_dash)
        throw std::invalid_argument("stray '-' at position " + std::to_string(i + 1));
      pending_dash = true;
    } else if (ch >= '1' && ch <= '9') {
      if (any_letter) adjacency.push_back(!pending_dash);
      letters.push_back(ch - '0');
      pending_dash = false;
      any_letter = true;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                  "' at position " + std::to_string(i + 1));
    }
  }
  if (!any_letter) throw std::invalid_argument("empty pattern");
  // A trailing dash is the classical notation's right anchor; ignored.
  const int m = static_cast<int>(letters.size());
  std::vector<bool> seen(m + 1, false);
  for (size_t i = 0; i < letters.size(); ++i) {
    const int v = letters[i];
    if (v > m || seen[v]) {
      // Recover the source position of the offending digit for the message.
      size_t pos = 0, count = 0;
      for (size_t j = 0; j < text.size(); ++j)
        if (text[j] != '-' && count++ == i) { pos = j + 1; break; }
      throw std::invalid_argument(std::string(v > m ? "letter " : "repeated letter ") +
                                  std::to_string(v) + " at position " + std::to_string(pos) +
                                  ": pattern letters must form a permutation of 1..m");
    }
    seen[v] = true;
  }
  return GeneralizedPattern(std::move(letters), std::move(adjacency));
}

bool GeneralizedPattern::contiguous() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [](bool b) { return b; });
}

bool GeneralizedPattern::classical() const {
  return std::none_of(adjacency_.begin(), adjacency_.end(), [](bool b) { return b; });
}

std::string GeneralizedPattern::str() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0 && !adjacency_[i - 1]) out += '-';
    out += static_cast<char>('0' + letters_[i]);
  }
  return out;
}

GeneralizedPattern GeneralizedPattern::reversed() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  std::vector<bool> adjacency(adjacency_.rbegin(), adjacency_.rend());
  return GeneralizedPattern(std::move(letters), std::move(adjacency));
}

GeneralizedPattern GeneralizedPattern::complemented() const {
  const int m = length();
  std::vector<int> letters(letters_);
  for (int& v : letters) v = m + 1 - v;
  return GeneralizedPattern(std::move(letters), adjacency_);
}

GeneralizedPattern GeneralizedPattern::transformed(Symmetry s) const {
  switch (s) {
    case Symmetry::identity: return *this;
    case Symmetry::reverse: return reversed();
    case Symmetry::complement: return complemented();
    case Symmetry::reverse_complement: return reversed().complemented();
  }
  throw std::invalid_argument("bad symmetry");
}

namespace {

// Depth-first search over host positions, pattern letters assigned left to
// right. `fixed_last` >= 0 pins the final letter's position. The sink
// returns false to stop after the current tuple.
bool search(std::span<const int> w, const GeneralizedPattern& g, int j, std::vector<int>& chosen,
            int fixed_last, const std::function<bool(const std::vector<int>&)>& sink) {
  const int m = g.length();
  const int size = static_cast<int>(w.size());
  if (j == m) return !sink(chosen);
  int lo = (j == 0) ? 0 : chosen[j - 1] + 1;
  int hi = size - (m - j);
  if (j > 0 && g.adjacency()[j - 1]) hi = std::min(hi, lo);  // forced to chosen[j-1] + 1
  if (fixed_last >= 0) {
    if (j == m - 1) {
      lo = std::max(lo, fixed_last);
      hi = std::min(hi, fixed_last);
    } else {
      hi = std::min(hi, fixed_last - (m - 1 - j));
    }
  }
  const auto& pl = g.letters();
  for (int pos = lo; pos <= hi; ++pos) {
    bool compatible = true;
    for (int r = 0; r < j && compatible; ++r)
      compatible = (pl[r] < pl[j]) == (w[chosen[r]] < w[pos]);
    if (!compatible) continue;
    chosen[j] = pos;
    if (search(w, g, j + 1, chosen, fixed_last, sink)) return true;
  }
  return false;
}

bool find_any(std::span<const int> w, const GeneralizedPattern& g, int fixed_last) {
  if (static_cast<int>(w.size()) < g.length()) return false;
  std::vector<int> chosen(g.length());
  return search(w, g, 0, chosen, fixed_last, [](const std::vector<int>&) { return false; });
}

}  // namespace

std::vector<std::vector<int>> occurrences(const Permutation& p, const GeneralizedPattern& g) {
  std::vector<std::vector<int>> out;
  if (p.size() < g.length()) return out;
  std::vector<int> chosen(g.length());
  search(std::span<const int>(p.letters()), g, 0, chosen, -1, [&](const std::vector<int>& tup) {
    std::vector<int> positions(tup);
    for (int& q : positions) ++q;  // report 1-based
    out.push_back(std::move(positions));
    return true;
  });
  return out;
}

bool avoids(const Permutation& p, const GeneralizedPattern& g) {
  return !find_any(std::span<const int>(p.letters()), g, -1);
}

std::vector<int> first_occurrence(const Permutation& p, const GeneralizedPattern& g) {
  std::vector<int> out;
  if (p.size() < g.length()) return out;
  std::vector<int> chosen(g.length());
  search(std::span<const int>(p.letters()), g, 0, chosen, -1, [&](const std::vector<int>& tup) {
    out = tup;
    for (int& q : out) ++q;
    return false;
  });
  return out;
}

bool word_contains(std::span<const int> word, const GeneralizedPattern& g) {
  return find_any(word, g, -1);
}

bool word_has_occurrence_ending_at(std::span<const int> word, const GeneralizedPattern& g,
                                   int last_pos) {
  return find_any(word, g, last_pos);
}

}  // namespace gpavoid
