#include "gpavoid/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gpavoid {

namespace {
void check_bijection_word(const std::vector<int>& letters) {
  const int n = static_cast<int>(letters.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : letters) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation letter " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[v]) throw std::invalid_argument("permutation letter " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}
}  // namespace

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  check_bijection_word(letters_);
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> letters;
  const bool separated = text.find_first_of(" ,\t") != std::string::npos;
  if (separated) {
    std::string token;
    std::istringstream in(text);
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream ns(normalized);
    while (ns >> token) {
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("permutation token '" + token + "' is not a number");
      }
      if (used != token.size())
        throw std::invalid_argument("permutation token '" + token + "' is not a number");
      letters.push_back(v);
    }
  } else {
    // Unseparated digit string, unambiguous only up to n = 9.
    for (size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                    "' at position " + std::to_string(i + 1));
      letters.push_back(ch - '0');
    }
    if (letters.size() > 9)
      throw std::invalid_argument("digit-string form is only defined for n <= 9");
  }
  return Permutation(std::move(letters));
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: n must be non-negative");
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  return Permutation(std::move(letters));
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("permutation position out of range");
  return letters_[pos - 1];
}

std::string Permutation::str() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Symmetry compose(Symmetry f, Symmetry g) {
  // The enum encodes the Klein four-group: reverse and complement generate
  // it and commute, so composition is XOR on the underlying values.
  return static_cast<Symmetry>(static_cast<int>(f) ^ static_cast<int>(g));
}

Permutation trivial_map(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> out(p.letters());
  switch (s) {
    case Symmetry::identity:
      break;
    case Symmetry::reverse:
      std::reverse(out.begin(), out.end());
      break;
    case Symmetry::complement:
      for (int& v : out) v = n + 1 - v;
      break;
    case Symmetry::reverse_complement:
      std::reverse(out.begin(), out.end());
      for (int& v : out) v = n + 1 - v;
      break;
  }
  return Permutation(std::move(out));
}

BoundaryConstraint transport(const BoundaryConstraint& c, Symmetry s) {
  BoundaryConstraint out = c;
  const auto flip_placement = [&] {
    out.placement = out.placement == Placement::begin ? Placement::end : Placement::begin;
  };
  const auto flip_direction = [&] {
    out.direction =
        out.direction == Direction::increasing ? Direction::decreasing : Direction::increasing;
  };
  switch (s) {
    case Symmetry::identity:
      break;
    case Symmetry::reverse:
      flip_placement();
      flip_direction();
      break;
    case Symmetry::complement:
      flip_direction();
      break;
    case Symmetry::reverse_complement:
      flip_placement();
      break;
  }
  return out;
}

bool boundary_satisfies(const Permutation& p, const BoundaryConstraint& c) {
  if (c.k < 1) throw std::domain_error("boundary constraint requires k >= 1");
  if (c.k == 1) return true;  // no restriction, empty permutation included
  const int n = p.size();
  if (n < c.k) return false;
  const auto& w = p.letters();
  const int start = c.placement == Placement::begin ? 0 : n - c.k;
  for (int i = start + 1; i < start + c.k; ++i) {
    const bool ascent = w[i - 1] < w[i];
    if (ascent != (c.direction == Direction::increasing)) return false;
  }
  return true;
}

std::vector<int> right_to_left_minima(const Permutation& p) {
  std::vector<int> out;
  int running_min = p.size() + 1;
  const auto& w = p.letters();
  for (int i = p.size() - 1; i >= 0; --i) {
    if (w[i] < running_min) {
      running_min = w[i];
      out.push_back(w[i]);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(Placement p) { return p == Placement::begin ? "begin" : "end"; }

std::string to_string(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::reverse: return "reverse";
    case Symmetry::complement: return "complement";
    case Symmetry::reverse_complement: return "reverse-complement";
  }
  return "?";
}

Placement placement_from_string(const std::string& s) {
  if (s == "begin") return Placement::begin;
  if (s == "end") return Placement::end;
  throw std::invalid_argument("unknown placement '" + s + "'");
}

Direction direction_from_string(const std::string& s) {
  if (s == "increasing") return Direction::increasing;
  if (s == "decreasing") return Direction::decreasing;
  throw std::invalid_argument("unknown direction '" + s + "'");
}

}  // namespace gpavoid
