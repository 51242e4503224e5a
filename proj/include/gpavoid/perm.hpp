#pragma once

#include <string>
#include <vector>

namespace gpavoid {

// A permutation of {1..n} written as the word a_1 a_2 ... a_n. The empty
// word (n = 0) is the unique permutation of length zero and is valid
// everywhere.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> letters);

  // Accepts "5 4 1 2 3", "5,4,1,2,3" and, for n <= 9, the unseparated
  // digit string "54123". Throws std::invalid_argument on malformed input.
  static Permutation parse(const std::string& text);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int at(int pos) const;  // 1-based position
  const std::vector<int>& letters() const { return letters_; }
  std::string str() const;  // letters separated by single spaces

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return letters_ < other.letters_; }

 private:
  std::vector<int> letters_;
};

enum class Placement { begin, end };
enum class Direction { increasing, decreasing };

// Requires the first (begin) or last (end) k letters of a permutation to
// be strictly monotone in the stated direction. k = 1 is no restriction
// at all: every permutation satisfies it, the empty one included. For
// k >= 2 a permutation shorter than k never satisfies the constraint.
struct BoundaryConstraint {
  Placement placement = Placement::begin;
  Direction direction = Direction::increasing;
  int k = 1;

  bool operator==(const BoundaryConstraint&) const = default;
};

// The trivial bijections of S_n onto itself. Identity is included so the
// set closes into the four-element group {id, R, C, RC}.
enum class Symmetry { identity, reverse, complement, reverse_complement };

// Group composition: apply g first, then f.
Symmetry compose(Symmetry f, Symmetry g);

Permutation trivial_map(const Permutation& p, Symmetry s);

// How a symmetry transports a boundary constraint: reverse swaps placement
// and direction, complement swaps direction only, reverse-complement swaps
// placement only. p satisfies c iff trivial_map(p, s) satisfies
// transport(c, s).
BoundaryConstraint transport(const BoundaryConstraint& c, Symmetry s);

bool boundary_satisfies(const Permutation& p, const BoundaryConstraint& c);

// The letters a_i with a_i < a_j for every j > i, reported in position
// order. For n >= 1 this is a strictly increasing value sequence that
// starts with the letter 1 and ends with the last letter of p.
std::vector<int> right_to_left_minima(const Permutation& p);

std::string to_string(Placement p);
std::string to_string(Direction d);
std::string to_string(Symmetry s);
Placement placement_from_string(const std::string& s);
Direction direction_from_string(const std::string& s);

}  // namespace gpavoid
