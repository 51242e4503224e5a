#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gpavoid/perm.hpp"

namespace gpavoid {

// A pattern whose letters form a permutation of {1..m} together with one
// adjacency flag per gap: adjacency[i] set means letters i and i+1 must
// occupy consecutive positions in the host. The text form writes a dash
// where adjacency is NOT required, so "1-32" pins its last two letters
// together and "132" is a contiguous subword pattern. A leading or
// trailing dash is accepted and ignored.
class GeneralizedPattern {
 public:
  GeneralizedPattern(std::vector<int> letters, std::vector<bool> adjacency);

  // Throws std::invalid_argument naming the offending character position.
  static GeneralizedPattern parse(const std::string& text);

  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  const std::vector<bool>& adjacency() const { return adjacency_; }
  bool contiguous() const;  // no dash anywhere
  bool classical() const;   // dash in every gap
  std::string str() const;

  GeneralizedPattern reversed() const;
  GeneralizedPattern complemented() const;
  GeneralizedPattern transformed(Symmetry s) const;

  bool operator==(const GeneralizedPattern&) const = default;

 private:
  std::vector<int> letters_;
  std::vector<bool> adjacency_;
};

// All occurrences of g in p as 1-based position tuples, in lexicographic
// order. A tuple's host letters are order-isomorphic to the pattern and
// honor every adjacency flag.
std::vector<std::vector<int>> occurrences(const Permutation& p, const GeneralizedPattern& g);

// True iff p contains no occurrence of g; stops at the first witness.
bool avoids(const Permutation& p, const GeneralizedPattern& g);

// First occurrence in lexicographic order, 1-based, or {} when p avoids g.
std::vector<int> first_occurrence(const Permutation& p, const GeneralizedPattern& g);

// Word-level engine shared with the exhaustive counters: works on any
// word of pairwise-distinct integers, 0-based positions.
bool word_contains(std::span<const int> word, const GeneralizedPattern& g);
bool word_has_occurrence_ending_at(std::span<const int> word, const GeneralizedPattern& g,
                                   int last_pos);

}  // namespace gpavoid
