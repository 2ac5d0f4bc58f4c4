#pragma once

#include <string>
#include <vector>

#include "anyons/common.hpp"

namespace anyons {

// One generator occurrence: an adjacent-strand crossing s_{index+1} or a
// framing twist t_{index+1}, raised to a nonzero integer power.
struct BraidGen {
  enum class Kind { Sigma, Twist };
  Kind kind = Kind::Sigma;
  int index = 0;  // 0-based strand position
  int power = 1;

  bool operator==(const BraidGen&) const = default;
};

// A word in the framed braid group on `num_strands` strands, stored freely
// reduced (adjacent equal-generator powers merged, zero powers dropped).
// Text form is 1-based: "s1 s2^-1 t1"; the empty word prints as "e".
struct FramedBraidWord {
  int num_strands = 0;
  std::vector<BraidGen> gens;

  static FramedBraidWord parse(const std::string& text, int num_strands);
  std::string to_string() const;

  // Appends one generator, merging with the tail and dropping cancellations.
  void append(BraidGen g);
  void append(const FramedBraidWord& other);

  FramedBraidWord inverse() const;

  // result[j] is the starting position of the strand that ends at position j.
  std::vector<int> strand_permutation() const;

  bool operator==(const FramedBraidWord&) const = default;
};

}  // namespace anyons
