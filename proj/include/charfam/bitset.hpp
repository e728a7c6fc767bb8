#pragma once

#include <cstdint>
#include <vector>

namespace charfam {

// Fixed-width bitset over element indices of one group. The canonical order
// `precedes` compares member lists: at the first index where two sets differ,
// the set containing that index comes first. This is the tie-break order used
// everywhere a "least" subgroup or representative is picked.
class Bitset {
 public:
  Bitset() : nbits_(0) {}
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size_bits() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const;
  bool none() const;

  bool operator==(const Bitset& o) const = default;
  bool precedes(const Bitset& o) const;
  // std::map / std::set ordering; same relation as precedes
  bool operator<(const Bitset& o) const { return precedes(o); }

  bool subset_of(const Bitset& o) const;
  Bitset intersect(const Bitset& o) const;

  std::vector<int> members() const;

 private:
  int nbits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace charfam
