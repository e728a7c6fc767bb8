#include "charfam/bitset.hpp"

#include <bit>

namespace charfam {

int Bitset::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool Bitset::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool Bitset::precedes(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] ^ o.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (words_[i] & low) != 0;
    }
  }
  return false;
}

bool Bitset::subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

Bitset Bitset::intersect(const Bitset& o) const {
  Bitset r(nbits_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

std::vector<int> Bitset::members() const {
  std::vector<int> out;
  for (int i = 0; i < nbits_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

}  // namespace charfam
