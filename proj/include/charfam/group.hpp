#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace charfam {

struct ConjugacyPartition {
  std::vector<std::vector<int>> classes;  // each sorted; classes ordered by least member
  std::vector<int> class_of;
  std::vector<int> representatives;  // representatives[k] == classes[k][0]
};

// Finite group given by its full multiplication table. Element 0 is the
// identity. Immutable once built; derived data (element orders, conjugacy
// classes, exponent) is computed lazily and cached.
class Group {
 public:
  static constexpr int kOrderCap = 4096;
  // Exhaustive associativity checking is cubic, so above this order only
  // generator triples plus a fixed random sample are checked.
  static constexpr int kFullAssocCap = 512;

  int order() const { return order_; }
  const std::string& label() const { return label_; }

  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
  int power(int a, long e) const;

  int element_order(int a) const { return elt_order_[a]; }
  const std::vector<int>& element_orders() const { return elt_order_; }
  int exponent() const;
  bool is_abelian() const;

  // A small generating set, grown greedily by least index.
  const std::vector<int>& generators() const;

  const ConjugacyPartition& conjugacy() const;

  // Validates the table (Latin square, identity, inverses, associativity)
  // and throws InvalidTableError / OrderCapError on failure. gens_hint, when
  // given, is used for the generator-triple associativity pass on large
  // tables and seeds the cached generating set.
  static std::shared_ptr<const Group> make(std::string label, int order,
                                           std::vector<std::uint16_t> mult,
                                           std::vector<int> gens_hint = {});

 private:
  Group() = default;

  std::string label_;
  int order_ = 1;
  std::vector<std::uint16_t> mult_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;

  mutable std::once_flag gens_once_, conj_once_, exp_once_;
  mutable std::vector<int> gens_;
  mutable ConjugacyPartition conj_;
  mutable int exponent_ = 0;
  std::vector<int> gens_hint_;
};

using GroupPtr = std::shared_ptr<const Group>;

ConjugacyPartition conjugacy_classes(const Group& g);

}  // namespace charfam
