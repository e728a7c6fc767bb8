#pragma once

#include <functional>
#include <iosfwd>

#include "charfam/cyclotomic.hpp"
#include "charfam/group.hpp"
#include "charfam/subgroup.hpp"

namespace charfam {

// Exact class function on a group: one cyclotomic value per conjugacy class,
// all at conductor exponent(G).
class ClassFunction {
 public:
  // empty state, only assignable; any use before assignment is a bug
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values);
  // builds from an element-wise evaluator and checks constancy on classes
  static ClassFunction from_elements(const GroupPtr& group,
                                     const std::function<Cyclotomic(int)>& value_at);

  const GroupPtr& group() const { return group_; }
  int num_classes() const { return static_cast<int>(values_.size()); }
  const Cyclotomic& value_on_class(int k) const { return values_[k]; }
  const Cyclotomic& value_at(int element) const {
    return values_[group_->conjugacy().class_of[element]];
  }
  const Cyclotomic& degree() const { return values_[0]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction scaled(const mpq_class& s) const;
  bool operator==(const ClassFunction& o) const;

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

ClassFunction trivial_character(const GroupPtr& g);
ClassFunction regular_character(const GroupPtr& g);

// (1/|G|) sum over g of f(g) * conj(h(g)), computed class-wise
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

// f on the ambient group, pulled back to the subgroup presented by asg
ClassFunction restrict_to(const ClassFunction& f, const AsGroup& asg);

// composition with an injective homomorphism: the class function
// s -> f(emb(s)) on emb.source
ClassFunction pullback(const ClassFunction& f, const GroupEmbedding& emb);

// Frobenius induction along emb (an embedding of f's group into big)
ClassFunction induce(const ClassFunction& f, const GroupPtr& big, const GroupEmbedding& emb);

// permutation character of the G-set G/H, and its reduced variant minus one
ClassFunction perm_character(const GroupPtr& g, const SubgroupSet& h);
ClassFunction reduced_perm_character(const GroupPtr& g, const SubgroupSet& h);

// dimension of the fixed subspace of <h> in a representation with character
// f: (1/|<h>|) * sum_k f(h^k)
Cyclotomic fixed_subspace_dim(const ClassFunction& f, int element);

// text block: conductor line, then one `class_rep coefficients` line per class
void write_class_function(std::ostream& out, const ClassFunction& f);
ClassFunction read_class_function(std::istream& in, const GroupPtr& g);

}  // namespace charfam
