#pragma once

#include <optional>
#include <vector>

#include "charfam/bitset.hpp"
#include "charfam/group.hpp"

namespace charfam {

// A subgroup of a fixed parent group, stored as the bitset of its members.
// Construction verifies closure and the Lagrange divisibility.
struct SubgroupSet {
  GroupPtr parent;
  Bitset members;

  int size() const { return members.count(); }
  bool contains(int x) const { return members.test(x); }
  std::vector<int> elements() const { return members.members(); }
  bool operator==(const SubgroupSet& o) const { return members == o.members; }
};

SubgroupSet make_subgroup(const GroupPtr& g, const Bitset& members);
SubgroupSet trivial_subgroup(const GroupPtr& g);
SubgroupSet full_subgroup(const GroupPtr& g);
SubgroupSet subgroup_from_elements(const GroupPtr& g, const std::vector<int>& elements);

// smallest subgroup containing gens (breadth-first product closure)
SubgroupSet closure(const GroupPtr& g, const std::vector<int>& gens);

SubgroupSet center(const GroupPtr& g);
SubgroupSet centralizer(const GroupPtr& g, const SubgroupSet& s);
SubgroupSet normalizer(const GroupPtr& g, const SubgroupSet& s);

// gSg^-1
SubgroupSet conjugate_subgroup(const SubgroupSet& s, int g);
// least bitset in the conjugation orbit
SubgroupSet canonical_conjugate(const SubgroupSet& s);
bool are_conjugate(const SubgroupSet& a, const SubgroupSet& b);
// some g with gag^-1 == b, least index
std::optional<int> conjugating_element(const SubgroupSet& a, const SubgroupSet& b);

// Every subgroup (of order <= max_order when given), found by layered cyclic
// extension: each known subgroup H is extended by elements of its normalizer
// whose image in N/H has prime order. Sorted by (order, bitset).
std::vector<SubgroupSet> all_subgroups(const GroupPtr& g, int max_order = 0);

// largest r with an elementary abelian subgroup of rank r inside h
int rank(const SubgroupSet& h);
bool is_elementary_abelian(const SubgroupSet& h);
bool is_cyclic(const SubgroupSet& h);
// [p, n] with |h| = p^n, or nullopt when |h| is not a prime power
std::optional<std::pair<int, int>> prime_power_order(const SubgroupSet& h);

// unique subgroup of prime order of a nontrivial rank-one p-group
SubgroupSet omega1(const SubgroupSet& h);

// Injective homomorphism between explicit groups, verified exhaustively at
// construction.
struct GroupEmbedding {
  enum class Kind { Inclusion, ConjugationInclusion, Relabeling };
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;
  Kind kind = Kind::Inclusion;
  int witness = 0;  // conjugator in the ambient parent for ConjugationInclusion
};

GroupEmbedding make_embedding(const GroupPtr& source, const GroupPtr& target,
                              std::vector<int> map, GroupEmbedding::Kind kind,
                              int witness = 0);

// A subgroup relabeled as a standalone group together with its placement in
// the parent. to_parent[i] is the parent index of element i; from_parent is
// the partial inverse (-1 off the subgroup).
struct AsGroup {
  SubgroupSet sub;
  GroupPtr group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;

  GroupEmbedding embedding(const GroupPtr& parent) const;
};

AsGroup as_group(const SubgroupSet& h);

}  // namespace charfam
