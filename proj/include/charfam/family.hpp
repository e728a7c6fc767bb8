#pragma once

#include <map>
#include <string>
#include <vector>

#include "charfam/subgroup.hpp"
#include "charfam/verdict.hpp"

namespace charfam {

// A family of subgroups: closed under conjugation and under taking
// subgroups, sorted by (order, bitset) and deduplicated. Closure is checked
// exhaustively at construction against the full subgroup lattice.
struct SubgroupFamily {
  GroupPtr group;
  std::vector<SubgroupSet> members;
  std::string label;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(const Bitset& b) const;
  int index_of(const Bitset& b) const;  // -1 when absent
};

// verifies both closure conditions; lattice must list every subgroup of group
SubgroupFamily make_family(const GroupPtr& g, std::vector<SubgroupSet> members,
                           const std::vector<SubgroupSet>& lattice, std::string label);

// all H with H intersect Z0 trivial
SubgroupFamily family_trivial_intersection(const GroupPtr& g, const SubgroupSet& z0,
                                           const std::vector<SubgroupSet>& lattice);

// Finite poset, either discrete or one-dimensional (no chains x < y < z).
struct PosetDiagram {
  std::vector<std::string> objects;
  std::vector<std::pair<int, int>> relations;  // (x, y) meaning x < y
  bool one_dimensional = true;

  int num_nodes() const { return static_cast<int>(objects.size()); }
};

PosetDiagram make_poset(std::vector<std::string> objects,
                        std::vector<std::pair<int, int>> relations);

// induced subposet on the nodes whose subfamily contains H
PosetDiagram poset_DH(const PosetDiagram& poset, const std::vector<SubgroupFamily>& subfamilies,
                      const SubgroupSet& h, std::vector<int>* node_ids = nullptr);

// simply connected realization: nonempty, connected, and nodes - edges == 1
bool graph_simply_connected(int nodes, const std::vector<std::pair<int, int>>& edges);

// Subgroup types of the cyclic-center analysis. Every family member gets a
// primary tag; type C additionally marks members of C_G(Q) lying inside a
// type B or type E subgroup.
enum class SubgroupType { A, B, E };

struct TypeInfo {
  SubgroupType primary = SubgroupType::A;
  bool type_c = false;
  // the literal alternative reading classifies on cyclicity of
  // H | C_G(Q) rather than of H; divergences are reported, not used
  SubgroupType literal_reading = SubgroupType::A;
};

const char* type_name(SubgroupType t);

// tags.size() == family.size(); A when H <= C_G(Q), otherwise B for cyclic
// and E for noncyclic H
std::vector<TypeInfo> classify_types(const SubgroupFamily& family, const SubgroupSet& q,
                                     const SubgroupSet& cgq);

// conjugacy class representatives (least bitset) of the unique rank-two
// elementary abelian subgroups of the type E members, sorted
std::vector<SubgroupSet> typeE_max_elementary(const SubgroupFamily& family,
                                              const std::vector<TypeInfo>& tags);

// Diagram of subfamilies over a poset; node d holds subfamily index d.
struct SubfamilyDiagram {
  PosetDiagram poset;
  std::vector<SubgroupFamily> subfamilies;
};

// discrete diagram {a, e_1..e_m}: node 0 carries the type A family, node
// 1+i the subgroup-closed family of type E members over E_i
SubfamilyDiagram build_jackson_subfamilies(const SubgroupFamily& family,
                                           const std::vector<TypeInfo>& tags,
                                           const std::vector<SubgroupSet>& e_reps,
                                           const SubgroupSet& cgq,
                                           const std::vector<SubgroupSet>& lattice);

// every D_H simply connected
Verdict strongly_connected(const SubfamilyDiagram& diagram, const SubgroupFamily& family);
// cyclic prime-power members are exempt; their D_H must be empty or edgeless
Verdict almost_strongly_connected(const SubfamilyDiagram& diagram, const SubgroupFamily& family);
// union of the subfamilies against the family; failures list the remainder
Verdict covers_family(const SubfamilyDiagram& diagram, const SubgroupFamily& family);

}  // namespace charfam
