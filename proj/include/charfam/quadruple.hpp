#pragma once

#include "charfam/character_table.hpp"
#include "charfam/class_function.hpp"
#include "charfam/family.hpp"

namespace charfam {

// Relabeled member groups of one family, computed once and shared by the
// checkers (class functions on member groups compare by group identity).
struct FamilyContext {
  const SubgroupFamily* family = nullptr;
  std::vector<AsGroup> as_groups;  // aligned with family->members
};

FamilyContext build_family_context(const SubgroupFamily& family, unsigned jobs = 1);

// One representation per family member, on the member groups of a context.
using CompatibleFamily = std::vector<ClassFunction>;

// the family obtained by restricting a single class function on G
CompatibleFamily restrict_family(const ClassFunction& f, const FamilyContext& ctx,
                                 unsigned jobs = 1);

// V_H isomorphic to (c_g)^* V_K for every conjugation map c_g between
// members; checked as exact character identities. Any c_g factors as an
// onto conjugation followed by an inclusion, so those two kinds suffice.
Verdict check_compatible_family(const FamilyContext& ctx, const CompatibleFamily& v,
                                unsigned jobs = 1);

// The witness data that a compatible family factors through a diagram of
// finite groups: per poset node its group (a subgroup of G), representation,
// subfamily, and per-member conjugating witnesses; per edge the group map.
struct QuadrupleNode {
  SubgroupSet gamma;
  AsGroup gamma_group;
  ClassFunction rho;
  // aligned with the node subfamily members: g with g H g^-1 <= Gamma_d
  std::vector<int> witnesses;
};

struct QuadrupleBundle {
  GroupPtr group;
  SubfamilyDiagram diagram;
  std::vector<QuadrupleNode> nodes;
  std::vector<GroupEmbedding> edge_maps;  // aligned with diagram.poset.relations
};

// the assignment alpha_H^d: H -> Gamma_d realized by the node witness
GroupEmbedding assignment_embedding(const QuadrupleBundle& bundle, int node, int member,
                                    const AsGroup& h_group);

// rho_x and rho_y composed with mu_{x,y} agree on every edge
Verdict check_diagram_of_reps(const QuadrupleBundle& bundle);

// per node: all assignments commute with conjugation maps up to inner
// automorphisms of Gamma_d; per edge: A_y restricted to H_x equals
// mu_{x,y} composed with A_x, again up to inner automorphisms of Gamma_y
Verdict check_assignment_compatibility(const QuadrupleBundle& bundle, const FamilyContext& ctx,
                                       unsigned jobs = 1);

// V restricted to each node subfamily equals rho_d pulled back along the
// assignments, as exact class functions
Verdict check_factorization(const CompatibleFamily& v, const QuadrupleBundle& bundle,
                            const FamilyContext& ctx, unsigned jobs = 1);

}  // namespace charfam
