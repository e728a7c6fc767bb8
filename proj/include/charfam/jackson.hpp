#pragma once

#include <optional>
#include <utility>

#include "charfam/quadruple.hpp"

namespace charfam {

struct NormalQ {
  SubgroupSet q;
  int c;  // generator of Z(G) meet Q
  int a;  // least element of Q outside <c>
};

// Least normal subgroup isomorphic to C_p x C_p (by canonical bitset order).
// Throws NoSuchQError for cyclic G and EvenPrimeError for p = 2.
NormalQ find_normal_Q(const GroupPtr& g, int p,
                      const std::vector<SubgroupSet>& lattice);

// The class function of the cyclic-center construction:
//   p(p-1)|G| at 1, 0 on Z(G)\1, -p|G| on Q\<c>, 0 on C_G(Q)\Q,
//   -|G| on order-p elements outside C_G(Q), 0 on their higher orders.
// <c> = Z(G) meet Q here: Q is abelian, so the center of Q read literally
// would be all of Q and empty the third case; the case arithmetic needs the
// central line. Hypotheses (p odd, rank three, cyclic center) are enforced
// with HypothesisViolationError.
ClassFunction jackson_chi(const GroupPtr& g, const SubgroupSet& q, const SubgroupSet& cgq);

// Everything the section-five pipeline shares.
struct JacksonData {
  GroupPtr group;
  int p = 0;
  SubgroupSet z;    // Z(G)
  SubgroupSet q;    // normal C_p x C_p
  int c = 0;        // generator of Z(G) meet Q
  int a = 0;        // noncentral element of Q
  SubgroupSet cgq;  // centralizer of Q
  std::vector<SubgroupSet> lattice;
  SubgroupFamily family;  // all H with trivial intersection with Z(G)
  FamilyContext ctx;
  std::optional<ClassFunction> chi;
  CompatibleFamily v_chi;
  std::vector<TypeInfo> tags;
  std::vector<SubgroupSet> e_reps;  // E_1..E_m
  std::vector<SubgroupSet> c_reps;  // C_i = E_i meet C_G(Q)
  SubfamilyDiagram subfamilies;
  long n_a = 0;
  std::vector<long> n_e;
  QuadrupleBundle quadruple;
  bool quadruple_built = false;
};

// Builds the shared data; throws HypothesisViolationError when G is not an
// odd-order rank-three p-group with cyclic center.
JacksonData build_jackson_data(const GroupPtr& g, unsigned jobs = 1);

// (i) every restriction of chi to a family member is a character;
// (ii) the restriction to every rank-two elementary abelian member has
// trivial multiplicity zero. Multiplicity tables land in the details.
std::pair<Verdict, Verdict> verify_prop52(const JacksonData& data, unsigned jobs = 1);

// members meeting Q nontrivially centralize Q and admit a conjugate meeting
// Q exactly in <a>
Verdict verify_lemma53(const JacksonData& data);
// members outside C_G(Q) have cyclic intersection with it and match one of
// the three model shapes
Verdict verify_lemma54(const JacksonData& data);
// the discrete subfamily diagram is almost strongly connected, uncovered
// members are cyclic, pairwise intersections of the E-nodes are cyclic
Verdict verify_lemma55(const JacksonData& data);

// the quadruple over {a, e_1..e_m}
QuadrupleBundle build_jackson_quadruple(const JacksonData& data, unsigned jobs = 1);

// factorization of V_chi through the quadruple plus the two induced
// character identities of the proof, all as exact character equalities
Verdict verify_lemma56(const JacksonData& data, unsigned jobs = 1);

// With two independent central order-p elements c, c', every subgroup
// meeting <c, c'> trivially has rank at most one. Inapplicable when the
// center has p-rank below two.
Verdict noncyclic_center_reduction(const GroupPtr& g);

}  // namespace charfam
