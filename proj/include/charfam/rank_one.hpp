#pragma once

#include "charfam/quadruple.hpp"

namespace charfam {

// Star-shaped diagram over the trivial node and one node per conjugacy class
// of prime-order subgroups, with Gamma_d the normalizer and rho_d a multiple
// of the representation induced from the reduced regular representation of d.
struct RankOneData {
  GroupPtr group;
  SubgroupFamily family;  // rank-one prime-power subgroups plus the trivial one
  FamilyContext ctx;
  std::vector<SubgroupSet> d_reps;  // canonical class representatives, leaves 1..k
  std::vector<long> m_d;            // per leaf: |N_G(d)| (p-1)/p
  long n = 1;
  std::vector<long> n_d;  // per leaf: n / m_d
  QuadrupleBundle bundle;
  // hypothesis report: every prime-power subgroup of G has rank at most one
  bool all_prime_power_rank_one = true;
};

// n_multiple = 0 picks the least valid n = lcm(m_d); otherwise n_multiple
// must be divisible by every m_d
RankOneData build_rank_one_diagram(const GroupPtr& g, long n_override = 0, unsigned jobs = 1);

// Check five alone: every V_H = rho_d after alpha_H^d is well defined
// across nodes, is a character, and is fixed point free; cross-checked
// against the trivial multiplicities on the cyclic members.
Verdict verify_rank_one_freeness(const RankOneData& data, unsigned jobs = 1);

// The five checks: subfamilies cover the family, the diagram is strongly
// connected, representations agree along edges, assignments are compatible,
// and every member representation is free. Details carry the m_d table.
Verdict verify_rank_one(const RankOneData& data, unsigned jobs = 1);

}  // namespace charfam
