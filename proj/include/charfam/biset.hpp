#pragma once

#include "charfam/subgroup.hpp"
#include "charfam/verdict.hpp"

namespace charfam {

// The fixed cosets (G/H)^L = { gH : g^-1 L g <= H } carrying the right
// action of the Weyl group W_G(H) = N_G(H)/H by gH . nH = gnH.
struct FixedCosetSet {
  GroupPtr group;
  SubgroupSet h;
  SubgroupSet l;
  std::vector<int> cosets;  // least representative per fixed coset, ascending
  std::vector<int> weyl;    // least representative per W_G(H) element, ascending
  // action[i][j] = index into cosets of cosets[i] * weyl[j]
  std::vector<std::vector<int>> action;
};

FixedCosetSet fixed_cosets(const GroupPtr& g, const SubgroupSet& h, const SubgroupSet& l);

// every nonidentity Weyl element moves every fixed coset; details carry the
// orbit count
Verdict check_weyl_freeness(const FixedCosetSet& f);

// For cyclic H of order p^n with its index-p subgroup K and L <= K: the
// composition map from (G/H)^K x_{W_G(K)} (G/K)^L onto (G/H)^L is well
// defined and bijective, the fixed cosets (G/H)^L equal N_G(L)/H, the Weyl
// actions are free, and the orbit counts satisfy s*t = m.
Verdict check_mu_bijection(const GroupPtr& g, const SubgroupSet& h, const SubgroupSet& k,
                           const SubgroupSet& l);

// runs check_mu_bijection over every valid (H, K, L) triple in G
Verdict sweep_mu(const GroupPtr& g, unsigned jobs = 1);

}  // namespace charfam
