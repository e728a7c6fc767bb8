#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charfam/group.hpp"

namespace charfam {

GroupPtr make_cyclic(int n);
GroupPtr make_elementary_abelian(int p, int k);
// extraspecial of order p^3 and exponent p (p odd)
GroupPtr make_heisenberg(int p);
// extraspecial of order p^5 and exponent p (p odd)
GroupPtr make_extraspecial5(int p);
GroupPtr make_direct_product(const std::vector<GroupPtr>& factors);

// base ⋊ <t>, where the action matrix gives the images of the canonical base
// generators under conjugation by t, written in exponent coordinates. The
// order of t equals the multiplicative order of the matrix; the matrix must
// define an automorphism of the (abelian) base.
GroupPtr make_semidirect(const GroupPtr& base, const std::vector<std::vector<int>>& action);

// permutation generators on points 0..degree-1
GroupPtr make_from_permutations(const std::string& label, int degree,
                                const std::vector<std::vector<int>>& generators);

// Spec micro-grammar: cyclic:9, elemab:3,3, heisenberg:3, extraspecial5:3,
// product:cyclic:3,heisenberg:3, file:PATH. Throws ParseError on bad input.
GroupPtr build_group(const std::string& spec);

// Text formats:
//   group <label> order <n>   followed by n rows of n indices
//   perm <label> degree <d>   followed by one generator per line in cycle
//                             notation on points 1..d, e.g. (1 2 3)(4 5)
GroupPtr read_group(std::istream& in);
GroupPtr load_group_file(const std::string& path);
void write_group(std::ostream& out, const Group& g);

// names accepted by `build_group` for the built-in desk-scale catalog
std::vector<std::string> catalog_specs();

}  // namespace charfam
