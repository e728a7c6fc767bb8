#pragma once

#include "charfam/group.hpp"

namespace charfam {

// Backtracking isomorphism test on explicit tables; intended for the small
// shape matches of the structure analysis, not as a general facility.
bool isomorphic(const GroupPtr& a, const GroupPtr& b);

}  // namespace charfam
