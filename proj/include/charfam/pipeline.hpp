#pragma once

#include "charfam/group.hpp"
#include "charfam/report.hpp"

namespace charfam {

struct RunOptions {
  unsigned jobs = 1;
  bool timings = false;
  long rank1_n = 0;  // 0: least valid degree
};

// Proposition/lemma pipeline of the cyclic-center class function.
VerificationReport run_check_chi(const GroupPtr& g, const RunOptions& opts = {});
// Star diagram pipeline for rank-one isotropy.
VerificationReport run_check_rank1(const GroupPtr& g, const RunOptions& opts = {});
// Exhaustive fixed-coset composition sweep.
VerificationReport run_check_biset(const GroupPtr& g, const RunOptions& opts = {});
// All of the above in one report.
VerificationReport run_check_all(const GroupPtr& g, const RunOptions& opts = {});

}  // namespace charfam
