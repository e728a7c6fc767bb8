#pragma once

#include <gmpxx.h>

#include <vector>

#include "charfam/class_function.hpp"
#include "charfam/group.hpp"

namespace charfam {

// Complete list of irreducible characters, exact, rows sorted by degree then
// lexicographically by value vector. Construction verifies row and column
// orthogonality and the degree sum exactly.
struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
};

// Burnside-Dixon: class-sum matrices are simultaneously diagonalized over a
// prime field F_l with l = 1 (mod exponent) and l > 2*sqrt(|G|), then the
// rows are lifted to exact cyclotomics by root-of-unity multiplicity
// extraction. Throws LiftFailureError on any internal inconsistency.
CharacterTable character_table(const GroupPtr& g);

// the Dixon prime used for a group of this order and exponent
long dixon_prime(int order, int exponent);

struct IsCharacterResult {
  bool ok = false;
  // multiplicities aligned with table.irreducibles when ok
  std::vector<mpz_class> multiplicities;
  // offending irreducible index and inner product value otherwise
  int bad_index = -1;
  Cyclotomic bad_value;
};

// f is a character iff every <f, chi_i> is a nonnegative rational integer
IsCharacterResult is_character(const ClassFunction& f, const CharacterTable& table);

// True iff every nonidentity element has zero fixed-subspace dimension.
// Requires f to be a character; throws NotCharacterError when a fixed
// dimension fails to be a nonnegative rational integer.
bool fixed_point_free(const ClassFunction& f);

}  // namespace charfam
