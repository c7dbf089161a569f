#pragma once

#include <cstdint>
#include <vector>

#include "braidlab/weyl.hpp"

namespace braidlab {

// Bridge between W(A_{n-1}) and permutations of {0..n-1} in one-line
// notation (s_i is the transposition (i, i+1), composition applies the
// rightmost factor first).

std::vector<uint8_t> one_line_of(const WeylGroup& W, int elem);
int element_of_one_line(const WeylGroup& W, const std::vector<uint8_t>& p);

// Cycle lengths of the permutation, sorted descending.
std::vector<int> cycle_type(const std::vector<uint8_t>& p);
int cycle_count(const std::vector<uint8_t>& p);

}  // namespace braidlab
