#pragma once

#include <vector>

#include "svmc/symbolic_vector.hpp"

// Precondition-free variants used on hot paths where operands are known canonical.
namespace svmc::detail {

bool shareable_unchecked(const SymbolicVector& x, const SymbolicVector& y);
std::vector<SymbolicVector> subtract_pieces_unchecked(const SymbolicVector& x, const SymbolicVector& y);

}  // namespace svmc::detail
