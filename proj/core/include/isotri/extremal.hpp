#pragma once

#include <cstdint>

#include "isotri/grid_set.hpp"

namespace isotri {

/// True iff no point (a,b) of A and (m,n) != (0,0) put (a+m,b+n) and
/// (a-n,b+m) in A as well. Over the integers the three points of such a
/// triple are automatically pairwise distinct.
bool is_configuration_free(const GridSet& a);

struct ExtremalResult {
    int side = 0;
    int max_size = 0;
    GridSet witness;
    std::uint64_t nodes_explored = 0;
    /// False when the node budget ran out; max_size is then only a lower
    /// bound realized by the witness.
    bool exact = true;
};

/// Exact maximum size of a configuration-free subset of the N x N grid by
/// branch and bound over cells in row-major order. The default budget
/// comfortably covers N <= 7.
ExtremalResult max_configuration_free(int side, std::uint64_t node_budget = 100'000'000);

} // namespace isotri
