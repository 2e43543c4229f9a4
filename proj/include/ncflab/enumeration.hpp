#pragma once

// Exhaustive generation of n-variable NCFs through their unique layered form.
//
// Stream order: layer structures by (r, parts) lexicographically; within a
// structure the ordered set partitions of the variables with each layer
// chosen in colexicographic order among the remaining variables; then the
// canalizing inputs as an n-bit counter (bit i-1 is the input of x_i); then
// b. Generation is callback-driven and never materializes the stream.

#include <functional>
#include <vector>

#include "ncflab/ncf.hpp"

namespace ncflab {

using LayerStructure = std::vector<int>;

struct EnumerationLimits {
  int max_arity = 6;
};

/// Compositions of n with last part >= 2, ordered by (r, parts). Requires n >= 2.
void for_each_layer_structure(int n, const std::function<void(const LayerStructure&)>& visit);
std::vector<LayerStructure> layer_structures(int n);

/// Every NCF with the given layer structure.
void for_each_ncf_with_structure(int n, const LayerStructure& structure,
                                 const std::function<void(const LayerDecomposition&)>& visit);

/// Every n-variable NCF, exactly once.
void for_each_ncf(int n, const std::function<void(const LayerDecomposition&)>& visit,
                  const EnumerationLimits& limits = {});

}  // namespace ncflab
