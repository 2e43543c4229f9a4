#include "ncflab/enumeration.hpp"

#include <numeric>

namespace ncflab {

namespace {

void compositions(int remaining, int parts_left, LayerStructure& prefix,
                  const std::function<void(const LayerStructure&)>& visit) {
  if (parts_left == 1) {
    if (remaining >= 2) {
      prefix.push_back(remaining);
      visit(prefix);
      prefix.pop_back();
    }
    return;
  }
  // Leave at least 1 for each middle part and 2 for the last.
  const int reserve = (parts_left - 2) + 2;
  for (int k = 1; k <= remaining - reserve; ++k) {
    prefix.push_back(k);
    compositions(remaining - k, parts_left - 1, prefix, visit);
    prefix.pop_back();
  }
}

// Advance a k-subset of positions {0..m-1} to its colexicographic successor.
bool next_colex(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  for (int j = 0; j < k; ++j) {
    const int limit = (j + 1 < k) ? c[static_cast<std::size_t>(j + 1)] : m;
    if (c[static_cast<std::size_t>(j)] + 1 < limit) {
      ++c[static_cast<std::size_t>(j)];
      for (int t = 0; t < j; ++t) c[static_cast<std::size_t>(t)] = t;
      return true;
    }
  }
  return false;
}

struct PartitionWalker {
  int n;
  const LayerStructure& structure;
  const std::function<void(const LayerDecomposition&)>& visit;
  std::vector<std::vector<int>> layer_vars;

  void assign(std::size_t layer, const std::vector<int>& remaining) {
    if (layer + 1 == structure.size()) {
      layer_vars[layer] = remaining;
      emit();
      return;
    }
    const int k = structure[layer];
    const int m = static_cast<int>(remaining.size());
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    do {
      std::vector<int> chosen;
      std::vector<int> rest;
      std::size_t ci = 0;
      for (int pos = 0; pos < m; ++pos) {
        if (ci < c.size() && c[ci] == pos) {
          chosen.push_back(remaining[static_cast<std::size_t>(pos)]);
          ++ci;
        } else {
          rest.push_back(remaining[static_cast<std::size_t>(pos)]);
        }
      }
      layer_vars[layer] = std::move(chosen);
      assign(layer + 1, rest);
    } while (next_colex(c, m));
  }

  void emit() {
    LayerDecomposition d;
    d.arity = n;
    d.layers.resize(structure.size());
    for (std::size_t li = 0; li < structure.size(); ++li) {
      for (int v : layer_vars[li]) d.layers[li].entries.push_back({v, false});
    }
    const std::uint64_t inputs = std::uint64_t{1} << n;
    for (std::uint64_t counter = 0; counter < inputs; ++counter) {
      for (auto& layer : d.layers) {
        for (auto& e : layer.entries) e.input = (counter >> (e.variable - 1)) & 1u;
      }
      for (bool b : {false, true}) {
        d.b = b;
        visit(d);
      }
    }
  }
};

}  // namespace

void for_each_layer_structure(int n, const std::function<void(const LayerStructure&)>& visit) {
  if (n < 2) throw InputError("layer structures require n >= 2");
  LayerStructure prefix;
  for (int r = 1; r <= n - 1; ++r) compositions(n, r, prefix, visit);
}

std::vector<LayerStructure> layer_structures(int n) {
  std::vector<LayerStructure> out;
  for_each_layer_structure(n, [&](const LayerStructure& k) { out.push_back(k); });
  return out;
}

void for_each_ncf_with_structure(int n, const LayerStructure& structure,
                                 const std::function<void(const LayerDecomposition&)>& visit) {
  if (structure.empty() || std::accumulate(structure.begin(), structure.end(), 0) != n ||
      structure.back() < 2) {
    throw InputError("invalid layer structure for n = " + std::to_string(n));
  }
  for (int k : structure) {
    if (k < 1) throw InputError("layer sizes must be positive");
  }
  PartitionWalker walker{n, structure, visit, std::vector<std::vector<int>>(structure.size())};
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  walker.assign(0, all);
}

void for_each_ncf(int n, const std::function<void(const LayerDecomposition&)>& visit,
                  const EnumerationLimits& limits) {
  if (n < 2) throw InputError("enumeration requires n >= 2");
  if (n > limits.max_arity) throw GuardError("enumeration", limits.max_arity, n);
  for_each_layer_structure(n, [&](const LayerStructure& k) { for_each_ncf_with_structure(n, k, visit); });
}

}  // namespace ncflab
