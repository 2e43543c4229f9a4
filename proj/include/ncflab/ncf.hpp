#pragma once

// Nested canalizing functions in their unique layered form
//
//   f = M_1(M_2(...(M_{r-1}(M_r + 1) + 1)...) + 1) + b      (r >= 2)
//   f = (M_1 + 1) + b                                         (r == 1)
//
// with M_i = prod (x_j + a_j) over the variables of layer i. The stored input
// a_j is the value at which its factor vanishes, i.e. the canalizing input.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncflab/boolfn.hpp"

namespace ncflab {

struct LayerEntry {
  int variable = 0;  // 1-based
  bool input = false;

  bool operator==(const LayerEntry&) const = default;
};

/// Entries sorted ascending by variable.
struct Layer {
  std::vector<LayerEntry> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  bool has_input(bool value) const noexcept;

  bool operator==(const Layer&) const = default;
};

struct LayerDecomposition {
  int arity = 0;
  std::vector<Layer> layers;  // layers[0] is outermost
  bool b = false;

  int layer_count() const noexcept { return static_cast<int>(layers.size()); }

  /// Throws InputError unless sizes, ordering and the variable partition hold.
  void validate() const;

  bool operator==(const LayerDecomposition&) const = default;
};

struct CanalizingPair {
  int variable = 0;
  bool input = false;
  bool output = false;

  bool operator==(const CanalizingPair&) const = default;
};

struct CanalizingPairs {
  std::vector<CanalizingPair> pairs;  // sorted by (variable, input)
  /// Set for constant f, where every (i, a) trivially canalizes.
  bool constant_function = false;
};

CanalizingPairs canalizing_pairs(const BooleanFunction& f);

enum class NotNcfReason {
  kNoCanalizingVariable,
  kConflictingOutputs,
  kInessentialVariable,
  kConstantFunction,
};

std::string to_string(NotNcfReason reason);

class NcfClassification {
 public:
  static NcfClassification ncf(LayerDecomposition d) { return NcfClassification(std::move(d)); }
  static NcfClassification not_ncf(NotNcfReason reason) { return NcfClassification(reason); }

  bool is_ncf() const noexcept { return decomposition_.has_value(); }
  const LayerDecomposition& decomposition() const { return decomposition_.value(); }
  NotNcfReason reason() const { return reason_.value(); }

  bool operator==(const NcfClassification&) const = default;

 private:
  explicit NcfClassification(LayerDecomposition d) : decomposition_(std::move(d)) {}
  explicit NcfClassification(NotNcfReason r) : reason_(r) {}

  std::optional<LayerDecomposition> decomposition_;
  std::optional<NotNcfReason> reason_;
};

/// Peels maximal canalizing layers. Requires arity >= 2.
NcfClassification decompose(const BooleanFunction& f);

/// Nested reading of the layered form.
BooleanFunction compose(const LayerDecomposition& d);
/// XOR of prefix products M_1 ... M_j, j = 1..r, plus b (and +1 when r == 1).
BooleanFunction compose_expanded(const LayerDecomposition& d);

std::vector<int> layer_structure(const LayerDecomposition& d);

/// "b; [i:a, i:a | i:a | ...]", e.g. "1; [3:1 | 1:0, 2:0]".
std::string format_decomposition(const LayerDecomposition& d);
/// Arity is the number of variables listed.
LayerDecomposition parse_decomposition(std::string_view text);

}  // namespace ncflab
