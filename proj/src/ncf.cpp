#include "ncflab/ncf.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace ncflab {

namespace {

// Variable masks for each layer with the bits where the factor is nonzero,
// i.e. x_j != a_j for every entry.
struct LayerMask {
  Index vars = 0;
  Index nonvanishing = 0;  // required values of vars for M_i = 1
};

std::vector<LayerMask> layer_masks(const LayerDecomposition& d) {
  std::vector<LayerMask> masks;
  masks.reserve(d.layers.size());
  for (const auto& layer : d.layers) {
    LayerMask m;
    for (const auto& e : layer.entries) {
      const Index bit = Index{1} << (e.variable - 1);
      m.vars |= bit;
      if (!e.input) m.nonvanishing |= bit;
    }
    masks.push_back(m);
  }
  return masks;
}

bool layer_value(const LayerMask& m, Index w) { return (w & m.vars) == m.nonvanishing; }

}  // namespace

bool Layer::has_input(bool value) const noexcept {
  return std::any_of(entries.begin(), entries.end(),
                     [value](const LayerEntry& e) { return e.input == value; });
}

void LayerDecomposition::validate() const {
  if (arity < 2) throw InputError("layered form requires arity >= 2");
  if (layers.empty()) throw InputError("layered form has no layers");
  std::vector<bool> seen(static_cast<std::size_t>(arity), false);
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const auto& entries = layers[li].entries;
    if (entries.empty()) throw InputError("empty layer");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const int v = entries[k].variable;
      if (v < 1 || v > arity) throw InputError("layer variable out of range");
      if (k > 0 && entries[k - 1].variable >= v) throw InputError("layer entries not strictly increasing");
      if (seen[static_cast<std::size_t>(v - 1)]) throw InputError("variable in more than one layer");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("layers do not cover every variable");
  }
  if (layers.back().size() < 2) throw InputError("last layer must have at least two variables");
}

CanalizingPairs canalizing_pairs(const BooleanFunction& f) {
  CanalizingPairs out;
  out.constant_function = f.is_constant();
  for (int i = 1; i <= f.arity(); ++i) {
    for (bool a : {false, true}) {
      const BooleanFunction g = restrict(f, i, a);
      if (g.is_constant()) out.pairs.push_back({i, a, g.at(0)});
    }
  }
  return out;
}

std::string to_string(NotNcfReason reason) {
  switch (reason) {
    case NotNcfReason::kNoCanalizingVariable:
      return "no canalizing variable";
    case NotNcfReason::kConflictingOutputs:
      return "conflicting canalized outputs";
    case NotNcfReason::kInessentialVariable:
      return "inessential variable";
    case NotNcfReason::kConstantFunction:
      return "constant function";
  }
  return "unknown";
}

NcfClassification decompose(const BooleanFunction& f) {
  const int n = f.arity();
  if (n < 2) throw InputError("decomposition requires arity >= 2");
  if (f.is_constant()) return NcfClassification::not_ncf(NotNcfReason::kConstantFunction);
  for (int i = 1; i <= n; ++i) {
    if (!f.depends_on(i)) return NcfClassification::not_ncf(NotNcfReason::kInessentialVariable);
  }

  LayerDecomposition d;
  d.arity = n;
  BooleanFunction g = f;
  std::vector<int> vars(static_cast<std::size_t>(n));  // original index of each local variable
  for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
  bool first_output = false;

  while (!g.is_constant()) {
    const auto found = canalizing_pairs(g).pairs;
    if (found.empty()) return NcfClassification::not_ncf(NotNcfReason::kNoCanalizingVariable);
    const bool out = found.front().output;
    for (const auto& p : found) {
      if (p.output != out) return NcfClassification::not_ncf(NotNcfReason::kConflictingOutputs);
    }
    if (d.layers.empty()) first_output = out;

    Layer layer;
    for (const auto& p : found) {
      layer.entries.push_back({vars[static_cast<std::size_t>(p.variable - 1)], p.input});
    }
    // Restrict from the highest local index down so lower indices stay valid.
    for (auto it = found.rbegin(); it != found.rend(); ++it) {
      g = restrict(g, it->variable, !it->input);
      vars.erase(vars.begin() + (it->variable - 1));
    }
    d.layers.push_back(std::move(layer));
  }

  if (!vars.empty()) return NcfClassification::not_ncf(NotNcfReason::kInessentialVariable);
  if (d.layers.back().size() < 2) return NcfClassification::not_ncf(NotNcfReason::kConflictingOutputs);
  // M_1 = 0 forces f = b when r >= 2 and f = 1 + b when r == 1.
  d.b = d.layers.size() == 1 ? !first_output : first_output;
  if (compose(d) != f) return NcfClassification::not_ncf(NotNcfReason::kConflictingOutputs);
  return NcfClassification::ncf(std::move(d));
}

BooleanFunction compose(const LayerDecomposition& d) {
  d.validate();
  const auto masks = layer_masks(d);
  BooleanFunction nested = BooleanFunction::from_predicate(d.arity, [&](Index w) {
    const std::size_t r = masks.size();
    bool value;
    if (r == 1) {
      value = !layer_value(masks[0], w);
    } else {
      value = layer_value(masks[r - 1], w);
      for (std::size_t i = r - 1; i-- > 0;) value = layer_value(masks[i], w) && !value;
    }
    return value != d.b;
  });
  assert(nested == compose_expanded(d));
  return nested;
}

BooleanFunction compose_expanded(const LayerDecomposition& d) {
  d.validate();
  const auto masks = layer_masks(d);
  return BooleanFunction::from_predicate(d.arity, [&](Index w) {
    bool sum = false;
    bool prefix = true;
    for (const auto& m : masks) {
      prefix = prefix && layer_value(m, w);
      sum = sum != prefix;
    }
    if (masks.size() == 1) sum = !sum;
    return sum != d.b;
  });
}

std::vector<int> layer_structure(const LayerDecomposition& d) {
  std::vector<int> out;
  out.reserve(d.layers.size());
  for (const auto& layer : d.layers) out.push_back(layer.size());
  return out;
}

std::string format_decomposition(const LayerDecomposition& d) {
  std::string out = d.b ? "1; [" : "0; [";
  for (std::size_t li = 0; li < d.layers.size(); ++li) {
    if (li) out += " | ";
    const auto& entries = d.layers[li].entries;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k) out += ", ";
      out += std::to_string(entries[k].variable) + (entries[k].input ? ":1" : ":0");
    }
  }
  out += "]";
  return out;
}

LayerDecomposition parse_decomposition(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch) throw ParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  };
  auto bit = [&]() -> bool {
    skip_ws();
    if (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) return text[pos++] == '1';
    throw ParseError("expected 0 or 1", pos);
  };
  auto number = [&]() -> int {
    skip_ws();
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos++] - '0');
      if (value > kMaxDenseArity) throw ParseError("variable index too large", start);
    }
    if (pos == start) throw ParseError("expected variable index", pos);
    return value;
  };

  LayerDecomposition d;
  d.b = bit();
  expect(';');
  expect('[');
  int count = 0;
  Layer current;
  for (;;) {
    LayerEntry e;
    e.variable = number();
    expect(':');
    e.input = bit();
    current.entries.push_back(e);
    ++count;
    skip_ws();
    if (pos >= text.size()) throw ParseError("unterminated decomposition", pos);
    const char ch = text[pos++];
    if (ch == ',') continue;
    d.layers.push_back(std::move(current));
    current = Layer{};
    if (ch == '|') continue;
    if (ch == ']') break;
    throw ParseError("expected ',', '|' or ']'", pos - 1);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  d.arity = count;
  d.validate();
  return d;
}

}  // namespace ncflab
