#include "ncflab/symmetry.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "ncflab/parallel.hpp"

namespace ncflab {

namespace {

void check_variable(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.arity()) throw InputError("variable index " + std::to_string(i) + " out of range");
}

bool is_automorphism_images(const BooleanFunction& f, const std::vector<int>& images) {
  const int n = f.arity();
  const auto size = static_cast<Index>(f.size());
  for (Index w = 0; w < size; ++w) {
    Index y = 0;
    for (int i = 0; i < n; ++i) y |= ((w >> (images[static_cast<std::size_t>(i)] - 1)) & 1u) << i;
    if (f.at(y) != f.at(w)) return false;
  }
  return true;
}

// Flattened cycle notation with an end-of-cycle marker above every element.
std::vector<int> cycle_key(const Permutation& p) {
  std::vector<int> key;
  const int end = p.size() + 1;
  for (const auto& cycle : p.cycles()) {
    key.insert(key.end(), cycle.begin(), cycle.end());
    key.push_back(end);
  }
  return key;
}

struct BranchResult {
  bool found = false;
  std::vector<int> images;
  std::vector<int> key;
};

// All permutations with sigma(1) = first, in lexicographic one-line order.
BranchResult search_branch(const BooleanFunction& f, int first) {
  const int n = f.arity();
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != first) rest.push_back(v);
  }
  BranchResult best;
  std::vector<int> images(static_cast<std::size_t>(n));
  do {
    images[0] = first;
    std::copy(rest.begin(), rest.end(), images.begin() + 1);
    bool identity = true;
    for (int i = 0; i < n && identity; ++i) identity = images[static_cast<std::size_t>(i)] == i + 1;
    if (identity || !is_automorphism_images(f, images)) continue;
    auto key = cycle_key(Permutation::from_one_line(images));
    if (!best.found || key < best.key) {
      best.found = true;
      best.images = images;
      best.key = std::move(key);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

StrongAsymmetry finish(std::vector<BranchResult>& branches) {
  StrongAsymmetry out;
  const BranchResult* best = nullptr;
  for (const auto& b : branches) {
    if (b.found && (best == nullptr || b.key < best->key)) best = &b;
  }
  out.strongly_asymmetric = best == nullptr;
  if (best) out.witness = Permutation::from_one_line(best->images);
  return out;
}

}  // namespace

bool equivalent(const BooleanFunction& f, int i, int j) {
  check_variable(f, i);
  check_variable(f, j);
  if (i == j) return true;
  const Index bi = Index{1} << (i - 1);
  const Index bj = Index{1} << (j - 1);
  const auto size = static_cast<Index>(f.size());
  for (Index w = 0; w < size; ++w) {
    if ((w & bi) && !(w & bj) && f.at(w) != f.at(w ^ bi ^ bj)) return false;
  }
  return true;
}

int SymmetryPartition::class_of(int variable) const {
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (std::find(classes[k].begin(), classes[k].end(), variable) != classes[k].end()) {
      return static_cast<int>(k);
    }
  }
  throw InputError("variable " + std::to_string(variable) + " not in partition");
}

SymmetryPartition partition(const BooleanFunction& f) {
  const int n = f.arity();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (find(i - 1) == find(j - 1)) continue;
      if (equivalent(f, i, j)) {
        const int a = find(i - 1);
        const int b = find(j - 1);
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  SymmetryPartition p;
  p.arity = n;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(i + 1);
  }
  return p;
}

int symmetry_level(const BooleanFunction& f) { return static_cast<int>(partition(f).classes.size()); }

bool cycle_order_less(const Permutation& a, const Permutation& b) { return cycle_key(a) < cycle_key(b); }

bool is_automorphism(const BooleanFunction& f, const Permutation& sigma) {
  if (sigma.size() != f.arity()) throw InputError("permutation size does not match arity");
  return is_automorphism_images(f, sigma.one_line());
}

StrongAsymmetry strong_asymmetry_brute_force_serial(const BooleanFunction& f, const AutomorphismLimits& limits) {
  if (f.arity() > limits.brute_force_max_arity) {
    throw GuardError("automorphism", limits.brute_force_max_arity, f.arity());
  }
  std::vector<BranchResult> branches;
  for (int first = 1; first <= f.arity(); ++first) branches.push_back(search_branch(f, first));
  return finish(branches);
}

StrongAsymmetry strong_asymmetry_brute_force(const BooleanFunction& f, const AutomorphismLimits& limits) {
  const int n = f.arity();
  if (n > limits.brute_force_max_arity) throw GuardError("automorphism", limits.brute_force_max_arity, n);
  std::vector<BranchResult> branches(static_cast<std::size_t>(n));
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    branches[static_cast<std::size_t>(first - 1)] = search_branch(f, first);
  }
  return finish(branches);
}

StrongAsymmetry is_strongly_asymmetric(const BooleanFunction& f, const AutomorphismLimits& limits) {
  if (f.arity() <= limits.brute_force_max_arity) {
    auto out = strong_asymmetry_brute_force(f, limits);
    if (f.arity() >= 2) {
      const auto c = decompose(f);
      if (c.is_ncf() && out.strongly_asymmetric != (symmetry_level(f) == f.arity())) {
        throw std::logic_error("automorphism search disagrees with the NCF symmetry criterion");
      }
    }
    return out;
  }
  if (f.arity() >= 2 && decompose(f).is_ncf()) {
    StrongAsymmetry out;
    out.strongly_asymmetric = symmetry_level(f) == f.arity();
    out.used_ncf_fast_path = true;
    return out;
  }
  throw GuardError("automorphism", limits.brute_force_max_arity, f.arity());
}

SymmetryReport symmetry_report(const BooleanFunction& f, const AutomorphismLimits& limits) {
  SymmetryReport r;
  r.partition = partition(f);
  r.s = static_cast<int>(r.partition.classes.size());
  const int n = f.arity();
  r.partially_symmetric = r.s <= n - 1;
  r.totally_symmetric = r.s == 1;
  const auto asym = is_strongly_asymmetric(f, limits);
  r.strongly_asymmetric = asym.strongly_asymmetric;
  r.witness = asym.witness;
  return r;
}

bool NcfSymmetryChecks::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const StructuralCheck& c) { return c.pass; });
}

NcfSymmetryChecks ncf_symmetry_checks(const LayerDecomposition& d, const SymmetryPartition& p) {
  if (d.arity != p.arity) throw InputError("decomposition and partition arities differ");
  d.validate();
  const int n = d.arity;
  NcfSymmetryChecks out;
  out.r = d.layer_count();
  out.s = static_cast<int>(p.classes.size());

  std::vector<int> layer_of(static_cast<std::size_t>(n + 1));
  std::vector<int> input_of(static_cast<std::size_t>(n + 1));
  for (int li = 0; li < out.r; ++li) {
    const auto& layer = d.layers[static_cast<std::size_t>(li)];
    for (const auto& e : layer.entries) {
      layer_of[static_cast<std::size_t>(e.variable)] = li;
      input_of[static_cast<std::size_t>(e.variable)] = e.input;
    }
    if (layer.has_input(false) && layer.has_input(true)) {
      ++out.mixed_input_layers;
    } else {
      ++out.single_input_layers;
    }
  }

  bool within = true;
  std::string within_detail;
  std::vector<std::vector<int>> classes_in_layer(static_cast<std::size_t>(out.r));
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    const auto& cls = p.classes[k];
    const int layer = layer_of[static_cast<std::size_t>(cls.front())];
    const int input = input_of[static_cast<std::size_t>(cls.front())];
    for (int v : cls) {
      if (layer_of[static_cast<std::size_t>(v)] != layer || input_of[static_cast<std::size_t>(v)] != input) {
        within = false;
        within_detail = "class containing x" + std::to_string(cls.front()) + " spans layers or inputs";
      }
    }
    classes_in_layer[static_cast<std::size_t>(layer)].push_back(static_cast<int>(k));
  }
  out.checks.push_back({"classes_within_layers", within, within_detail});

  bool per_layer = true;
  std::string per_layer_detail;
  for (int li = 0; li < out.r; ++li) {
    const auto& ks = classes_in_layer[static_cast<std::size_t>(li)];
    bool ok = ks.size() == 1 || ks.size() == 2;
    if (ok && ks.size() == 2) {
      const int a = input_of[static_cast<std::size_t>(p.classes[static_cast<std::size_t>(ks[0])].front())];
      const int b = input_of[static_cast<std::size_t>(p.classes[static_cast<std::size_t>(ks[1])].front())];
      ok = a != b;
    }
    if (!ok) {
      per_layer = false;
      per_layer_detail = "layer " + std::to_string(li + 1) + " has " + std::to_string(ks.size()) + " classes";
    }
  }
  out.checks.push_back({"classes_per_layer", per_layer, per_layer_detail});

  const int predicted = out.single_input_layers + 2 * out.mixed_input_layers;
  out.checks.push_back({"class_count_rule", predicted == out.s,
                        "r1 + 2*r2 = " + std::to_string(predicted) + ", s = " + std::to_string(out.s)});

  const int r = out.r;
  const int s = out.s;
  const bool layer_bounds = (s + 1) / 2 <= r && r <= std::min(n - 1, s);
  out.checks.push_back({"layer_bounds", layer_bounds,
                        "ceil(s/2)=" + std::to_string((s + 1) / 2) + " <= r=" + std::to_string(r) +
                            " <= min(n-1,s)=" + std::to_string(std::min(n - 1, s))});
  const bool symmetry_bounds = r <= s && s <= std::min(2 * r, n);
  out.checks.push_back({"symmetry_bounds", symmetry_bounds,
                        "r=" + std::to_string(r) + " <= s=" + std::to_string(s) +
                            " <= min(2r,n)=" + std::to_string(std::min(2 * r, n))});

  const auto sizes = layer_structure(d);
  const bool large_layer = std::any_of(sizes.begin(), sizes.end(), [](int k) { return k >= 3; });
  out.checks.push_back({"large_layer_partial_symmetry", !large_layer || s <= n - 1,
                        large_layer ? "a layer has >= 3 variables" : "no layer has >= 3 variables"});
  return out;
}

}  // namespace ncflab
