#pragma once

// Dense truth-table representation of Boolean functions.
//
// Word encoding: truth-table index bit (i-1) carries variable x_i, so the
// index of the word (a_1, ..., a_n) is sum a_i * 2^(i-1).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncflab/errors.hpp"

namespace ncflab {

#ifndef NCFLAB_MAX_ARITY
#define NCFLAB_MAX_ARITY 24
#endif

/// Hard cap on the arity of a dense truth table.
inline constexpr int kMaxDenseArity = NCFLAB_MAX_ARITY;

using Index = std::uint32_t;

/// An assignment (a_1, ..., a_n) of the variables of an n-ary function.
class Word {
 public:
  Word() = default;
  Word(int arity, Index bits);

  static Word from_bits(std::span<const int> bits);
  static Word zero(int arity) { return Word(arity, 0); }

  int arity() const noexcept { return arity_; }
  Index index() const noexcept { return bits_; }

  /// Value of x_i, 1-based.
  bool bit(int i) const;

  Word flipped(int i) const;
  Word operator^(const Word& other) const;

  /// "a1a2...an", e.g. "001" for (0,0,1).
  std::string to_string() const;
  static Word parse(std::string_view text);

  bool operator==(const Word&) const = default;

 private:
  int arity_ = 0;
  Index bits_ = 0;
};

class BooleanFunction {
 public:
  BooleanFunction() : BooleanFunction(0) {}
  explicit BooleanFunction(int arity);

  static BooleanFunction constant(int arity, bool value);
  /// The projection x_i, 1-based.
  static BooleanFunction variable(int arity, int i);

  template <class Predicate>
  static BooleanFunction from_predicate(int arity, Predicate&& predicate) {
    BooleanFunction f(arity);
    const std::uint64_t n = f.size();
    for (std::uint64_t w = 0; w < n; ++w) {
      if (predicate(static_cast<Index>(w))) f.set(static_cast<Index>(w));
    }
    return f;
  }

  /// Build from packed 64-bit blocks, bit j of the stream = f at index j.
  static BooleanFunction from_blocks(int arity, std::vector<std::uint64_t> blocks);

  int arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << arity_; }

  bool at(Index index) const noexcept { return (blocks_[index >> 6] >> (index & 63)) & 1u; }
  bool operator()(const Word& w) const;

  std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }
  std::uint64_t count_ones() const noexcept;

  bool is_constant() const noexcept;
  bool depends_on(int i) const;

  BooleanFunction operator^(const BooleanFunction& other) const;
  BooleanFunction operator&(const BooleanFunction& other) const;
  BooleanFunction operator~() const;

  bool operator==(const BooleanFunction&) const = default;

 private:
  void set(Index index) noexcept { blocks_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void mask_tail() noexcept;

  int arity_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// f evaluated at w; throws InputError on arity mismatch.
bool eval(const BooleanFunction& f, const Word& w);

/// f with x_i fixed to value; remaining variables renumbered 1..n-1 in order.
BooleanFunction restrict(const BooleanFunction& f, int i, bool value);

/// A bijection of {1..n}.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// images[k] = sigma(k+1), 1-based values.
  static Permutation from_one_line(std::vector<int> images);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// (this o other)(i) = this(other(i)).
  Permutation after(const Permutation& other) const;

  /// Canonical disjoint cycles: each starts at its least element, ordered by
  /// that element, fixed points dropped.
  std::vector<std::vector<int>> cycles() const;
  /// "(1 2 3 4 5)", "()" for the identity.
  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// g(w) = f(y) ^ c with y_i = (w ^ beta)_{sigma(i)}: permute the variables
/// (g = f(x_sigma(1), ..., x_sigma(n))), then negate inputs by beta, then
/// negate the output by c.
BooleanFunction transform(const BooleanFunction& f, const Permutation& sigma, const Word& beta,
                          bool c);

struct TransformParams {
  Permutation sigma;
  Word beta;
  bool c = false;
};

/// Parameters of the single transform equal to applying `first`, then `second`.
TransformParams compose_transforms(const TransformParams& second, const TransformParams& first);

/// "n:HEX", bit j of HEX = f at index j, ceil(2^n/4) digits.
std::string to_hex_table(const BooleanFunction& f);
BooleanFunction parse_hex_table(std::string_view text);

}  // namespace ncflab
