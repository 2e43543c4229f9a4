#pragma once

// Algebraic normal form over GF(2).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncflab/boolfn.hpp"

namespace ncflab {

/// A monomial as a variable mask: bit (i-1) set means x_i occurs. 0 is the constant 1.
using Monomial = std::uint32_t;

class AnfPolynomial {
 public:
  AnfPolynomial() = default;
  /// Pairs of equal monomials cancel.
  AnfPolynomial(int arity, std::vector<Monomial> monomials);

  /// Each inner vector lists 1-based variable indices; {} is the constant 1 term.
  static AnfPolynomial from_index_sets(int arity, const std::vector<std::vector<int>>& sets);

  int arity() const noexcept { return arity_; }
  /// Canonical order: degree descending, then lexicographic on sorted indices.
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::vector<std::vector<int>> index_sets() const;
  bool is_zero() const noexcept { return monomials_.empty(); }

  bool operator==(const AnfPolynomial&) const = default;

 private:
  int arity_ = 0;
  std::vector<Monomial> monomials_;
};

BooleanFunction anf_to_table(const AnfPolynomial& p);

/// Moebius transform over GF(2).
AnfPolynomial table_to_anf(const BooleanFunction& f);

/// Grammar: expr := term ('+' term)*; term := factor ('*' factor)*;
/// factor := 'x'<digits> | '0' | '1' | '(' expr ')'. '+' is XOR, '*' is AND.
AnfPolynomial parse_anf(std::string_view text, int arity);
/// Arity inferred as the largest variable index used.
AnfPolynomial parse_anf(std::string_view text);

/// "x1*x2*x3 + x1*x2 + x3"; "0" for the zero polynomial.
std::string format_anf(const AnfPolynomial& p);

}  // namespace ncflab
