#include "ncflab/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace ncflab {

namespace {

std::size_t block_count(int arity) {
  return arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1;
}

void check_arity(int arity) {
  if (arity < 0 || arity > kMaxDenseArity) {
    throw InputError("arity " + std::to_string(arity) + " outside 0.." +
                     std::to_string(kMaxDenseArity));
  }
}

}  // namespace

Word::Word(int arity, Index bits) : arity_(arity), bits_(bits) {
  if (arity < 0 || arity > 32) throw InputError("word arity out of range");
  if (arity < 32 && (bits >> arity) != 0) throw InputError("word bits exceed arity");
}

Word Word::from_bits(std::span<const int> bits) {
  Index packed = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw InputError("word bits must be 0 or 1");
    packed |= static_cast<Index>(bits[i]) << i;
  }
  return Word(static_cast<int>(bits.size()), packed);
}

bool Word::bit(int i) const {
  if (i < 1 || i > arity_) throw InputError("word index " + std::to_string(i) + " out of range");
  return (bits_ >> (i - 1)) & 1u;
}

Word Word::flipped(int i) const {
  if (i < 1 || i > arity_) throw InputError("word index " + std::to_string(i) + " out of range");
  return Word(arity_, bits_ ^ (Index{1} << (i - 1)));
}

Word Word::operator^(const Word& other) const {
  if (other.arity_ != arity_) throw InputError("word arity mismatch");
  return Word(arity_, bits_ ^ other.bits_);
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(arity_));
  for (int i = 0; i < arity_; ++i) out.push_back(((bits_ >> i) & 1u) ? '1' : '0');
  return out;
}

Word Word::parse(std::string_view text) {
  Index bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= Index{1} << i;
    } else if (text[i] != '0') {
      throw ParseError("expected '0' or '1'", i);
    }
  }
  return Word(static_cast<int>(text.size()), bits);
}

BooleanFunction::BooleanFunction(int arity) : arity_(arity) {
  check_arity(arity);
  blocks_.assign(block_count(arity), 0);
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  BooleanFunction f(arity);
  if (value) {
    std::fill(f.blocks_.begin(), f.blocks_.end(), ~std::uint64_t{0});
    f.mask_tail();
  }
  return f;
}

BooleanFunction BooleanFunction::variable(int arity, int i) {
  if (i < 1 || i > arity) throw InputError("variable index " + std::to_string(i) + " out of range");
  const Index bit = Index{1} << (i - 1);
  return from_predicate(arity, [bit](Index w) { return (w & bit) != 0; });
}

BooleanFunction BooleanFunction::from_blocks(int arity, std::vector<std::uint64_t> blocks) {
  BooleanFunction f(arity);
  if (blocks.size() != f.blocks_.size()) throw InputError("block count does not match arity");
  f.blocks_ = std::move(blocks);
  const auto before = f.blocks_;
  f.mask_tail();
  if (before != f.blocks_) throw InputError("bits set beyond 2^n entries");
  return f;
}

void BooleanFunction::mask_tail() noexcept {
  if (arity_ < 6) blocks_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << arity_)) - 1;
}

bool BooleanFunction::operator()(const Word& w) const { return eval(*this, w); }

std::uint64_t BooleanFunction::count_ones() const noexcept {
  std::uint64_t total = 0;
  for (auto b : blocks_) total += static_cast<std::uint64_t>(std::popcount(b));
  return total;
}

bool BooleanFunction::is_constant() const noexcept {
  const auto ones = count_ones();
  return ones == 0 || ones == size();
}

bool BooleanFunction::depends_on(int i) const {
  if (i < 1 || i > arity_) throw InputError("variable index " + std::to_string(i) + " out of range");
  const Index bit = Index{1} << (i - 1);
  for (std::uint64_t w = 0; w < size(); ++w) {
    const auto idx = static_cast<Index>(w);
    if ((idx & bit) == 0 && at(idx) != at(idx | bit)) return true;
  }
  return false;
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& other) const {
  if (other.arity_ != arity_) throw InputError("arity mismatch");
  BooleanFunction out(*this);
  for (std::size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] ^= other.blocks_[k];
  return out;
}

BooleanFunction BooleanFunction::operator&(const BooleanFunction& other) const {
  if (other.arity_ != arity_) throw InputError("arity mismatch");
  BooleanFunction out(*this);
  for (std::size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] &= other.blocks_[k];
  return out;
}

BooleanFunction BooleanFunction::operator~() const {
  BooleanFunction out(*this);
  for (auto& b : out.blocks_) b = ~b;
  out.mask_tail();
  return out;
}

bool eval(const BooleanFunction& f, const Word& w) {
  if (w.arity() != f.arity()) {
    throw InputError("word of arity " + std::to_string(w.arity()) + " applied to function of arity " +
                     std::to_string(f.arity()));
  }
  return f.at(w.index());
}

BooleanFunction restrict(const BooleanFunction& f, int i, bool value) {
  const int n = f.arity();
  if (i < 1 || i > n) throw InputError("restriction index " + std::to_string(i) + " out of range");
  const Index low_mask = (Index{1} << (i - 1)) - 1;
  const Index fixed = value ? (Index{1} << (i - 1)) : 0;
  return BooleanFunction::from_predicate(n - 1, [&](Index w) {
    const Index low = w & low_mask;
    const Index high = (w & ~low_mask) << 1;
    return f.at(high | fixed | low);
  });
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InputError("not a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > n || used[static_cast<std::size_t>(from - 1)]) {
        throw InputError("cycles are not disjoint elements of {1.." + std::to_string(n) + "}");
      }
      used[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return from_one_line(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return from_one_line(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw InputError("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[i] = images_[static_cast<std::size_t>(other.images_[i] - 1)];
  }
  return from_one_line(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out.push_back('(');
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out.push_back(' ');
      out += std::to_string(cycle[k]);
    }
    out.push_back(')');
  }
  return out;
}

BooleanFunction transform(const BooleanFunction& f, const Permutation& sigma, const Word& beta,
                          bool c) {
  const int n = f.arity();
  if (sigma.size() != n) throw InputError("permutation size does not match arity");
  if (beta.arity() != n) throw InputError("negation word arity does not match arity");
  std::vector<int> source(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) source[static_cast<std::size_t>(i - 1)] = sigma(i) - 1;
  const Index flip = beta.index();
  return BooleanFunction::from_predicate(n, [&](Index w) {
    const Index v = w ^ flip;
    Index y = 0;
    for (int i = 0; i < n; ++i) y |= ((v >> source[static_cast<std::size_t>(i)]) & 1u) << i;
    return f.at(y) != c;
  });
}

TransformParams compose_transforms(const TransformParams& second, const TransformParams& first) {
  // second(first(f))(w) = f(P_{s1}(P_{s2}(w ^ b2) ^ b1)) with P_s(v)_i = v_{s(i)};
  // P_{s1} P_{s2} = P_{s2 o s1} and P_{s2}(v) ^ b1 = P_{s2}(v ^ P_{s2}^{-1}(b1)).
  const int n = first.sigma.size();
  const Permutation sigma = second.sigma.after(first.sigma);
  Index moved = 0;
  for (int j = 1; j <= n; ++j) {
    // (P_{s2}^{-1} b1)_{s2(i)} = (b1)_i
    if (first.beta.bit(j)) moved |= Index{1} << (second.sigma(j) - 1);
  }
  return TransformParams{sigma, Word(n, second.beta.index() ^ moved), first.c != second.c};
}

std::string to_hex_table(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t entries = f.size();
  const std::uint64_t digits = (entries + 3) / 4;
  std::string hex(static_cast<std::size_t>(digits), '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint64_t idx = d * 4 + b;
      if (idx < entries && f.at(static_cast<Index>(idx))) nibble |= 1u << b;
    }
    hex[static_cast<std::size_t>(digits - 1 - d)] = kDigits[nibble];
  }
  return std::to_string(f.arity()) + ":" + hex;
}

BooleanFunction parse_hex_table(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) throw ParseError("expected 'n:HEX'", 0);
  int n = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected arity digits", i);
    n = n * 10 + (text[i] - '0');
    if (n > kMaxDenseArity) throw InputError("arity exceeds " + std::to_string(kMaxDenseArity));
  }
  const auto hex = text.substr(colon + 1);
  const std::uint64_t entries = std::uint64_t{1} << n;
  const std::uint64_t digits = (entries + 3) / 4;
  if (hex.size() != digits) {
    throw ParseError("expected " + std::to_string(digits) + " hex digits, got " +
                         std::to_string(hex.size()),
                     colon + 1);
  }
  std::vector<std::uint64_t> blocks(n >= 6 ? (std::size_t{1} << (n - 6)) : 1, 0);
  for (std::uint64_t d = 0; d < digits; ++d) {
    const std::size_t pos = static_cast<std::size_t>(digits - 1 - d);
    const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[pos])));
    unsigned nibble = 0;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else {
      throw ParseError("invalid hex digit", colon + 1 + pos);
    }
    for (unsigned b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1u)) continue;
      const std::uint64_t idx = d * 4 + b;
      if (idx >= entries) throw ParseError("bits set beyond 2^n entries", colon + 1 + pos);
      blocks[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
  }
  return BooleanFunction::from_blocks(n, std::move(blocks));
}

}  // namespace ncflab
