#include "ncflab/anf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace ncflab {

namespace {

constexpr int kMaxAnfArity = 32;

bool canonical_less(Monomial a, Monomial b) {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) return da > db;
  // Same degree: compare sorted index lists lexicographically. The lowest
  // differing bit belongs to the list whose next index is smaller.
  const Monomial diff = a ^ b;
  if (diff == 0) return false;
  const Monomial lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

using TermSet = std::set<Monomial>;

void toggle(TermSet& terms, Monomial m) {
  auto [it, inserted] = terms.insert(m);
  if (!inserted) terms.erase(it);
}

class Parser {
 public:
  Parser(std::string_view text, int arity) : text_(text), arity_(arity) {}

  TermSet parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    TermSet out = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return out;
  }

  int max_index() const noexcept { return max_index_; }

 private:
  TermSet expression() {
    TermSet acc = term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        for (Monomial m : term()) toggle(acc, m);
      } else {
        return acc;
      }
    }
  }

  TermSet term() {
    TermSet acc = factor();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        TermSet rhs = factor();
        TermSet product;
        for (Monomial a : acc) {
          for (Monomial b : rhs) toggle(product, a | b);
        }
        acc = std::move(product);
      } else {
        return acc;
      }
    }
  }

  TermSet factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a factor", pos_);
    const char ch = text_[pos_];
    if (ch == '0') {
      ++pos_;
      return {};
    }
    if (ch == '1') {
      ++pos_;
      return {Monomial{0}};
    }
    if (ch == '(') {
      ++pos_;
      TermSet inner = expression();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (ch == 'x' || ch == 'X') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected variable index after 'x'", pos_);
      }
      long index = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_] - '0');
        if (index > kMaxAnfArity) throw ParseError("variable index too large", start);
        ++pos_;
      }
      if (index < 1) throw ParseError("variables are 1-based", start);
      if (arity_ >= 0 && index > arity_) {
        throw ParseError("variable x" + std::to_string(index) + " exceeds arity " + std::to_string(arity_),
                         start);
      }
      max_index_ = std::max(max_index_, static_cast<int>(index));
      return {Monomial{1} << (index - 1)};
    }
    throw ParseError("unexpected character '" + std::string(1, ch) + "'", pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
  int max_index_ = 0;
};

}  // namespace

AnfPolynomial::AnfPolynomial(int arity, std::vector<Monomial> monomials) : arity_(arity) {
  if (arity < 0 || arity > kMaxAnfArity) throw InputError("ANF arity out of range");
  const Monomial allowed = arity == 32 ? ~Monomial{0} : (Monomial{1} << arity) - 1;
  TermSet terms;
  for (Monomial m : monomials) {
    if ((m & ~allowed) != 0) throw InputError("monomial uses a variable beyond the arity");
    toggle(terms, m);
  }
  monomials_.assign(terms.begin(), terms.end());
  std::sort(monomials_.begin(), monomials_.end(), canonical_less);
}

AnfPolynomial AnfPolynomial::from_index_sets(int arity, const std::vector<std::vector<int>>& sets) {
  std::vector<Monomial> monomials;
  monomials.reserve(sets.size());
  for (const auto& set : sets) {
    Monomial m = 0;
    for (int i : set) {
      if (i < 1 || i > arity) throw InputError("monomial index " + std::to_string(i) + " out of range");
      m |= Monomial{1} << (i - 1);
    }
    monomials.push_back(m);
  }
  return AnfPolynomial(arity, std::move(monomials));
}

std::vector<std::vector<int>> AnfPolynomial::index_sets() const {
  std::vector<std::vector<int>> out;
  out.reserve(monomials_.size());
  for (Monomial m : monomials_) {
    std::vector<int> set;
    for (int i = 0; i < 32; ++i) {
      if ((m >> i) & 1u) set.push_back(i + 1);
    }
    out.push_back(std::move(set));
  }
  return out;
}

BooleanFunction anf_to_table(const AnfPolynomial& p) {
  // Coefficient table, then the (self-inverse) Moebius transform.
  std::vector<std::uint8_t> values(std::size_t{1} << p.arity(), 0);
  for (Monomial m : p.monomials()) values[m] ^= 1;
  const std::size_t size = values.size();
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t w = 0; w < size; ++w) {
      if (w & step) values[w] ^= values[w ^ step];
    }
  }
  return BooleanFunction::from_predicate(p.arity(), [&](Index w) { return values[w] != 0; });
}

AnfPolynomial table_to_anf(const BooleanFunction& f) {
  std::vector<std::uint8_t> values(static_cast<std::size_t>(f.size()));
  for (std::size_t w = 0; w < values.size(); ++w) values[w] = f.at(static_cast<Index>(w));
  const std::size_t size = values.size();
  for (std::size_t step = 1; step < size; step <<= 1) {
    for (std::size_t w = 0; w < size; ++w) {
      if (w & step) values[w] ^= values[w ^ step];
    }
  }
  std::vector<Monomial> monomials;
  for (std::size_t w = 0; w < size; ++w) {
    if (values[w]) monomials.push_back(static_cast<Monomial>(w));
  }
  return AnfPolynomial(f.arity(), std::move(monomials));
}

AnfPolynomial parse_anf(std::string_view text, int arity) {
  if (arity < 0 || arity > kMaxAnfArity) throw InputError("ANF arity out of range");
  Parser parser(text, arity);
  TermSet terms = parser.parse();
  return AnfPolynomial(arity, std::vector<Monomial>(terms.begin(), terms.end()));
}

AnfPolynomial parse_anf(std::string_view text) {
  Parser parser(text, -1);
  TermSet terms = parser.parse();
  return AnfPolynomial(parser.max_index(), std::vector<Monomial>(terms.begin(), terms.end()));
}

std::string format_anf(const AnfPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (Monomial m : p.monomials()) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int i = 0; i < 32; ++i) {
      if (!((m >> i) & 1u)) continue;
      if (!first) out += "*";
      out += "x" + std::to_string(i + 1);
      first = false;
    }
  }
  return out;
}

}  // namespace ncflab
