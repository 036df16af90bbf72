#pragma once

// Exact coefficient rings and sparse Laurent polynomials in y1..y4.
//
// Coefficients live either in Z or in the surrogate ring Z[t]/(t^m - 1),
// which stands in for a field containing a primitive m-th root of unity.
// A polynomial stores one integer per (monomial, power of t) pair, so the
// integer case is simply the surrogate case with m = 1 and t-power 0.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "clusteraut/errors.hpp"

namespace clusteraut {

inline constexpr int kNumVars = 4;

struct Params {
  int a = 1;
  int b = 1;

  Params() = default;
  Params(int a_, int b_);

  // lcm(a, b); the order of the surrogate root used for scalings.
  int m() const;
  std::array<std::int64_t, kNumVars> weight() const { return {a, 1, 1, b}; }

  friend bool operator==(const Params&, const Params&) = default;
};

class CoeffRingId {
 public:
  enum class Kind : std::uint8_t { Integers, RootSurrogate };

  static CoeffRingId integers() { return CoeffRingId(Kind::Integers, 1); }
  static CoeffRingId surrogate(std::uint32_t m);

  Kind kind() const { return kind_; }
  // Number of integer slots per coefficient: 1 for Z, m for Z[t]/(t^m-1).
  std::uint32_t width() const { return order_; }
  bool is_integers() const { return kind_ == Kind::Integers; }

  std::string name() const;

  friend bool operator==(const CoeffRingId&, const CoeffRingId&) = default;

 private:
  CoeffRingId(Kind k, std::uint32_t m) : kind_(k), order_(m) {}
  Kind kind_;
  std::uint32_t order_;
};

// Common ring of two operands. Integers embed into any surrogate ring;
// two different surrogate orders are incompatible.
CoeffRingId common_ring(CoeffRingId x, CoeffRingId y);

class Coeff {
 public:
  explicit Coeff(CoeffRingId ring = CoeffRingId::integers());
  Coeff(CoeffRingId ring, std::vector<mpz_class> values);

  static Coeff integer(const mpz_class& v) { return Coeff(CoeffRingId::integers(), {v}); }
  // t^k in Z[t]/(t^m-1); k may be negative.
  static Coeff t_power(CoeffRingId ring, std::int64_t k, const mpz_class& scale = 1);

  CoeffRingId ring() const { return ring_; }
  const std::vector<mpz_class>& values() const { return v_; }
  bool is_zero() const;
  // For +-t^k returns (sign, k); nullopt when not a unit of that shape.
  std::optional<std::pair<int, std::uint32_t>> as_signed_t_power() const;

  Coeff embed(CoeffRingId target) const;

  friend Coeff operator+(const Coeff& x, const Coeff& y);
  friend Coeff operator-(const Coeff& x, const Coeff& y);
  friend Coeff operator*(const Coeff& x, const Coeff& y);
  friend Coeff operator-(const Coeff& x);
  friend bool operator==(const Coeff& x, const Coeff& y);

 private:
  CoeffRingId ring_;
  std::vector<mpz_class> v_;
};

struct Monomial {
  std::array<std::int32_t, kNumVars> e{};

  static Monomial one() { return {}; }
  static Monomial var(int index, std::int32_t power = 1);

  bool nonnegative() const;
  bool is_one() const { return e == std::array<std::int32_t, kNumVars>{}; }
  std::int64_t weighted_degree(const Params& params) const;

  Monomial operator+(const Monomial& o) const;
  Monomial operator-(const Monomial& o) const;

  // Storage order: plain lexicographic on (e1, e2, e3, e4).
  auto operator<=>(const Monomial&) const = default;
};

// The weighted term order: weighted degree a*e1 + e2 + e3 + b*e4 first,
// ties broken lexicographically on (e1, e4, e2, e3).
// Returns <0, 0, >0 like strcmp.
int weighted_compare(const Monomial& x, const Monomial& y, const Params& params);

struct Term {
  Monomial mono;
  std::uint32_t tpow = 0;
  mpz_class coeff;

  friend bool operator==(const Term& x, const Term& y) {
    return x.mono == y.mono && x.tpow == y.tpow && x.coeff == y.coeff;
  }
};

struct Budget {
  std::size_t max_terms = 1'000'000;

  static Budget unlimited() { return {std::numeric_limits<std::size_t>::max()}; }
};

class LaurentPoly {
 public:
  explicit LaurentPoly(CoeffRingId ring = CoeffRingId::integers()) : ring_(ring) {}

  static LaurentPoly constant(const mpz_class& c, CoeffRingId ring = CoeffRingId::integers());
  static LaurentPoly constant(const Coeff& c);
  static LaurentPoly monomial(const Monomial& m, const mpz_class& c = 1,
                              CoeffRingId ring = CoeffRingId::integers(), std::int64_t tpow = 0);
  static LaurentPoly monomial(const Monomial& m, const Coeff& c);
  // y_{index+1}, index in [0, 4).
  static LaurentPoly variable(int index, CoeffRingId ring = CoeffRingId::integers());
  // Sorts, merges duplicates and drops zeros.
  static LaurentPoly from_terms(CoeffRingId ring, std::vector<Term> terms);
  // Caller guarantees terms are already sorted, merged and zero-free.
  static LaurentPoly from_sorted_terms(CoeffRingId ring, std::vector<Term> terms);

  CoeffRingId ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Number of distinct monomials (terms differing only in t-power count once).
  std::size_t num_monomials() const;
  Coeff coefficient(const Monomial& m) const;
  bool nonnegative() const;
  // Componentwise min / max exponents; the zero polynomial returns zeros.
  Monomial min_exponents() const;
  Monomial max_exponents() const;

  LaurentPoly embed(CoeffRingId target) const;
  LaurentPoly shifted(const Monomial& m) const;
  LaurentPoly scaled(const Coeff& c) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  // Equal when rings are compatible and the term maps coincide.
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);

 private:
  friend LaurentPoly add_scaled(const LaurentPoly&, const LaurentPoly&, int);
  CoeffRingId ring_;
  std::vector<Term> terms_;  // sorted by (mono, tpow); never a zero coefficient
};

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly operator-(const LaurentPoly& x);
LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);

// Product with a term-count cap; throws BudgetExceeded past it.
LaurentPoly mul(const LaurentPoly& x, const LaurentPoly& y, const Budget& budget);
LaurentPoly pow(const LaurentPoly& x, std::int64_t k, const Budget& budget = Budget::unlimited());

// q * result == p exactly. Over a surrogate ring q must be a single term
// with unit coefficient +-t^k.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

using Reducer = std::function<LaurentPoly(const LaurentPoly&)>;

// Replaces y_i by images[i]. p must have nonnegative exponents. When a
// reducer is given it is applied to the cached powers and to the result, which keeps
// intermediate sizes down when working modulo an ideal.
LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly, kNumVars> images,
                       const Reducer& reduce = {}, const Budget& budget = Budget::unlimited());

std::int64_t weighted_degree(const LaurentPoly& p, const Params& params);

// Canonical text form (terms in weighted order, descending).
std::string to_string(const LaurentPoly& p, const Params& order = Params{});
LaurentPoly parse_poly(std::string_view src, CoeffRingId ring = CoeffRingId::integers());

}  // namespace clusteraut
