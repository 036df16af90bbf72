#include "clusteraut/coeffpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "clusteraut/poly_kernels.hpp"

namespace clusteraut {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NegativePower: return "NegativePower";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::LaurentViolation: return "LaurentViolation";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SwapRequiresEqualParams: return "SwapRequiresEqualParams";
    case Errc::ParamsMismatch: return "ParamsMismatch";
    case Errc::FactorizationFailed: return "FactorizationFailed";
    case Errc::ConjugationNotScaling: return "ConjugationNotScaling";
    case Errc::StructureMismatch: return "StructureMismatch";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::ModelUnavailable: return "ModelUnavailable";
    case Errc::NotMinusOne: return "NotMinusOne";
    case Errc::NotAnticanonical: return "NotAnticanonical";
    case Errc::PivotNotZero: return "PivotNotZero";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotStandardSquare: return "NotStandardSquare";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Params, rings, coefficients

Params::Params(int a_, int b_) : a(a_), b(b_) {
  if (a < 1 || b < 1) {
    throw Error(Errc::InvalidArgument, "a and b must be positive");
  }
}

int Params::m() const { return std::lcm(a, b); }

CoeffRingId CoeffRingId::surrogate(std::uint32_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "surrogate order must be positive");
  return CoeffRingId(Kind::RootSurrogate, m);
}

std::string CoeffRingId::name() const {
  if (is_integers()) return "Z";
  return "Z[t]/(t^" + std::to_string(order_) + "-1)";
}

CoeffRingId common_ring(CoeffRingId x, CoeffRingId y) {
  if (x == y) return x;
  if (x.is_integers()) return y;
  if (y.is_integers()) return x;
  throw Error(Errc::RingMismatch, x.name() + " vs " + y.name());
}

namespace {

std::uint32_t reduce_tpow(std::int64_t k, std::uint32_t m) {
  auto r = k % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Coeff::Coeff(CoeffRingId ring) : ring_(ring), v_(ring.width()) {}

Coeff::Coeff(CoeffRingId ring, std::vector<mpz_class> values) : ring_(ring), v_(std::move(values)) {
  if (v_.size() != ring.width()) {
    throw Error(Errc::InvalidArgument, "coefficient vector length must equal ring width");
  }
}

Coeff Coeff::t_power(CoeffRingId ring, std::int64_t k, const mpz_class& scale) {
  Coeff c(ring);
  c.v_[reduce_tpow(k, ring.width())] = scale;
  return c;
}

bool Coeff::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const mpz_class& x) { return x == 0; });
}

std::optional<std::pair<int, std::uint32_t>> Coeff::as_signed_t_power() const {
  std::optional<std::pair<int, std::uint32_t>> found;
  for (std::uint32_t k = 0; k < v_.size(); ++k) {
    if (v_[k] == 0) continue;
    if (found || (v_[k] != 1 && v_[k] != -1)) return std::nullopt;
    found = std::pair{v_[k] > 0 ? 1 : -1, k};
  }
  return found;
}

Coeff Coeff::embed(CoeffRingId target) const {
  if (target == ring_) return *this;
  if (!ring_.is_integers() && ring_.width() != target.width()) {
    throw Error(Errc::RingMismatch, ring_.name() + " into " + target.name());
  }
  Coeff out(target);
  for (std::size_t k = 0; k < v_.size(); ++k) out.v_[k] = v_[k];
  return out;
}

Coeff operator+(const Coeff& x, const Coeff& y) {
  auto ring = common_ring(x.ring_, y.ring_);
  Coeff out = x.embed(ring);
  auto yy = y.embed(ring);
  for (std::size_t k = 0; k < out.v_.size(); ++k) out.v_[k] += yy.v_[k];
  return out;
}

Coeff operator-(const Coeff& x) {
  Coeff out = x;
  for (auto& v : out.v_) v = -v;
  return out;
}

Coeff operator-(const Coeff& x, const Coeff& y) { return x + (-y); }

Coeff operator*(const Coeff& x, const Coeff& y) {
  auto ring = common_ring(x.ring_, y.ring_);
  auto xx = x.embed(ring);
  auto yy = y.embed(ring);
  const auto m = ring.width();
  Coeff out(ring);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (xx.v_[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      if (yy.v_[j] == 0) continue;
      mpz_addmul(out.v_[(i + j) % m].get_mpz_t(), xx.v_[i].get_mpz_t(), yy.v_[j].get_mpz_t());
    }
  }
  return out;
}

bool operator==(const Coeff& x, const Coeff& y) {
  auto ring = common_ring(x.ring_, y.ring_);
  return x.embed(ring).v_ == y.embed(ring).v_;
}

// ---------------------------------------------------------------------------
// Monomials

Monomial Monomial::var(int index, std::int32_t power) {
  if (index < 0 || index >= kNumVars) throw Error(Errc::InvalidArgument, "variable index out of range");
  Monomial m;
  m.e[index] = power;
  return m;
}

bool Monomial::nonnegative() const {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x >= 0; });
}

std::int64_t Monomial::weighted_degree(const Params& params) const {
  return std::int64_t{params.a} * e[0] + e[1] + e[2] + std::int64_t{params.b} * e[3];
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

int weighted_compare(const Monomial& x, const Monomial& y, const Params& params) {
  auto dx = x.weighted_degree(params);
  auto dy = y.weighted_degree(params);
  if (dx != dy) return dx < dy ? -1 : 1;
  constexpr std::array<int, kNumVars> tie{0, 3, 1, 2};
  for (int i : tie) {
    if (x.e[i] != y.e[i]) return x.e[i] < y.e[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// LaurentPoly

namespace {

bool storage_less(const Term& x, const Term& y) {
  if (x.mono != y.mono) return x.mono < y.mono;
  return x.tpow < y.tpow;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const mpz_class& c, CoeffRingId ring) {
  return monomial(Monomial::one(), c, ring);
}

LaurentPoly LaurentPoly::constant(const Coeff& c) { return monomial(Monomial::one(), c); }

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpz_class& c, CoeffRingId ring,
                                  std::int64_t tpow) {
  LaurentPoly p(ring);
  if (c != 0) p.terms_.push_back({m, reduce_tpow(tpow, ring.width()), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Coeff& c) {
  LaurentPoly p(c.ring());
  for (std::uint32_t k = 0; k < c.values().size(); ++k) {
    if (c.values()[k] != 0) p.terms_.push_back({m, k, c.values()[k]});
  }
  return p;
}

LaurentPoly LaurentPoly::variable(int index, CoeffRingId ring) {
  return monomial(Monomial::var(index), 1, ring);
}

LaurentPoly LaurentPoly::from_terms(CoeffRingId ring, std::vector<Term> terms) {
  const auto m = ring.width();
  for (auto& t : terms) t.tpow %= m;
  std::sort(terms.begin(), terms.end(), storage_less);
  LaurentPoly p(ring);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono && p.terms_.back().tpow == t.tpow) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(CoeffRingId ring, std::vector<Term> terms) {
  LaurentPoly p(ring);
  p.terms_ = std::move(terms);
  return p;
}

std::size_t LaurentPoly::num_monomials() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i == 0 || terms_[i].mono != terms_[i - 1].mono) ++n;
  }
  return n;
}

Coeff LaurentPoly::coefficient(const Monomial& m) const {
  Coeff c(ring_);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  std::vector<mpz_class> v(ring_.width());
  for (; it != terms_.end() && it->mono == m; ++it) v[it->tpow] = it->coeff;
  return Coeff(ring_, std::move(v));
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.nonnegative(); });
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial r = terms_.front().mono;
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::min(r.e[i], t.mono.e[i]);
  return r;
}

Monomial LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {};
  Monomial r = terms_.front().mono;
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::max(r.e[i], t.mono.e[i]);
  return r;
}

LaurentPoly LaurentPoly::embed(CoeffRingId target) const {
  if (target == ring_) return *this;
  if (!ring_.is_integers() && ring_.width() != target.width()) {
    throw Error(Errc::RingMismatch, ring_.name() + " into " + target.name());
  }
  LaurentPoly p = *this;
  p.ring_ = target;
  return p;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.mono = t.mono + m;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Coeff& c) const {
  return *this * LaurentPoly::constant(c);
}

LaurentPoly add_scaled(const LaurentPoly& x, const LaurentPoly& y, int sign) {
  LaurentPoly out(common_ring(x.ring_, y.ring_));
  out.terms_.reserve(x.terms_.size() + y.terms_.size());
  auto i = x.terms_.begin();
  auto j = y.terms_.begin();
  while (i != x.terms_.end() || j != y.terms_.end()) {
    if (j == y.terms_.end() || (i != x.terms_.end() && storage_less(*i, *j))) {
      out.terms_.push_back(*i++);
    } else if (i == x.terms_.end() || storage_less(*j, *i)) {
      out.terms_.push_back(*j++);
      if (sign < 0) out.terms_.back().coeff = -out.terms_.back().coeff;
    } else {
      mpz_class c = sign < 0 ? mpz_class(i->coeff - j->coeff) : mpz_class(i->coeff + j->coeff);
      if (c != 0) out.terms_.push_back({i->mono, i->tpow, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = add_scaled(*this, o, 1); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = add_scaled(*this, o, -1); }

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  common_ring(x.ring_, y.ring_);
  return x.terms_ == y.terms_;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) { return add_scaled(x, y, 1); }
LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return add_scaled(x, y, -1); }
LaurentPoly operator-(const LaurentPoly& x) { return add_scaled(LaurentPoly(x.ring()), x, -1); }

LaurentPoly mul(const LaurentPoly& x, const LaurentPoly& y, const Budget& budget) {
  auto ring = common_ring(x.ring(), y.ring());
  if (x.is_zero() || y.is_zero()) return LaurentPoly(ring);
  const auto work = x.size() * y.size();
  std::vector<Term> terms =
      (work >= kernels::kParallelThreshold && kernels::max_threads() > 1)
          ? kernels::mul_parallel(x.terms(), y.terms(), ring.width(), budget.max_terms)
          : kernels::mul_serial(x.terms(), y.terms(), ring.width(), budget.max_terms);
  return LaurentPoly::from_sorted_terms(ring, std::move(terms));
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  return mul(x, y, Budget::unlimited());
}

LaurentPoly pow(const LaurentPoly& x, std::int64_t k, const Budget& budget) {
  if (k < 0) throw Error(Errc::NegativePower, "exponent " + std::to_string(k));
  LaurentPoly result = LaurentPoly::constant(1, x.ring());
  LaurentPoly base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base, budget);
    k >>= 1;
    if (k > 0) base = mul(base, base, budget);
  }
  return result;
}

namespace {

LaurentPoly divide_by_unit_term(const LaurentPoly& p, const Term& q, CoeffRingId ring) {
  const auto m = ring.width();
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), q.coeff.get_mpz_t())) {
      throw Error(Errc::NotDivisible, "coefficient not divisible by monomial divisor");
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), q.coeff.get_mpz_t());
    out.push_back({t.mono - q.mono, (t.tpow + m - q.tpow) % m, std::move(c)});
  }
  return LaurentPoly::from_terms(ring, std::move(out));
}

struct LexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const { return y < x; }
};

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(Errc::DivisionByZero, "exact_div by zero");
  auto ring = common_ring(p.ring(), q.ring());
  if (p.is_zero()) return LaurentPoly(ring);

  if (q.size() == 1) {
    const auto& t = q.terms().front();
    if (ring.width() > 1 && t.coeff != 1 && t.coeff != -1) {
      throw Error(Errc::PreconditionViolated, "surrogate divisor must be +-t^k times a monomial");
    }
    return divide_by_unit_term(p.embed(ring), t, ring);
  }
  if (ring.width() > 1) {
    throw Error(Errc::PreconditionViolated, "surrogate divisor must be a single unit term");
  }

  // Laurent long division under lex order. Every quotient monomial lies in
  // the box [min(p) - min(q), max(p) - max(q)] since exponent ranges add
  // under multiplication; leaving the box proves non-divisibility.
  const Monomial lo = p.min_exponents() - q.min_exponents();
  const Monomial hi = p.max_exponents() - q.max_exponents();
  for (int i = 0; i < kNumVars; ++i) {
    if (lo.e[i] > hi.e[i]) throw Error(Errc::NotDivisible, "exponent ranges incompatible");
  }
  const Term& lead = q.terms().back();  // lex-largest
  std::map<Monomial, mpz_class, LexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);

  std::vector<Term> quotient;
  mpz_class qc;
  while (!rem.empty()) {
    auto top = rem.begin();
    const Monomial qm = top->first - lead.mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (qm.e[i] < lo.e[i] || qm.e[i] > hi.e[i]) {
        throw Error(Errc::NotDivisible, "quotient term leaves the exponent box");
      }
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw Error(Errc::NotDivisible, "leading coefficient not divisible");
    }
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    for (const auto& t : q.terms()) {
      auto [it, inserted] = rem.try_emplace(t.mono + qm);
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qm, 0, qc});
  }
  return LaurentPoly::from_terms(ring, std::move(quotient));
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly, kNumVars> images,
                       const Reducer& reduce, const Budget& budget) {
  if (!p.nonnegative()) throw Error(Errc::NegativeExponent, "substitute needs nonnegative exponents");
  CoeffRingId ring = p.ring();
  for (const auto& img : images) ring = common_ring(ring, img.ring());
  if (p.is_zero()) return LaurentPoly(ring);

  auto apply = [&](LaurentPoly x) { return reduce ? reduce(x) : x; };
  std::array<std::vector<LaurentPoly>, kNumVars> powers;
  const Monomial top = p.max_exponents();
  for (int i = 0; i < kNumVars; ++i) {
    powers[i].reserve(top.e[i] + 1);
    powers[i].push_back(LaurentPoly::constant(1, ring));
  }
  auto power = [&](int i, std::int32_t k) -> const LaurentPoly& {
    auto& cache = powers[i];
    while (static_cast<std::int32_t>(cache.size()) <= k) {
      cache.push_back(apply(mul(cache.back(), images[i], budget)));
    }
    return cache[k];
  };

  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    LaurentPoly term = LaurentPoly::monomial(Monomial::one(), t.coeff, ring, t.tpow);
    for (int i = 0; i < kNumVars; ++i) {
      if (t.mono.e[i] == 0) continue;
      term = mul(term, power(i, t.mono.e[i]), budget);
    }
    acc.insert(acc.end(), term.terms().begin(), term.terms().end());
    if (acc.size() > budget.max_terms * 4) {
      acc = LaurentPoly::from_terms(ring, std::move(acc)).terms();
      if (acc.size() > budget.max_terms) throw Error(Errc::BudgetExceeded, "substitution result too large");
    }
  }
  auto out = apply(LaurentPoly::from_terms(ring, std::move(acc)));
  if (out.size() > budget.max_terms) throw Error(Errc::BudgetExceeded, "substitution result too large");
  return out;
}

std::int64_t weighted_degree(const LaurentPoly& p, const Params& params) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "weighted_degree of zero");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : p.terms()) best = std::max(best, t.mono.weighted_degree(params));
  return best;
}

}  // namespace clusteraut
