#include "clusteraut/cluster.hpp"

#include <algorithm>
#include <array>

namespace clusteraut {

namespace {

// 2^61 - 1
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % kPrime);
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t k) {
  std::uint64_t r = 1;
  while (k) {
    if (k & 1) r = mulmod(r, x);
    x = mulmod(x, x);
    k >>= 1;
  }
  return r;
}

// y_1..y_n evaluated at the seeds mod kPrime. nullopt once a zero divisor
// shows up, after which nothing can be concluded.
std::vector<std::optional<std::uint64_t>> evaluate_mod(const Params& params, std::uint64_t y1, std::uint64_t y2,
                                                       int n) {
  std::vector<std::optional<std::uint64_t>> v(n + 2);
  v[1] = y1;
  v[2] = y2;
  for (int k = 2; k < n; ++k) {
    if (!v[k] || !v[k - 1] || *v[k - 1] == 0) break;
    const std::uint64_t num = (powmod(*v[k], exchange_exponent(params, k)) + 1) % kPrime;
    v[k + 1] = mulmod(num, powmod(*v[k - 1], kPrime - 2));
  }
  return v;
}

}  // namespace

ClusterSequence::ClusterSequence(const Params& params, const Budget& budget) : params_(params), budget_(budget) {
  values_.emplace(1, LaurentPoly::variable(0));
  values_.emplace(2, LaurentPoly::variable(1));
}

const LaurentPoly& ClusterSequence::get(std::int64_t n) {
  if (auto it = values_.find(n); it != values_.end()) return it->second;
  const LaurentPoly one = LaurentPoly::constant(1);
  auto step = [&](std::int64_t mid, std::int64_t known, std::int64_t next) {
    const LaurentPoly num = pow(values_.at(mid), exchange_exponent(params_, mid), budget_) + one;
    try {
      LaurentPoly q = exact_div(num, values_.at(known));
      if (q.size() > budget_.max_terms) throw Error(Errc::BudgetExceeded, "y_" + std::to_string(next) + " too large");
      values_.emplace(next, std::move(q));
    } catch (const Error& e) {
      if (e.code() == Errc::NotDivisible) {
        throw Error(Errc::LaurentViolation, "y_" + std::to_string(next) + " is not a Laurent polynomial");
      }
      throw;
    }
  };
  while (values_.rbegin()->first < n) {
    const std::int64_t top = values_.rbegin()->first;
    step(top, top - 1, top + 1);
  }
  while (values_.begin()->first > n) {
    const std::int64_t bottom = values_.begin()->first;
    step(bottom, bottom + 1, bottom - 1);
  }
  return values_.at(n);
}

ClusterVar cluster_var(const Params& params, std::int64_t n, const Budget& budget) {
  ClusterSequence seq(params, budget);
  return {n, seq.get(n)};
}

bool check_relation(const Params& params, std::int64_t n, const Budget& budget) {
  ClusterSequence seq(params, budget);
  const LaurentPoly lhs = mul(seq.get(n - 1), seq.get(n + 1), budget);
  const LaurentPoly rhs = pow(seq.get(n), exchange_exponent(params, n), budget) + LaurentPoly::constant(1);
  return lhs == rhs;
}

std::optional<int> detect_period(const Params& params, int n_max, const Budget& budget) {
  if (n_max < 2) throw Error(Errc::InvalidArgument, "n_max must be at least 2");
  // Evaluating at a couple of points mod a prime rules out most candidates
  // cheaply; a candidate that survives is confirmed symbolically.
  const std::array<std::pair<std::uint64_t, std::uint64_t>, 2> points{{{2, 3}, {5, 7}}};
  std::vector<std::vector<std::optional<std::uint64_t>>> evals;
  for (auto [x, y] : points) evals.push_back(evaluate_mod(params, x, y, n_max + 3));

  ClusterSequence seq(params, budget);
  for (int p = 1; p <= n_max; ++p) {
    bool excluded = false;
    for (const auto& v : evals) {
      for (int n : {1, 2}) {
        if (v[n + p] && *v[n + p] != *v[n]) excluded = true;
      }
    }
    if (excluded) continue;
    if (seq.get(1 + p) == seq.get(1) && seq.get(2 + p) == seq.get(2)) return p;
  }
  return std::nullopt;
}

bool verify_identity_y0_y5(const Params& params, SumBound bound) {
  const EndoMap s2 = make_generator(params, Generator::sigma2());
  const EndoMap s3 = make_generator(params, Generator::sigma3(), bound);
  const LaurentPoly one = LaurentPoly::constant(1);
  auto y = [](int i) { return LaurentPoly::variable(i - 1); };
  auto nf = [&](const LaurentPoly& p) { return normal_form(params, p).value(); };

  // sigma2 sends y4 to y0, sigma3 sends y1 to y5
  const LaurentPoly& y0 = s2.image(3);
  const LaurentPoly& y5 = s3.image(0);
  const bool first = nf(y(2) * y0) == nf(pow(y(1), params.b) + one);
  const bool second = nf(y(3) * y5) == nf(pow(y(4), params.a) + one);
  return first && second;
}

bool has_positive_coefficients(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const Term& t) { return t.coeff > 0; });
}

}  // namespace clusteraut
