#include <algorithm>
#include <map>

#include "clusteraut/cluster.hpp"
#include "clusteraut/surfmap.hpp"

namespace clusteraut {

namespace {

// A seed (y_k, y_{k+1}) with weights (w0, w1) on its two variables, and the
// plane of normal monomials on which it reproduces the weighted degree.
struct SeedDegree {
  std::int64_t k;
  std::int64_t w0, w1;
  std::array<bool, kNumVars> plane;
};

std::int64_t seed_weight(const Monomial& m, const SeedDegree& s) { return s.w0 * m.e[0] + s.w1 * m.e[1]; }

std::int64_t seed_degree(const LaurentPoly& p, const SeedDegree& s) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : p.terms()) best = std::max(best, seed_weight(t.mono, s));
  return best;
}

LaurentPoly leading_form(const LaurentPoly& p, const SeedDegree& s) {
  const std::int64_t d = seed_degree(p, s);
  std::vector<Term> keep;
  for (const auto& t : p.terms()) {
    if (seed_weight(t.mono, s) == d) keep.push_back(t);
  }
  return LaurentPoly::from_sorted_terms(p.ring(), std::move(keep));
}

// Seed degrees of y_lo..y_hi, from leading forms only.
std::map<std::int64_t, std::int64_t> seed_degrees(const Params& params, const SeedDegree& s, std::int64_t lo,
                                                  std::int64_t hi) {
  std::map<std::int64_t, LaurentPoly> lead;
  std::map<std::int64_t, std::int64_t> deg;
  lead.emplace(s.k, LaurentPoly::variable(0));
  lead.emplace(s.k + 1, LaurentPoly::variable(1));
  deg[s.k] = s.w0;
  deg[s.k + 1] = s.w1;
  const LaurentPoly one = LaurentPoly::constant(1);

  // lead(y_mid^c + 1) / lead(y_known) is the leading form of y_next
  auto step = [&](std::int64_t mid, std::int64_t known, std::int64_t next) {
    const int c = exchange_exponent(params, mid);
    const std::int64_t d = c * deg.at(mid);
    LaurentPoly num = d > 0 ? pow(lead.at(mid), c) : d < 0 ? one : pow(lead.at(mid), c) + one;
    if (num.is_zero()) throw Error(Errc::PreconditionViolated, "leading forms cancel at y_" + std::to_string(next));
    num = leading_form(num, s);
    lead[next] = exact_div(num, lead.at(known));
    deg[next] = seed_degree(num, s) - deg.at(known);
  };
  for (std::int64_t n = s.k + 1; n < hi; ++n) step(n, n - 1, n + 1);
  for (std::int64_t n = s.k; n > lo; --n) step(n, n + 1, n - 1);
  return deg;
}

std::vector<SeedDegree> seeds(const Params& p) {
  const std::int64_t a = p.a, b = p.b;
  return {
      {1, a, 1, {true, true, false, false}},
      {2, 1, 1, {false, true, true, false}},
      {3, 1, b, {false, false, true, true}},
      {0, a * b + b, a, {true, false, false, true}},
  };
}

}  // namespace

std::vector<std::int64_t> cluster_degrees(const Params& params, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(Errc::InvalidArgument, "empty index range");
  const auto w = params.weight();
  std::vector<std::int64_t> out(hi - lo + 1, std::numeric_limits<std::int64_t>::min());
  for (const auto& s : seeds(params)) {
    const auto deg = seed_degrees(params, s, std::min<std::int64_t>(lo, 0), std::max<std::int64_t>(hi, 4));
    // The argument needs: seed degree == weight on the plane's variables and
    // strictly below it on the other two. Checked rather than assumed.
    for (int i = 0; i < kNumVars; ++i) {
      const std::int64_t v = deg.at(i + 1);
      if (s.plane[i] ? v != w[i] : v >= w[i]) {
        throw Error(Errc::PreconditionViolated, "seed degree of y" + std::to_string(i + 1) + " is off");
      }
    }
    for (std::int64_t n = lo; n <= hi; ++n) out[n - lo] = std::max(out[n - lo], deg.at(n));
  }
  return out;
}

std::int64_t cluster_degree(const Params& params, std::int64_t n) { return cluster_degrees(params, n, n).front(); }

std::vector<std::array<std::int64_t, kNumVars>> rotation_image_degrees(const Params& params, int n_max) {
  const auto deg = cluster_degrees(params, 1, 2 * n_max + 4);
  std::vector<std::array<std::int64_t, kNumVars>> out;
  for (int n = 1; n <= n_max; ++n) {
    std::array<std::int64_t, kNumVars> d{};
    for (int i = 0; i < kNumVars; ++i) d[i] = deg[2 * n + i];
    out.push_back(d);
  }
  return out;
}

}  // namespace clusteraut
