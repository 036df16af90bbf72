#pragma once

// Cluster variables of the rank-2 cluster algebra C(a,b):
//   y_{n-1} y_{n+1} = y_n^a + 1  (n even),  y_n^b + 1  (n odd),
// expanded as Laurent polynomials in the seeds y1, y2.

#include <cstdint>
#include <map>
#include <optional>

#include "clusteraut/coeffpoly.hpp"
#include "clusteraut/surfmap.hpp"

namespace clusteraut {

struct ClusterVar {
  std::int64_t index = 0;
  LaurentPoly value;  // y1, y2 only; integer coefficients
};

// Exponent in the exchange relation centred at y_n.
inline int exchange_exponent(const Params& params, std::int64_t n) { return n % 2 == 0 ? params.a : params.b; }

// Memoizing walker over the sequence. Not thread-safe; give each thread
// its own instance.
class ClusterSequence {
 public:
  explicit ClusterSequence(const Params& params, const Budget& budget = Budget{});

  const LaurentPoly& get(std::int64_t n);
  const Params& params() const { return params_; }

 private:
  Params params_;
  Budget budget_;
  std::map<std::int64_t, LaurentPoly> values_;
};

ClusterVar cluster_var(const Params& params, std::int64_t n, const Budget& budget = Budget{});
bool check_relation(const Params& params, std::int64_t n, const Budget& budget = Budget{});
std::optional<int> detect_period(const Params& params, int n_max, const Budget& budget = Budget{});

// y2 * y0 = y1^b + 1 and y3 * y5 = y4^a + 1 in C(a,b), with y0, y5 written
// through the sigma2 / sigma3 formulas.
bool verify_identity_y0_y5(const Params& params, SumBound bound = SumBound::Corrected);

bool has_positive_coefficients(const LaurentPoly& p);

}  // namespace clusteraut
