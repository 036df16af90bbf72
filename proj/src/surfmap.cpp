#include "clusteraut/surfmap.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "clusteraut/cluster.hpp"

namespace clusteraut {

namespace {

struct TermKey {
  Monomial mono;
  std::uint32_t tpow;
  bool operator==(const TermKey&) const = default;
};

struct TermKeyHash {
  std::size_t operator()(const TermKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.tpow;
    for (auto x : k.mono.e) h ^= static_cast<std::uint32_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using Bucket = std::unordered_map<TermKey, mpz_class, TermKeyHash>;

const std::vector<mpz_class>& binomial_row(std::vector<std::vector<mpz_class>>& cache, unsigned n) {
  if (cache.size() <= n) cache.resize(n + 1);
  auto& row = cache[n];
  if (row.empty()) {
    row.resize(n + 1);
    for (unsigned j = 0; j <= n; ++j) mpz_bin_uiui(row[j].get_mpz_t(), n, j);
  }
  return row;
}

void check_same_params(const EndoMap& f, const EndoMap& g) {
  if (!(f.params() == g.params())) {
    throw Error(Errc::ParamsMismatch, "maps over X(" + std::to_string(f.params().a) + "," +
                                          std::to_string(f.params().b) + ") and X(" +
                                          std::to_string(g.params().a) + "," + std::to_string(g.params().b) + ")");
  }
}

LaurentPoly nf_value(const Params& params, const LaurentPoly& p, const Budget& budget) {
  return normal_form(params, p, budget).value();
}

LaurentPoly pow_nf(const Params& params, const LaurentPoly& x, int k, const Budget& budget) {
  LaurentPoly acc = LaurentPoly::constant(1, x.ring());
  for (int i = 0; i < k; ++i) acc = nf_value(params, mul(acc, x, budget), budget);
  return acc;
}

LaurentPoly var(int i) { return LaurentPoly::variable(i); }

}  // namespace

bool is_normal(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const Term& t) {
    const auto& e = t.mono.e;
    return t.mono.nonnegative() && !(e[0] > 0 && e[2] > 0) && !(e[1] > 0 && e[3] > 0);
  });
}

SurfaceElement normal_form(const Params& params, const LaurentPoly& p, const Budget& budget) {
  if (!p.nonnegative()) throw Error(Errc::NegativeExponent, "normal_form needs nonnegative exponents");
  if (is_normal(p)) return SurfaceElement(params, p);

  // Buckets by weighted degree, highest first. A rewrite only produces
  // strictly lower degrees, so each bucket is final once it is reached.
  std::map<std::int64_t, Bucket, std::greater<>> work;
  for (const auto& t : p.terms()) work[t.mono.weighted_degree(params)][TermKey{t.mono, t.tpow}] += t.coeff;

  std::vector<std::vector<mpz_class>> binom;
  std::vector<Term> out;
  std::size_t pending = p.size();
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    for (auto& [key, c] : node.mapped()) {
      if (c == 0) continue;
      const auto& e = key.mono.e;
      int pivot = -1, partner = -1, target = -1, power = 0;
      if (e[0] > 0 && e[2] > 0) {
        pivot = 0, partner = 2, target = 1, power = params.a;
      } else if (e[1] > 0 && e[3] > 0) {
        pivot = 1, partner = 3, target = 2, power = params.b;
      }
      if (pivot < 0) {
        out.push_back({key.mono, key.tpow, std::move(c)});
        continue;
      }
      // (y_p y_q)^k -> (y_target^power + 1)^k in one go
      const int k = std::min(e[pivot], e[partner]);
      Monomial m = key.mono;
      m.e[pivot] -= k;
      m.e[partner] -= k;
      const auto& row = binomial_row(binom, k);
      for (int j = 0; j <= k; ++j) {
        auto& slot = work[m.weighted_degree(params)][TermKey{m, key.tpow}];
        mpz_addmul(slot.get_mpz_t(), c.get_mpz_t(), row[j].get_mpz_t());
        m.e[target] += power;
      }
      pending += k + 1;
    }
    if (pending > 4 * budget.max_terms || out.size() > budget.max_terms) {
      throw Error(Errc::BudgetExceeded, "normal form too large");
    }
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    return x.mono != y.mono ? x.mono < y.mono : x.tpow < y.tpow;
  });
  return SurfaceElement(params, LaurentPoly::from_sorted_terms(p.ring(), std::move(out)));
}

EndoMap EndoMap::identity(const Params& params) {
  EndoMap f(params);
  for (int i = 0; i < kNumVars; ++i) f.images_[i] = normal_form(params, var(i));
  f.verified_ = true;
  return f;
}

EndoMap EndoMap::from_images(const Params& params, const std::array<LaurentPoly, kNumVars>& images,
                             const Budget& budget) {
  EndoMap f(params);
  for (int i = 0; i < kNumVars; ++i) f.images_[i] = normal_form(params, images[i], budget);
  f.verified_ = is_endomorphism(f);
  return f;
}

std::string EndoMap::key() const {
  std::string k;
  for (const auto& img : images_) {
    k += to_string(img.value(), params_);
    k += ';';
  }
  return k;
}

EndoMap make_generator(const Params& params, const Generator& gen, SumBound bound) {
  const int a = params.a, b = params.b;
  std::array<LaurentPoly, kNumVars> img;
  switch (gen.kind) {
    case Generator::Kind::Sigma2: {
      LaurentPoly sum = LaurentPoly::constant(0);
      for (int i = 0; i < b; ++i) sum += pow(var(0) * var(2), i);
      img = {var(2), var(1), var(0), pow(var(0), b) * var(3) - pow(var(1), a - 1) * sum};
      break;
    }
    case Generator::Kind::Sigma3: {
      const int top = bound == SumBound::Corrected ? a : b;
      LaurentPoly sum = LaurentPoly::constant(0);
      for (int i = 0; i < top; ++i) sum += pow(var(1) * var(3), i);
      img = {pow(var(3), a) * var(0) - pow(var(2), b - 1) * sum, var(3), var(2), var(1)};
      break;
    }
    case Generator::Kind::Scaling: {
      const int m = params.m();
      const auto ring = CoeffRingId::surrogate(static_cast<std::uint32_t>(m));
      const std::int64_t mu = static_cast<std::int64_t>(m / a) * gen.i;
      const std::int64_t nu = static_cast<std::int64_t>(m / b) * gen.j;
      auto scaled = [&](int v, std::int64_t k) { return LaurentPoly::monomial(Monomial::var(v), 1, ring, k); };
      img = {scaled(0, -nu), scaled(1, mu), scaled(2, nu), scaled(3, -mu)};
      break;
    }
    case Generator::Kind::Swap:
      if (a != b) throw Error(Errc::SwapRequiresEqualParams, "swap needs a == b");
      img = {var(3), var(2), var(1), var(0)};
      break;
  }
  return EndoMap::from_images(params, img);
}

Word sigma_p_word(std::int64_t p) {
  Word raw{Generator::sigma2()};
  const auto pair = p >= 2 ? std::array{Generator::sigma2(), Generator::sigma3()}
                           : std::array{Generator::sigma3(), Generator::sigma2()};
  for (std::int64_t k = 0; k < (p >= 2 ? p - 2 : 2 - p); ++k) raw.insert(raw.end(), pair.begin(), pair.end());
  Word w;
  for (const auto& g : raw) {
    if (!w.empty() && w.back() == g) {
      w.pop_back();
    } else {
      w.push_back(g);
    }
  }
  return w;
}

Word dihedral_word(std::int64_t k, bool s) {
  Word w;
  for (std::int64_t n = 0; n < (k < 0 ? -k : k); ++n) {
    w.push_back(k > 0 ? Generator::sigma2() : Generator::sigma3());
    w.push_back(k > 0 ? Generator::sigma3() : Generator::sigma2());
  }
  if (s) {
    if (!w.empty() && w.back() == Generator::sigma2()) {
      w.pop_back();
    } else {
      w.push_back(Generator::sigma2());
    }
  }
  return w;
}

EndoMap make_sigma_p(const Params& params, std::int64_t p) { return evaluate_word(params, sigma_p_word(p)); }

EndoMap compose(const EndoMap& f, const EndoMap& g, const Budget& budget) {
  check_same_params(f, g);
  const Params& params = f.params();
  std::array<LaurentPoly, kNumVars> gi;
  for (int i = 0; i < kNumVars; ++i) gi[i] = g.image(i);
  Reducer reduce = [&](const LaurentPoly& x) { return nf_value(params, x, budget); };

  EndoMap h(params);
  for (int i = 0; i < kNumVars; ++i) {
    h.images_[i] = normal_form(params, substitute(f.image(i), gi, reduce, budget), budget);
  }
  h.verified_ = f.verified() && g.verified();
  return h;
}

EndoMap evaluate_word(const Params& params, const Word& word, const Budget& budget) {
  // left to right: substituting small generator images into the
  // accumulated map is far cheaper than the other way round
  EndoMap acc = EndoMap::identity(params);
  for (const auto& g : word) acc = compose(acc, make_generator(params, g), budget);
  return acc;
}

bool is_endomorphism(const EndoMap& f) {
  const Params& p = f.params();
  const Budget budget = Budget::unlimited();
  LaurentPoly one = LaurentPoly::constant(1);
  LaurentPoly r1 = nf_value(p, mul(f.image(0), f.image(2), budget), budget) - pow_nf(p, f.image(1), p.a, budget) - one;
  if (!nf_value(p, r1, budget).is_zero()) return false;
  LaurentPoly r2 = nf_value(p, mul(f.image(1), f.image(3), budget), budget) - pow_nf(p, f.image(2), p.b, budget) - one;
  return nf_value(p, r2, budget).is_zero();
}

bool equal(const EndoMap& f, const EndoMap& g) {
  check_same_params(f, g);
  for (int i = 0; i < kNumVars; ++i) {
    if (!(f.image(i) == g.image(i))) return false;
  }
  return true;
}

std::optional<int> order_of(const EndoMap& f, int cap, const Budget& budget) {
  const EndoMap id = EndoMap::identity(f.params());
  EndoMap acc = f;
  for (int k = 1; k <= cap; ++k) {
    if (equal(acc, id)) return k;
    if (k < cap) acc = compose(acc, f, budget);
  }
  return std::nullopt;
}

std::array<std::int64_t, kNumVars> image_degrees(const EndoMap& f) {
  std::array<std::int64_t, kNumVars> d{};
  // a zero image (never an automorphism) is reported as degree 0
  for (int i = 0; i < kNumVars; ++i) d[i] = f.image(i).is_zero() ? 0 : weighted_degree(f.image(i), f.params());
  return d;
}

std::int64_t total_weighted_degree(const EndoMap& f) {
  std::int64_t s = 0;
  for (auto d : image_degrees(f)) s += d;
  return s;
}

SurfaceElement cluster_element(const Params& params, std::int64_t n, const Budget& budget) {
  if (n >= 1 && n <= 4) return normal_form(params, var(static_cast<int>(n - 1)));
  // y_n = sigma_p(y_j) with 2p - j = n; pick the shortest sigma_p word
  int best_j = 0;
  std::int64_t best_p = 0;
  for (int j = 1; j <= 4; ++j) {
    if ((n + j) % 2 != 0) continue;
    const std::int64_t p = (n + j) / 2;
    if (best_j == 0 || sigma_p_word(p).size() < sigma_p_word(best_p).size()) {
      best_j = j;
      best_p = p;
    }
  }
  const EndoMap s = evaluate_word(params, sigma_p_word(best_p), budget);
  return s.images()[best_j - 1];
}

LaurentPoly to_seed_laurent(const SurfaceElement& x) {
  const Params& p = x.params();
  std::array<LaurentPoly, kNumVars> seed{var(0), var(1), cluster_var(p, 3).value, cluster_var(p, 4).value};
  return substitute(x.value(), seed);
}

}  // namespace clusteraut
