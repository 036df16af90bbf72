#include "clusteraut/poly_kernels.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clusteraut::kernels {

namespace {

struct Key {
  Monomial mono;
  std::uint32_t tpow;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.tpow;
    for (auto x : k.mono.e) {
      h ^= static_cast<std::uint32_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using Accumulator = std::unordered_map<Key, mpz_class, KeyHash>;

void accumulate(Accumulator& acc, const Term* xb, const Term* xe, const std::vector<Term>& y,
                std::uint32_t width, std::size_t max_terms) {
  for (const Term* t = xb; t != xe; ++t) {
    for (const auto& s : y) {
      Key k{t->mono + s.mono, (t->tpow + s.tpow) % width};
      auto [it, inserted] = acc.try_emplace(k);
      mpz_addmul(it->second.get_mpz_t(), t->coeff.get_mpz_t(), s.coeff.get_mpz_t());
    }
    if (acc.size() > max_terms) {
      throw Error(Errc::BudgetExceeded, "product exceeds " + std::to_string(max_terms) + " terms");
    }
  }
}

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (c != 0) out.push_back({k.mono, k.tpow, std::move(c)});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    if (x.mono != y.mono) return x.mono < y.mono;
    return x.tpow < y.tpow;
  });
  return out;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Term> mul_serial(const std::vector<Term>& x, const std::vector<Term>& y,
                             std::uint32_t width, std::size_t max_terms) {
  Accumulator acc;
  acc.reserve(std::min(x.size() * y.size(), std::size_t{1} << 20));
  accumulate(acc, x.data(), x.data() + x.size(), y, width, max_terms);
  auto out = drain(acc);
  if (out.size() > max_terms) throw Error(Errc::BudgetExceeded, "product too large");
  return out;
}

std::vector<Term> mul_parallel(const std::vector<Term>& x, const std::vector<Term>& y,
                               std::uint32_t width, std::size_t max_terms) {
  const int threads = std::max(1, max_threads());
  std::vector<std::vector<Term>> partial(threads);
  bool overflow = false;

#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
#else
    const int tid = 0;
    const int nt = 1;
#endif
    const std::size_t chunk = (x.size() + nt - 1) / nt;
    const std::size_t begin = std::min(x.size(), chunk * tid);
    const std::size_t end = std::min(x.size(), begin + chunk);
    Accumulator acc;
    try {
      accumulate(acc, x.data() + begin, x.data() + end, y, width, max_terms);
      partial[tid] = drain(acc);
    } catch (const Error&) {
#pragma omp atomic write
      overflow = true;
    }
  }
  if (overflow) throw Error(Errc::BudgetExceeded, "product exceeds " + std::to_string(max_terms) + " terms");

  // k-way merge of the sorted partial products.
  std::vector<Term> merged;
  for (auto& part : partial) {
    std::vector<Term> next;
    next.reserve(merged.size() + part.size());
    auto i = merged.begin();
    auto j = part.begin();
    while (i != merged.end() || j != part.end()) {
      bool take_i;
      if (i == merged.end()) {
        take_i = false;
      } else if (j == part.end()) {
        take_i = true;
      } else if (i->mono != j->mono) {
        take_i = i->mono < j->mono;
      } else if (i->tpow != j->tpow) {
        take_i = i->tpow < j->tpow;
      } else {
        i->coeff += j->coeff;
        if (i->coeff != 0) next.push_back(std::move(*i));
        ++i;
        ++j;
        continue;
      }
      next.push_back(std::move(take_i ? *i++ : *j++));
    }
    merged = std::move(next);
  }
  if (merged.size() > max_terms) throw Error(Errc::BudgetExceeded, "product too large");
  return merged;
}

}  // namespace clusteraut::kernels
