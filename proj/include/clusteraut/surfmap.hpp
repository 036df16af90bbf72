#pragma once

// Canonical forms in C(a,b) = Z[y1..y4]/(y1y3 - y2^a - 1, y2y4 - y3^b - 1)
// and automorphisms of X(a,b) = Spec C(a,b) given by the images of the four
// coordinates.
//
// Conventions:
//  * An EndoMap f stores (f1, f2, f3, f4) = images of (y1, y2, y3, y4); the
//    geometric map is y -> (f1(y), ..., f4(y)).
//  * compose(f, g) is "f after g": its images are f_i(g1, g2, g3, g4).
//  * A Word g1 g2 ... gn evaluates to compose(g1, compose(g2, ... gn)).

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "clusteraut/coeffpoly.hpp"

namespace clusteraut {

// Summation bound in the sigma3 formula for y5. Literal sums to b - 1,
// which only agrees with the verified a - 1 when a == b.
enum class SumBound { Corrected, Literal };

class SurfaceElement {
 public:
  SurfaceElement() = default;

  const Params& params() const { return params_; }
  const LaurentPoly& value() const { return value_; }

  friend bool operator==(const SurfaceElement& x, const SurfaceElement& y) {
    return x.params_ == y.params_ && x.value_ == y.value_;
  }

 private:
  friend SurfaceElement normal_form(const Params&, const LaurentPoly&, const Budget&);
  SurfaceElement(const Params& p, LaurentPoly v) : params_(p), value_(std::move(v)) {}

  Params params_;
  LaurentPoly value_;
};

// Rewrites y1y3 -> y2^a + 1 and y2y4 -> y3^b + 1 until no monomial is
// divisible by y1y3 or y2y4. Each rewrite lowers the weighted degree
// (weights a,1,1,b), and the leading monomials are coprime, so the
// remainder is unique.
SurfaceElement normal_form(const Params& params, const LaurentPoly& p,
                           const Budget& budget = Budget::unlimited());

// True when no monomial is divisible by y1y3 or y2y4 and exponents are >= 0.
bool is_normal(const LaurentPoly& p);

struct Generator {
  enum class Kind : std::uint8_t { Sigma2, Sigma3, Scaling, Swap };
  Kind kind = Kind::Sigma2;
  int i = 0;  // scaling: mu exponent, taken mod a
  int j = 0;  // scaling: nu exponent, taken mod b

  static Generator sigma2() { return {Kind::Sigma2}; }
  static Generator sigma3() { return {Kind::Sigma3}; }
  static Generator scaling(int i, int j) { return {Kind::Scaling, i, j}; }
  static Generator swap() { return {Kind::Swap}; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

class EndoMap {
 public:
  static EndoMap identity(const Params& params);
  // Normalizes the images; verified() reflects is_endomorphism.
  static EndoMap from_images(const Params& params, const std::array<LaurentPoly, kNumVars>& images,
                             const Budget& budget = Budget::unlimited());

  const Params& params() const { return params_; }
  const std::array<SurfaceElement, kNumVars>& images() const { return images_; }
  const LaurentPoly& image(int i) const { return images_[i].value(); }
  bool verified() const { return verified_; }

  // Canonical key: the four images printed in canonical text form.
  std::string key() const;

 private:
  friend EndoMap compose(const EndoMap&, const EndoMap&, const Budget&);
  EndoMap(const Params& p) : params_(p) {}

  Params params_;
  std::array<SurfaceElement, kNumVars> images_;
  bool verified_ = false;
};

EndoMap make_generator(const Params& params, const Generator& gen,
                       SumBound bound = SumBound::Corrected);
// sigma_p : y_n -> y_{2p-n}, assembled from sigma2 and sigma3.
EndoMap make_sigma_p(const Params& params, std::int64_t p);
Word sigma_p_word(std::int64_t p);
// Reduced word for r^k s2^s with r = s2 s3.
Word dihedral_word(std::int64_t k, bool s);

EndoMap compose(const EndoMap& f, const EndoMap& g, const Budget& budget = Budget::unlimited());
EndoMap evaluate_word(const Params& params, const Word& word, const Budget& budget = Budget::unlimited());

bool is_endomorphism(const EndoMap& f);
bool equal(const EndoMap& f, const EndoMap& g);
std::optional<int> order_of(const EndoMap& f, int cap, const Budget& budget = Budget::unlimited());

std::array<std::int64_t, kNumVars> image_degrees(const EndoMap& f);
std::int64_t total_weighted_degree(const EndoMap& f);

// Cluster variable y_n as an element of C(a,b), obtained as a sigma_p image
// of one of y1..y4.
SurfaceElement cluster_element(const Params& params, std::int64_t n,
                               const Budget& budget = Budget::unlimited());
// Image of an element under C(a,b) -> Z[y1^+-1, y2^+-1] (y3, y4 expanded
// through the exchange relations).
LaurentPoly to_seed_laurent(const SurfaceElement& x);

// ---------------------------------------------------------------------------
// Degrees without expansion.
//
// Modulo the leading terms the relations become y1y3 = y2y4 = 0, whose
// zero set is four coordinate planes. Each plane carries a degree function
// coming from a seed (a pair of consecutive cluster variables) with suitable
// weights; it agrees with the weighted degree on normal monomials of that
// plane and is strictly smaller on all other normal monomials. The weighted
// degree of a normal form is therefore the largest of the four, and each of
// them only needs leading forms in a Laurent ring, where nothing cancels.

// Weighted degree of the normal form of y_n for n in [lo, hi].
std::vector<std::int64_t> cluster_degrees(const Params& params, std::int64_t lo, std::int64_t hi);
std::int64_t cluster_degree(const Params& params, std::int64_t n);

// Image degrees of (sigma2 sigma3)^n for n = 1..n_max. That map sends y_i
// to y_{i+2n}.
std::vector<std::array<std::int64_t, kNumVars>> rotation_image_degrees(const Params& params, int n_max);

// ---------------------------------------------------------------------------
// Factorization into generators.

// Greedy weighted-degree descent by sigma2 / sigma3 on either side, with
// backtracking, then a lookup of the residue among short words times the
// diagonal scalings and the swap.
class Factorizer {
 public:
  explicit Factorizer(const Params& params, const Budget& budget = Budget::unlimited());

  Word factorize(const EndoMap& f, int cap) const;
  std::size_t residue_count() const { return residues_.size(); }

 private:
  bool search(const EndoMap& f, int depth, int cap, Word& out) const;

  Params params_;
  Budget budget_;
  std::unordered_map<std::string, Word> residues_;
};

Word factorize(const EndoMap& f, int cap, const Budget& budget = Budget::unlimited());

// ---------------------------------------------------------------------------
// Text / JSON

std::string to_string(const Generator& g);
std::string to_string(const Word& w);
// Tokens: s2, s3, sp(k), m(i,j), h, r^k (k may be negative).
Word parse_word(std::string_view src);

std::string endo_to_json(const EndoMap& f);
EndoMap endo_from_json(std::string_view src);

}  // namespace clusteraut
