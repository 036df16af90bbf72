#pragma once

// Picard-lattice bookkeeping for compactifications of X(a,b) by cycles of
// rational curves, and the combinatorics of cycle types.
//
// Blown-up points are not located; only classes and incidences are tracked.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusteraut/coeffpoly.hpp"

namespace clusteraut {

enum class LatticeOrigin { Plane, Quadric };

std::string_view origin_name(LatticeOrigin o);

// Coefficients on the ambient basis (L, e1, ..) or (f1, f2, e1, ..). Missing
// trailing coefficients are zero, so classes survive later blow-ups.
struct DivisorClass {
  std::vector<std::int64_t> c;

  std::int64_t at(std::size_t i) const { return i < c.size() ? c[i] : 0; }

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& x);
  friend bool operator==(const DivisorClass& x, const DivisorClass& y);
};

class PicardLattice {
 public:
  static PicardLattice plane();
  static PicardLattice quadric();

  LatticeOrigin origin() const { return origin_; }
  // Size of the ambient basis, contracted directions included.
  int rank() const { return base_rank() + exceptional_; }
  int num_exceptional() const { return exceptional_; }
  // Picard rank of the current surface.
  int picard_rank() const { return rank() - static_cast<int>(contracted_.size()); }

  std::int64_t gram(int i, int j) const;
  std::int64_t dot(const DivisorClass& x, const DivisorClass& y) const;

  DivisorClass basis(int i) const;
  const DivisorClass& canonical() const { return canonical_; }
  const std::vector<DivisorClass>& contracted() const { return contracted_; }

  // Blows up a point: returns the new exceptional class; K gains it.
  DivisorClass blow_up();
  // Records the contraction of a (-1)-class E and maps x to x + (x.E) E.
  DivisorClass project(const DivisorClass& x, const DivisorClass& e) const;
  void contract(const DivisorClass& e);

 private:
  explicit PicardLattice(LatticeOrigin o);
  int base_rank() const { return origin_ == LatticeOrigin::Plane ? 1 : 2; }

  LatticeOrigin origin_;
  int exceptional_ = 0;
  DivisorClass canonical_;
  std::vector<DivisorClass> contracted_;
};

struct BoundaryCurve {
  std::string name;
  DivisorClass cls;
};

class NgonType;

struct BoundaryCycle {
  PicardLattice lattice = PicardLattice::plane();
  std::vector<BoundaryCurve> curves;
  // Exceptional curves of blow-ups at boundary points away from the corners.
  std::vector<DivisorClass> off_cycle;

  std::vector<std::int64_t> self_intersections() const;
  NgonType type() const;
  // Consecutive curves meet once, all other pairs are disjoint.
  bool ngon_condition() const;
  std::size_t index_of(std::string_view name) const;
};

enum class Model { BarX, Pentagon, TriangleT, SquareS, Y };

std::string_view model_name(Model m);
std::optional<Model> parse_model(std::string_view s);

BoundaryCycle build_compactification(const Params& params, Model model,
                                     LatticeOrigin origin = LatticeOrigin::Plane);

BoundaryCycle contract(const BoundaryCycle& cycle, std::size_t index);
// Blows up the corner between curves i and i+1 (cyclically).
BoundaryCycle corner_blowup(const BoundaryCycle& cycle, std::size_t i, std::string name = {});
BoundaryCycle blowup_on_curve(const BoundaryCycle& cycle, std::size_t i, int count);

bool is_anticanonical(const BoundaryCycle& cycle);
std::int64_t canonical_degree(const PicardLattice& lattice);
bool is_weak_del_pezzo(const BoundaryCycle& cycle);

std::string cycle_to_json(const BoundaryCycle& cycle);

// ---------------------------------------------------------------------------
// Cycle types up to rotation and reversal.

class NgonType {
 public:
  NgonType() = default;
  explicit NgonType(std::vector<std::int64_t> ints) : ints_(std::move(ints)) {}

  const std::vector<std::int64_t>& ints() const { return ints_; }
  std::size_t size() const { return ints_.size(); }
  std::int64_t operator[](std::size_t i) const { return ints_[i]; }

  NgonType reversed() const;
  NgonType rotated(std::size_t k) const;
  // Lexicographically smallest rotation or reflection.
  NgonType normalized() const;

  friend bool operator==(const NgonType& x, const NgonType& y) {
    return x.size() == y.size() && x.normalized().ints_ == y.normalized().ints_;
  }

 private:
  std::vector<std::int64_t> ints_;
};

std::string to_string(const NgonType& t);

// Pivot t[i] == 0: left neighbour -1, right neighbour +1.
NgonType elementary_move(const NgonType& t, std::size_t i);

struct FiberedModification {
  NgonType result;
  int moves = 0;
};

// (0, 0, -a, ...) -> (-a, 0, 0, ...) by repeated moves at the second entry.
FiberedModification fibered_modification_type(const NgonType& t);

bool is_standard(const NgonType& t);

struct SquareInvariant {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const SquareInvariant&, const SquareInvariant&) = default;
};

SquareInvariant square_invariant(const NgonType& t);
// Every standard square reachable from t by elementary moves (both
// orientations), with entries kept in [-bound, bound].
std::vector<NgonType> reachable_standard_squares(const NgonType& t, std::int64_t bound);

struct ClassifyVerdict {
  bool isomorphic = false;
  std::string invariant_x;
  std::string invariant_y;
  std::string reason;
};

// Decides X(a,b) ~ X(c,d) from boundary invariants.
ClassifyVerdict classify(const Params& x, const Params& y);

}  // namespace clusteraut
