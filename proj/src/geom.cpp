#include "clusteraut/geom.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <json.hpp>

namespace clusteraut {

// ---------------------------------------------------------------------------
// Divisor classes

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  DivisorClass r;
  r.c.resize(std::max(x.c.size(), y.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.at(i) + y.at(i);
  return r;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) { return x + (-1) * y; }

DivisorClass operator*(std::int64_t k, const DivisorClass& x) {
  DivisorClass r = x;
  for (auto& v : r.c) v *= k;
  return r;
}

bool operator==(const DivisorClass& x, const DivisorClass& y) {
  const std::size_t n = std::max(x.c.size(), y.c.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.at(i) != y.at(i)) return false;
  }
  return true;
}

std::string_view origin_name(LatticeOrigin o) { return o == LatticeOrigin::Plane ? "plane" : "quadric"; }

// ---------------------------------------------------------------------------
// Lattice

PicardLattice::PicardLattice(LatticeOrigin o) : origin_(o) {
  if (o == LatticeOrigin::Plane) {
    canonical_.c = {-3};
  } else {
    canonical_.c = {-2, -2};
  }
}

PicardLattice PicardLattice::plane() { return PicardLattice(LatticeOrigin::Plane); }
PicardLattice PicardLattice::quadric() { return PicardLattice(LatticeOrigin::Quadric); }

std::int64_t PicardLattice::gram(int i, int j) const {
  const int base = base_rank();
  if (i >= base || j >= base) return i == j ? -1 : 0;
  if (origin_ == LatticeOrigin::Plane) return 1;
  return i == j ? 0 : 1;
}

std::int64_t PicardLattice::dot(const DivisorClass& x, const DivisorClass& y) const {
  const int n = static_cast<int>(std::max(x.c.size(), y.c.size()));
  std::int64_t s = 0;
  if (origin_ == LatticeOrigin::Quadric) s += x.at(0) * y.at(1) + x.at(1) * y.at(0);
  for (int i = 0; i < n; ++i) {
    if (origin_ == LatticeOrigin::Quadric && i < 2) continue;
    s += gram(i, i) * x.at(i) * y.at(i);
  }
  return s;
}

DivisorClass PicardLattice::basis(int i) const {
  DivisorClass d;
  d.c.assign(rank(), 0);
  d.c[i] = 1;
  return d;
}

DivisorClass PicardLattice::blow_up() {
  ++exceptional_;
  DivisorClass e = basis(rank() - 1);
  canonical_ = canonical_ + e;
  return e;
}

DivisorClass PicardLattice::project(const DivisorClass& x, const DivisorClass& e) const { return x + dot(x, e) * e; }

void PicardLattice::contract(const DivisorClass& e) {
  canonical_ = project(canonical_, e);
  contracted_.push_back(e);
}

// ---------------------------------------------------------------------------
// Cycles

std::vector<std::int64_t> BoundaryCycle::self_intersections() const {
  std::vector<std::int64_t> out;
  for (const auto& c : curves) out.push_back(lattice.dot(c.cls, c.cls));
  return out;
}

NgonType BoundaryCycle::type() const { return NgonType(self_intersections()); }

bool BoundaryCycle::ngon_condition() const {
  const std::size_t n = curves.size();
  if (n < 2) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      // a 2-gon's curves meet in two points
      const std::int64_t expect = n == 2 ? 2 : adjacent ? 1 : 0;
      if (lattice.dot(curves[i].cls, curves[j].cls) != expect) return false;
    }
  }
  return true;
}

std::size_t BoundaryCycle::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].name == name) return i;
  }
  throw Error(Errc::InvalidArgument, "no boundary curve named " + std::string(name));
}

BoundaryCycle contract(const BoundaryCycle& cycle, std::size_t index) {
  if (cycle.curves.size() < 3) throw Error(Errc::PreconditionViolated, "cannot contract inside a 2-gon");
  if (index >= cycle.curves.size()) throw Error(Errc::InvalidArgument, "curve index out of range");
  const DivisorClass e = cycle.curves[index].cls;
  const std::int64_t self = cycle.lattice.dot(e, e);
  if (self != -1) {
    throw Error(Errc::NotMinusOne, cycle.curves[index].name + " has self-intersection " + std::to_string(self));
  }
  BoundaryCycle out = cycle;
  out.curves.erase(out.curves.begin() + static_cast<std::ptrdiff_t>(index));
  for (auto& c : out.curves) c.cls = cycle.lattice.project(c.cls, e);
  for (auto& d : out.off_cycle) d = cycle.lattice.project(d, e);
  out.lattice.contract(e);
  return out;
}

BoundaryCycle corner_blowup(const BoundaryCycle& cycle, std::size_t i, std::string name) {
  const std::size_t n = cycle.curves.size();
  if (i >= n) throw Error(Errc::InvalidArgument, "curve index out of range");
  BoundaryCycle out = cycle;
  const DivisorClass e = out.lattice.blow_up();
  const std::size_t j = (i + 1) % n;
  out.curves[i].cls = out.curves[i].cls - e;
  out.curves[j].cls = out.curves[j].cls - e;
  if (name.empty()) name = "E" + std::to_string(out.lattice.rank());
  out.curves.insert(out.curves.begin() + static_cast<std::ptrdiff_t>(i + 1), BoundaryCurve{std::move(name), e});
  return out;
}

BoundaryCycle blowup_on_curve(const BoundaryCycle& cycle, std::size_t i, int count) {
  if (count < 1) throw Error(Errc::PreconditionViolated, "blow up at least one point");
  if (i >= cycle.curves.size()) throw Error(Errc::InvalidArgument, "curve index out of range");
  BoundaryCycle out = cycle;
  for (int k = 0; k < count; ++k) {
    const DivisorClass e = out.lattice.blow_up();
    out.curves[i].cls = out.curves[i].cls - e;
    out.off_cycle.push_back(e);
  }
  return out;
}

bool is_anticanonical(const BoundaryCycle& cycle) {
  DivisorClass sum;
  for (const auto& c : cycle.curves) sum = sum + c.cls;
  return sum == (-1) * cycle.lattice.canonical();
}

std::int64_t canonical_degree(const PicardLattice& lattice) {
  return lattice.dot(lattice.canonical(), lattice.canonical());
}

bool is_weak_del_pezzo(const BoundaryCycle& cycle) {
  if (!is_anticanonical(cycle)) throw Error(Errc::NotAnticanonical, "boundary is not anticanonical");
  if (canonical_degree(cycle.lattice) <= 0) return false;
  const auto self = cycle.self_intersections();
  return std::all_of(self.begin(), self.end(), [](std::int64_t s) { return s + 2 >= 0; });
}

std::string cycle_to_json(const BoundaryCycle& cycle) {
  nlohmann::json j;
  j["origin"] = std::string(origin_name(cycle.lattice.origin()));
  j["types"] = cycle.self_intersections();
  j["anticanonical"] = is_anticanonical(cycle);
  j["K2"] = canonical_degree(cycle.lattice);
  return j.dump();
}

// ---------------------------------------------------------------------------
// Models

std::string_view model_name(Model m) {
  switch (m) {
    case Model::BarX:
      return "barx";
    case Model::Pentagon:
      return "pentagon";
    case Model::TriangleT:
      return "triangle";
    case Model::SquareS:
      return "square";
    case Model::Y:
      return "y";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view s) {
  if (s == "barx") return Model::BarX;
  if (s == "pentagon" || s == "z") return Model::Pentagon;
  if (s == "triangle" || s == "t") return Model::TriangleT;
  if (s == "square" || s == "s") return Model::SquareS;
  if (s == "y") return Model::Y;
  return std::nullopt;
}

namespace {

[[noreturn]] void unavailable(Model m, const Params& p, const std::string& why) {
  throw Error(Errc::ModelUnavailable, std::string(model_name(m)) + " for (" + std::to_string(p.a) + "," +
                                          std::to_string(p.b) + "): " + why);
}

BoundaryCycle bar_x(const Params& p) {
  // the line at infinity and the two coordinate lines of the plane
  BoundaryCycle c;
  c.lattice = PicardLattice::plane();
  const DivisorClass line = c.lattice.basis(0);
  c.curves = {{"E5", line}, {"E2", line}, {"E3", line}};
  c = blowup_on_curve(c, 1, p.b);
  c = blowup_on_curve(c, 2, p.a);
  return c;
}

BoundaryCycle pentagon(const Params& p) {
  BoundaryCycle c = bar_x(p);  // (E5, E2, E3)
  c = corner_blowup(c, 0, "E1");  // E5 . E2
  c = corner_blowup(c, 3, "E4");  // E3 . E5
  std::rotate(c.curves.begin(), c.curves.begin() + 1, c.curves.end());
  return c;  // (E1, E2, E3, E4, E5)
}

BoundaryCycle triangle(const Params& p, LatticeOrigin origin) {
  if (origin == LatticeOrigin::Plane) {
    BoundaryCycle c = pentagon(p);
    c = contract(c, c.index_of("E4"));
    c = contract(c, c.index_of("E2"));
    return c;  // (E1, E3, E5)
  }
  // a fibre, a (1,1)-curve through a points, the other fibre
  BoundaryCycle c;
  c.lattice = PicardLattice::quadric();
  const DivisorClass f1 = c.lattice.basis(0), f2 = c.lattice.basis(1);
  c.curves = {{"E1", f2}, {"E3", f1 + f2}, {"E5", f1}};
  return blowup_on_curve(c, 1, p.a);
}

BoundaryCycle square(const Params& p, LatticeOrigin origin) {
  if (origin == LatticeOrigin::Plane) {
    BoundaryCycle c = pentagon(p);
    return contract(c, c.index_of("E5"));  // (E1, E2, E3, E4)
  }
  BoundaryCycle c;
  c.lattice = PicardLattice::quadric();
  const DivisorClass f1 = c.lattice.basis(0), f2 = c.lattice.basis(1);
  c.curves = {{"E1", f2}, {"E2", f1}, {"E3", f2}, {"E4", f1}};
  c = blowup_on_curve(c, 1, p.b);
  return blowup_on_curve(c, 2, p.a);
}

}  // namespace

BoundaryCycle build_compactification(const Params& p, Model model, LatticeOrigin origin) {
  const bool quadric = origin == LatticeOrigin::Quadric;
  switch (model) {
    case Model::BarX:
      if (quadric) unavailable(model, p, "only built from the plane");
      return bar_x(p);
    case Model::Pentagon:
      if (quadric) unavailable(model, p, "only built from the plane");
      return pentagon(p);
    case Model::TriangleT:
      if (p.b != 1) unavailable(model, p, "needs b = 1");
      return triangle(p, origin);
    case Model::SquareS:
      if (p.a < 2 || p.b < 2) unavailable(model, p, "needs a, b >= 2");
      return square(p, origin);
    case Model::Y:
      if (p.b != 1 || p.a > 3) unavailable(model, p, "needs b = 1 and a <= 3");
      if (p.a == 1) {
        if (quadric) unavailable(model, p, "only built from the plane");
        return pentagon(p);
      }
      if (p.a == 2) return triangle(p, origin);
      {
        // T(3,1) is (0, -1, 0); blow up the corner of its two 0-curves
        BoundaryCycle c = triangle(p, origin);
        return corner_blowup(c, c.index_of("E5"), "E6");
      }
  }
  unavailable(model, p, "unknown model");
}

// ---------------------------------------------------------------------------
// Types

NgonType NgonType::reversed() const { return NgonType(std::vector<std::int64_t>(ints_.rbegin(), ints_.rend())); }

NgonType NgonType::rotated(std::size_t k) const {
  std::vector<std::int64_t> v = ints_;
  if (!v.empty()) std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % v.size()), v.end());
  return NgonType(std::move(v));
}

NgonType NgonType::normalized() const {
  std::vector<std::int64_t> best = ints_;
  for (const NgonType& base : {*this, reversed()}) {
    for (std::size_t k = 0; k < size(); ++k) best = std::min(best, base.rotated(k).ints_);
  }
  return NgonType(std::move(best));
}

std::string to_string(const NgonType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

NgonType elementary_move(const NgonType& t, std::size_t i) {
  const std::size_t n = t.size();
  if (n < 3) throw Error(Errc::PreconditionViolated, "moves need at least three curves");
  if (i >= n) throw Error(Errc::InvalidArgument, "pivot out of range");
  if (t[i] != 0) throw Error(Errc::PivotNotZero, "pivot entry is " + std::to_string(t[i]));
  std::vector<std::int64_t> v = t.ints();
  v[(i + n - 1) % n] -= 1;
  v[(i + 1) % n] += 1;
  return NgonType(std::move(v));
}

FiberedModification fibered_modification_type(const NgonType& t) {
  if (t.size() < 3 || t[0] != 0 || t[1] != 0 || t[2] >= 0) {
    throw Error(Errc::PreconditionViolated, "expected (0, 0, -a, ...) with a >= 1, got " + to_string(t));
  }
  FiberedModification fm{t, 0};
  while (fm.result[2] != 0) {
    fm.result = elementary_move(fm.result, 1);
    ++fm.moves;
  }
  return fm;
}

namespace {

// Rotation / reflection representatives of t.
std::vector<NgonType> arrangements(const NgonType& t) {
  std::vector<NgonType> out;
  for (const NgonType& base : {t, t.reversed()}) {
    for (std::size_t k = 0; k < t.size(); ++k) out.push_back(base.rotated(k));
  }
  return out;
}

}  // namespace

bool is_standard(const NgonType& t) {
  if (t.size() < 3) return false;
  for (const auto& r : arrangements(t)) {
    bool ok = r[0] == 0 && r[1] == 0;
    for (std::size_t i = 2; ok && i < r.size(); ++i) ok = r[i] <= -2;
    if (ok) return true;
  }
  return false;
}

SquareInvariant square_invariant(const NgonType& t) {
  if (t.size() != 4 || !is_standard(t)) throw Error(Errc::NotStandardSquare, to_string(t) + " is not a standard square");
  for (const auto& r : arrangements(t)) {
    if (r[0] == 0 && r[1] == 0) return {std::min(-r[2], -r[3]), std::max(-r[2], -r[3])};
  }
  throw Error(Errc::NotStandardSquare, to_string(t));
}

std::vector<NgonType> reachable_standard_squares(const NgonType& t, std::int64_t bound) {
  std::set<std::vector<std::int64_t>> seen{t.normalized().ints()};
  std::deque<NgonType> queue{t.normalized()};
  std::vector<NgonType> out;
  while (!queue.empty()) {
    NgonType cur = queue.front();
    queue.pop_front();
    if (cur.size() == 4 && is_standard(cur)) out.push_back(cur);
    for (const NgonType& oriented : {cur, cur.reversed()}) {
      for (std::size_t i = 0; i < oriented.size(); ++i) {
        if (oriented[i] != 0) continue;
        NgonType next = elementary_move(oriented, i).normalized();
        const auto& v = next.ints();
        if (std::any_of(v.begin(), v.end(), [&](std::int64_t x) { return x < -bound || x > bound; })) continue;
        if (seen.insert(v).second) queue.push_back(next);
      }
    }
  }
  return out;
}

namespace {

// Invariant text of X(a,b). X(a,b) and X(b,a) are the same surface up to
// relabelling the cluster variables, so the pair is sorted first.
std::string boundary_invariant(const Params& p, std::string& how) {
  const int lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
  if (lo >= 2) {
    const SquareInvariant s = square_invariant(build_compactification(Params(lo, hi), Model::SquareS).type());
    how = "standard square";
    return "square{" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "}";
  }
  const Params q(hi, 1);
  if (hi <= 3) {
    how = "del Pezzo degree of Y";
    return "K2=" + std::to_string(canonical_degree(build_compactification(q, Model::Y).lattice));
  }
  const NgonType t = build_compactification(q, Model::TriangleT).type();
  how = "standard triangle";
  return "triangle" + to_string(t.normalized());
}

}  // namespace

ClassifyVerdict classify(const Params& x, const Params& y) {
  ClassifyVerdict v;
  std::string how_x, how_y;
  v.invariant_x = boundary_invariant(x, how_x);
  v.invariant_y = boundary_invariant(y, how_y);
  v.isomorphic = v.invariant_x == v.invariant_y;
  if (how_x != how_y) {
    v.reason = "different boundary kinds: " + how_x + " vs " + how_y;
  } else {
    v.reason = how_x + (v.isomorphic ? " invariants agree" : " invariants differ");
  }
  return v;
}

}  // namespace clusteraut
