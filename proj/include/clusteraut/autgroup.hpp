#pragma once

// The automorphism group of X(a,b) in normal form d * m * h with
// d = r^k sigma2^s (r = sigma2 sigma3), m a diagonal scaling and h the
// coordinate reversal (only when a = b >= 2).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clusteraut/surfmap.hpp"

namespace clusteraut {

enum class GroupCase { A2, B2Like, G2Like, EqualGE2, GenericInfinite };

std::string_view case_name(GroupCase c);

// Conjugation g^-1 m g of scaling(i, j) for g = sigma2, sigma3 and swap,
// indexed by i * b + j.
struct ActionTables {
  std::vector<int> sigma2;
  std::vector<int> sigma3;
  std::vector<int> swap;  // empty unless a = b >= 2
  // a = b >= 2 only: h sigma2 h == sigma3 as maps
  bool swap_exchanges_sigmas = false;
};

ActionTables derive_action_tables(const Params& params);

struct GroupStructure {
  GroupCase group_case = GroupCase::A2;
  Params params;
  std::optional<int> rotation_order;  // |sigma2 sigma3|; nullopt when infinite
  int mu_order = 1;
  bool has_swap = false;
  ActionTables tables;

  std::optional<int> dihedral_order() const {
    return rotation_order ? std::optional<int>(2 * *rotation_order) : std::nullopt;
  }
  std::optional<int> group_order() const {
    return rotation_order ? std::optional<int>(2 * *rotation_order * mu_order * (has_swap ? 2 : 1)) : std::nullopt;
  }
  // True when both sigma actions on the scalings are trivial.
  bool scalings_central() const;
  std::string describe() const;
};

using StructurePtr = std::shared_ptr<const GroupStructure>;

StructurePtr structure_of(const Params& params);

struct GroupElement {
  StructurePtr structure;
  std::int64_t r_exp = 0;
  int s = 0;
  int mu_i = 0;
  int mu_j = 0;
  int h = 0;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.structure->params == y.structure->params && x.r_exp == y.r_exp && x.s == y.s && x.mu_i == y.mu_i &&
           x.mu_j == y.mu_j && x.h == y.h;
  }
};

GroupElement group_identity(const StructurePtr& g);
GroupElement from_generator(const StructurePtr& g, const Generator& gen);
GroupElement from_word(const StructurePtr& g, const Word& w);

GroupElement gmul(const GroupElement& x, const GroupElement& y);
GroupElement ginv(const GroupElement& x);
EndoMap to_endo(const GroupElement& x, const Budget& budget = Budget::unlimited());
Word to_word(const GroupElement& x);
std::vector<GroupElement> enumerate_finite(const StructurePtr& g);

// "r^k [s2] [m(i,j)] [h]"
std::string to_string(const GroupElement& x);

}  // namespace clusteraut
