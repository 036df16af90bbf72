#include "clusteraut/autgroup.hpp"

#include <numeric>
#include <unordered_map>

namespace clusteraut {

namespace {

int mod(std::int64_t x, std::int64_t m) { return static_cast<int>(((x % m) + m) % m); }

EndoMap conjugate(const EndoMap& g, const EndoMap& x) { return compose(g, compose(x, g)); }

std::vector<int> scaling_table(const Params& params, const EndoMap& g,
                               const std::unordered_map<std::string, int>& index_of) {
  std::vector<int> table(params.a * params.b);
  for (int i = 0; i < params.a; ++i) {
    for (int j = 0; j < params.b; ++j) {
      const EndoMap c = conjugate(g, make_generator(params, Generator::scaling(i, j)));
      auto it = index_of.find(c.key());
      if (it == index_of.end()) {
        throw Error(Errc::ConjugationNotScaling, "conjugate of m(" + std::to_string(i) + "," + std::to_string(j) +
                                                     ") is not a scaling");
      }
      table[i * params.b + j] = it->second;
    }
  }
  return table;
}

// c_{r^k} as an index map, using c_r = c_sigma3 o c_sigma2.
int conj_rotation(const GroupStructure& g, int idx, std::int64_t k) {
  const auto& t2 = g.tables.sigma2;
  const auto& t3 = g.tables.sigma3;
  // the action of r on a finite set has finite order; reduce k by it
  int period = 1;
  for (int x = t3[t2[idx]]; x != idx; x = t3[t2[x]]) ++period;
  k %= period;
  for (; k > 0; --k) idx = t3[t2[idx]];
  for (; k < 0; ++k) idx = t2[t3[idx]];
  return idx;
}

GroupElement normalized(GroupElement x) {
  const auto& g = *x.structure;
  if (g.rotation_order) x.r_exp = mod(x.r_exp, *g.rotation_order);
  x.mu_i = mod(x.mu_i, g.params.a);
  x.mu_j = mod(x.mu_j, g.params.b);
  return x;
}

void check_same(const GroupElement& x, const GroupElement& y) {
  if (!(x.structure->params == y.structure->params)) {
    throw Error(Errc::StructureMismatch, "elements of different groups");
  }
}

}  // namespace

std::string_view case_name(GroupCase c) {
  switch (c) {
    case GroupCase::A2:
      return "A2";
    case GroupCase::B2Like:
      return "B2-like";
    case GroupCase::G2Like:
      return "G2-like";
    case GroupCase::EqualGE2:
      return "EqualGE2";
    case GroupCase::GenericInfinite:
      return "GenericInfinite";
  }
  return "?";
}

ActionTables derive_action_tables(const Params& params) {
  std::unordered_map<std::string, int> index_of;
  for (int i = 0; i < params.a; ++i) {
    for (int j = 0; j < params.b; ++j) index_of[make_generator(params, Generator::scaling(i, j)).key()] = i * params.b + j;
  }
  ActionTables t;
  const EndoMap s2 = make_generator(params, Generator::sigma2());
  const EndoMap s3 = make_generator(params, Generator::sigma3());
  t.sigma2 = scaling_table(params, s2, index_of);
  t.sigma3 = scaling_table(params, s3, index_of);
  if (params.a == params.b && params.a >= 2) {
    const EndoMap h = make_generator(params, Generator::swap());
    t.swap = scaling_table(params, h, index_of);
    t.swap_exchanges_sigmas = equal(conjugate(h, s2), s3);
  }
  return t;
}

bool GroupStructure::scalings_central() const {
  for (std::size_t k = 0; k < tables.sigma2.size(); ++k) {
    if (tables.sigma2[k] != static_cast<int>(k) || tables.sigma3[k] != static_cast<int>(k)) return false;
  }
  return true;
}

std::string GroupStructure::describe() const {
  const std::string mu = "mu_{" + std::to_string(params.a) + "," + std::to_string(params.b) + "}";
  const std::string join = scalings_central() ? " x " : " |x ";
  switch (group_case) {
    case GroupCase::A2:
      return "D_10";
    case GroupCase::B2Like:
    case GroupCase::G2Like:
      return "D_" + std::to_string(*dihedral_order()) + join + mu;
    case GroupCase::EqualGE2:
      return "(D_inf" + join + mu + ") x| Z/2";
    case GroupCase::GenericInfinite:
      return "D_inf" + join + mu;
  }
  return "?";
}

StructurePtr structure_of(const Params& params) {
  auto g = std::make_shared<GroupStructure>();
  const int a = params.a, b = params.b;
  g->params = params;
  g->mu_order = a * b;
  if (a == 1 && b == 1) {
    g->group_case = GroupCase::A2;
    g->rotation_order = 5;
  } else if (a * b == 2) {
    g->group_case = GroupCase::B2Like;
    g->rotation_order = 3;
  } else if (a * b == 3) {
    g->group_case = GroupCase::G2Like;
    g->rotation_order = 4;
  } else if (a == b) {
    g->group_case = GroupCase::EqualGE2;
    g->has_swap = true;
  } else {
    g->group_case = GroupCase::GenericInfinite;
  }
  g->tables = derive_action_tables(params);
  return g;
}

GroupElement group_identity(const StructurePtr& g) { return GroupElement{g}; }

GroupElement from_generator(const StructurePtr& g, const Generator& gen) {
  GroupElement x{g};
  switch (gen.kind) {
    case Generator::Kind::Sigma2:
      x.s = 1;
      break;
    case Generator::Kind::Sigma3:
      // sigma3 = r^-1 sigma2
      x.r_exp = -1;
      x.s = 1;
      break;
    case Generator::Kind::Scaling:
      x.mu_i = gen.i;
      x.mu_j = gen.j;
      break;
    case Generator::Kind::Swap:
      if (g->params.a != g->params.b) throw Error(Errc::SwapRequiresEqualParams, "swap needs a == b");
      if (g->has_swap) {
        x.h = 1;
      } else {
        // X(1,1): the reversal equals sigma2 sigma3 sigma2 sigma3 sigma2
        x.r_exp = 2;
        x.s = 1;
      }
      break;
  }
  return normalized(x);
}

GroupElement from_word(const StructurePtr& g, const Word& w) {
  GroupElement acc = group_identity(g);
  for (const auto& gen : w) acc = gmul(acc, from_generator(g, gen));
  return acc;
}

GroupElement gmul(const GroupElement& x, const GroupElement& y) {
  check_same(x, y);
  const GroupStructure& g = *x.structure;
  const int b = g.params.b;

  // move x's h past y's dihedral and scaling parts
  std::int64_t k2 = y.r_exp;
  int s2 = y.s;
  int m2 = mod(y.mu_i, g.params.a) * b + mod(y.mu_j, b);
  if (x.h) {
    k2 = -k2 - s2;
    m2 = g.tables.swap[m2];
  }
  // then x's scaling past d2: m1 d2 = d2 c_{d2}(m1)
  int m1 = mod(x.mu_i, g.params.a) * b + mod(x.mu_j, b);
  m1 = conj_rotation(g, m1, k2);
  if (s2) m1 = g.tables.sigma2[m1];

  GroupElement z{x.structure};
  z.r_exp = x.r_exp + (x.s ? -k2 : k2);
  z.s = x.s ^ s2;
  z.mu_i = m1 / b + m2 / b;
  z.mu_j = m1 % b + m2 % b;
  z.h = x.h ^ y.h;
  return normalized(z);
}

GroupElement ginv(const GroupElement& x) {
  // (d m h)^-1 = h (-m) d^-1
  GroupElement hpart{x.structure}, mpart{x.structure}, dpart{x.structure};
  hpart.h = x.h;
  mpart.mu_i = -x.mu_i;
  mpart.mu_j = -x.mu_j;
  dpart.r_exp = x.s ? x.r_exp : -x.r_exp;
  dpart.s = x.s;
  return gmul(gmul(hpart, normalized(mpart)), normalized(dpart));
}

Word to_word(const GroupElement& x) {
  std::int64_t k = x.r_exp;
  if (const auto& ord = x.structure->rotation_order) {
    // pick the representative of k mod ord with the shorter word
    const std::int64_t alt = k - *ord;
    if (dihedral_word(alt, x.s).size() < dihedral_word(k, x.s).size()) k = alt;
  }
  Word w = dihedral_word(k, x.s);
  if (x.mu_i || x.mu_j) w.push_back(Generator::scaling(x.mu_i, x.mu_j));
  if (x.h) w.push_back(Generator::swap());
  return w;
}

EndoMap to_endo(const GroupElement& x, const Budget& budget) {
  return evaluate_word(x.structure->params, to_word(x), budget);
}

std::vector<GroupElement> enumerate_finite(const StructurePtr& g) {
  if (!g->rotation_order) throw Error(Errc::NotFiniteType, std::string(case_name(g->group_case)) + " is infinite");
  std::vector<GroupElement> out;
  for (int k = 0; k < *g->rotation_order; ++k) {
    for (int s = 0; s < 2; ++s) {
      for (int i = 0; i < g->params.a; ++i) {
        for (int j = 0; j < g->params.b; ++j) out.push_back(GroupElement{g, k, s, i, j, 0});
      }
    }
  }
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t n = 0; n < out.size(); ++n) {
    auto [it, fresh] = seen.emplace(to_endo(out[n]).key(), n);
    if (!fresh) {
      throw Error(Errc::StructureMismatch,
                  to_string(out[it->second]) + " and " + to_string(out[n]) + " give the same map");
    }
  }
  return out;
}

std::string to_string(const GroupElement& x) {
  std::string s = "r^" + std::to_string(x.r_exp);
  if (x.s) s += " s2";
  if (x.mu_i || x.mu_j) s += " m(" + std::to_string(x.mu_i) + "," + std::to_string(x.mu_j) + ")";
  if (x.h) s += " h";
  return s;
}

}  // namespace clusteraut
