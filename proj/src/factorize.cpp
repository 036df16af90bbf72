#include <algorithm>

#include "clusteraut/surfmap.hpp"

namespace clusteraut {

Factorizer::Factorizer(const Params& params, const Budget& budget) : params_(params), budget_(budget) {
  const int ab = params.a * params.b;
  // rotation orders 5, 3, 4 in the finite cases; otherwise a short range
  int k_lo = -2, k_hi = 2;
  if (ab <= 3) {
    k_lo = 0;
    k_hi = (ab == 1 ? 5 : ab == 2 ? 3 : 4) - 1;
  }
  const bool swap = params.a == params.b && params.a >= 2;

  std::vector<EndoMap> dihedral;
  std::vector<Word> dihedral_words;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int s = 0; s < 2; ++s) {
      Word w = dihedral_word(k, s);
      dihedral.push_back(evaluate_word(params, w, budget));
      dihedral_words.push_back(std::move(w));
    }
  }
  for (int h = 0; h <= (swap ? 1 : 0); ++h) {
    for (int i = 0; i < params.a; ++i) {
      for (int j = 0; j < params.b; ++j) {
        Word tail;
        if (i != 0 || j != 0) tail.push_back(Generator::scaling(i, j));
        if (h) tail.push_back(Generator::swap());
        const EndoMap t = evaluate_word(params, tail, budget);
        for (std::size_t d = 0; d < dihedral.size(); ++d) {
          Word w = dihedral_words[d];
          w.insert(w.end(), tail.begin(), tail.end());
          auto key = compose(dihedral[d], t, budget).key();
          auto it = residues_.find(key);
          if (it == residues_.end() || it->second.size() > w.size()) residues_[key] = std::move(w);
        }
      }
    }
  }
}

bool Factorizer::search(const EndoMap& f, int depth, int cap, Word& out) const {
  if (auto it = residues_.find(f.key()); it != residues_.end()) {
    out = it->second;
    return true;
  }
  if (depth >= cap) return false;
  const std::int64_t d0 = total_weighted_degree(f);

  struct Move {
    EndoMap map;
    Generator gen;
    std::int64_t degree;
  };
  auto descend = [&](bool left) {
    std::vector<Move> moves;
    for (auto g : {Generator::sigma2(), Generator::sigma3()}) {
      const EndoMap s = make_generator(params_, g);
      EndoMap next = left ? compose(s, f, budget_) : compose(f, s, budget_);
      const std::int64_t d = total_weighted_degree(next);
      if (d < d0) moves.push_back({std::move(next), g, d});
    }
    std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) { return x.degree < y.degree; });
    for (const auto& mv : moves) {
      Word rest;
      if (!search(mv.map, depth + 1, cap, rest)) continue;
      // f = s * next (left) or next * s (right); s is an involution
      if (left) {
        out = {mv.gen};
        out.insert(out.end(), rest.begin(), rest.end());
      } else {
        out = std::move(rest);
        out.push_back(mv.gen);
      }
      return true;
    }
    return false;
  };
  return descend(false) || descend(true);
}

Word Factorizer::factorize(const EndoMap& f, int cap) const {
  if (!(f.params() == params_)) throw Error(Errc::ParamsMismatch, "factorizer built for other parameters");
  Word w;
  if (!search(f, 0, cap, w)) {
    throw Error(Errc::FactorizationFailed, "no descent to a known residue within " + std::to_string(cap) + " steps");
  }
  return w;
}

Word factorize(const EndoMap& f, int cap, const Budget& budget) { return Factorizer(f.params(), budget).factorize(f, cap); }

}  // namespace clusteraut
