#include <algorithm>
#include <limits>
#include <map>

#include <json.hpp>

#include "clusteraut/surfmap.hpp"

namespace clusteraut {

namespace {

using nlohmann::json;

json coeff_to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

mpz_class coeff_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class c;
    if (c.set_str(j.get<std::string>(), 10) != 0) throw Error(Errc::ParseError, "bad integer coefficient");
    return c;
  }
  throw Error(Errc::ParseError, "coefficient must be an integer or a decimal string");
}

json poly_to_json(const LaurentPoly& p, const Params& params, std::uint32_t width) {
  // group t-powers per monomial, then list monomials in canonical order
  std::map<Monomial, std::vector<mpz_class>> grouped;
  for (const auto& t : p.terms()) {
    auto& slot = grouped[t.mono];
    if (slot.empty()) slot.resize(width);
    slot[t.tpow] = t.coeff;
  }
  std::vector<const std::pair<const Monomial, std::vector<mpz_class>>*> order;
  for (const auto& entry : grouped) order.push_back(&entry);
  std::sort(order.begin(), order.end(),
            [&](auto* x, auto* y) { return weighted_compare(x->first, y->first, params) > 0; });

  json out = json::array();
  for (const auto* entry : order) {
    json cs = json::array();
    for (const auto& c : entry->second) cs.push_back(coeff_to_json(c));
    out.push_back(json::array({json(entry->first.e), cs}));
  }
  return out;
}

LaurentPoly poly_from_json(const json& j, CoeffRingId ring) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a list of [exponents, coefficients]");
  std::vector<Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) throw Error(Errc::ParseError, "term must be [exponents, coefficients]");
    const auto& ex = entry[0];
    const auto& cs = entry[1];
    if (!ex.is_array() || ex.size() != kNumVars) throw Error(Errc::ParseError, "exponent vector needs 4 entries");
    if (!cs.is_array() || cs.size() != ring.width()) throw Error(Errc::ParseError, "coefficient vector has wrong length");
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = ex[i].get<std::int32_t>();
    for (std::uint32_t k = 0; k < ring.width(); ++k) terms.push_back({m, k, coeff_from_json(cs[k])});
  }
  return LaurentPoly::from_terms(ring, std::move(terms));
}

}  // namespace

std::string endo_to_json(const EndoMap& f) {
  std::uint32_t width = 1;
  for (const auto& img : f.images()) width = std::max(width, img.value().ring().width());
  json out;
  out["a"] = f.params().a;
  out["b"] = f.params().b;
  out["images"] = json::array();
  for (const auto& img : f.images()) out["images"].push_back(poly_to_json(img.value(), f.params(), width));
  return out.dump();
}

EndoMap endo_from_json(std::string_view src) {
  json j;
  try {
    j = json::parse(src);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  try {
    const Params params(j.at("a").get<int>(), j.at("b").get<int>());
    const auto& imgs = j.at("images");
    if (!imgs.is_array() || imgs.size() != kNumVars) throw Error(Errc::ParseError, "images must hold 4 polynomials");
    std::uint32_t width = 1;
    for (const auto& p : imgs) {
      for (const auto& entry : p) {
        if (entry.is_array() && entry.size() == 2 && entry[1].is_array()) {
          width = std::max<std::uint32_t>(width, static_cast<std::uint32_t>(entry[1].size()));
        }
      }
    }
    const CoeffRingId ring = width == 1 ? CoeffRingId::integers() : CoeffRingId::surrogate(width);
    std::array<LaurentPoly, kNumVars> images;
    for (int i = 0; i < kNumVars; ++i) images[i] = poly_from_json(imgs[i], ring);
    return EndoMap::from_images(params, images);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace clusteraut
