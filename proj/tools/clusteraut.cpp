#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusteraut/autgroup.hpp"
#include "clusteraut/cluster.hpp"
#include "clusteraut/geom.hpp"
#include "clusteraut/surfmap.hpp"
#include "clusteraut/verify.hpp"

using namespace clusteraut;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Failure = 1, Usage = 2, OverBudget = 3 };

struct Options {
  int a = 1;
  int b = 1;
  std::string format = "text";
  std::size_t max_terms = 1'000'000;
  std::size_t max_word = 16;
  bool literal_bound = false;
  std::int64_t n = 0;
  std::string word;
  std::string rhs;
  std::string model = "pentagon";
  std::string origin = "plane";
  int c = 1;
  int d = 1;
  std::string suite = "identities";
  int cap = 24;

  bool json() const { return format == "json"; }
  Params params() const { return Params(a, b); }
  Budget budget() const { return Budget{max_terms}; }
};

Word checked_word(const Options& o, const std::string& src) {
  Word w = parse_word(src);
  if (w.size() > o.max_word) {
    throw Error(Errc::InvalidArgument,
                "word has " + std::to_string(w.size()) + " letters, limit is " + std::to_string(o.max_word));
  }
  return w;
}

EndoMap evaluate(const Options& o, const Word& w) {
  const Params p = o.params();
  EndoMap acc = EndoMap::identity(p);
  const SumBound bound = o.literal_bound ? SumBound::Literal : SumBound::Corrected;
  for (const auto& g : w) acc = compose(acc, make_generator(p, g, bound), o.budget());
  return acc;
}

std::string images_text(const EndoMap& f) {
  std::ostringstream os;
  for (int i = 0; i < kNumVars; ++i) os << "y" << i + 1 << " -> " << to_string(f.image(i), f.params()) << "\n";
  return os.str();
}

int cmd_cluster(const Options& o) {
  const ClusterVar v = cluster_var(o.params(), o.n, o.budget());
  const bool positive = has_positive_coefficients(v.value);
  const std::string text = to_string(v.value);
  if (o.json()) {
    std::cout << json{{"a", o.a}, {"b", o.b}, {"n", o.n}, {"value", text}, {"positive", positive}}.dump() << "\n";
  } else {
    std::cout << "y" << o.n << " = " << text << "\n";
    std::cout << "positive coefficients: " << (positive ? "yes" : "no") << "\n";
  }
  return Ok;
}

int cmd_period(const Options& o) {
  const int n_max = o.n > 0 ? static_cast<int>(o.n) : 50;
  const auto per = detect_period(o.params(), n_max, o.budget());
  if (o.json()) {
    std::cout << json{{"a", o.a}, {"b", o.b}, {"n_max", n_max}, {"period", per ? json(*per) : json(nullptr)}}.dump()
              << "\n";
  } else {
    std::cout << (per ? std::to_string(*per) : "none within " + std::to_string(n_max)) << "\n";
  }
  return Ok;
}

int cmd_aut_compose(const Options& o) {
  const EndoMap f = evaluate(o, checked_word(o, o.word));
  if (o.json()) {
    std::cout << endo_to_json(f) << "\n";
  } else {
    std::cout << images_text(f);
    std::cout << "endomorphism: " << (is_endomorphism(f) ? "yes" : "no") << "\n";
  }
  return Ok;
}

int cmd_aut_factor(const Options& o) {
  const EndoMap f = evaluate(o, checked_word(o, o.word));
  const Word w = factorize(f, o.cap, o.budget());
  const bool same = equal(evaluate(o, w), f);
  if (o.json()) {
    std::cout << json{{"a", o.a}, {"b", o.b}, {"word", to_string(w)}, {"length", w.size()}, {"checked", same}}.dump()
              << "\n";
  } else {
    std::cout << (w.empty() ? "id" : to_string(w)) << "\n";
  }
  return same ? Ok : Failure;
}

int cmd_aut_order(const Options& o) {
  const EndoMap f = evaluate(o, checked_word(o, o.word));
  const auto ord = order_of(f, o.cap, o.budget());
  if (o.json()) {
    std::cout << json{{"a", o.a}, {"b", o.b}, {"cap", o.cap}, {"order", ord ? json(*ord) : json(nullptr)}}.dump()
              << "\n";
  } else {
    std::cout << (ord ? std::to_string(*ord) : "none within " + std::to_string(o.cap)) << "\n";
  }
  return Ok;
}

int cmd_group_mul(const Options& o) {
  const StructurePtr g = structure_of(o.params());
  GroupElement x = from_word(g, checked_word(o, o.word));
  if (!o.rhs.empty()) x = gmul(x, from_word(g, checked_word(o, o.rhs)));
  if (o.json()) {
    std::cout << json{{"a", o.a}, {"b", o.b}, {"normal_form", to_string(x)}, {"word", to_string(to_word(x))}}.dump()
              << "\n";
  } else {
    std::cout << to_string(x) << "\n";
  }
  return Ok;
}

int cmd_group_structure(const Options& o) {
  const StructurePtr g = structure_of(o.params());
  const auto order = g->group_order();
  if (o.json()) {
    json j{{"a", o.a},
           {"b", o.b},
           {"case", std::string(case_name(g->group_case))},
           {"structure", g->describe()},
           {"rotation_order", g->rotation_order ? json(*g->rotation_order) : json(nullptr)},
           {"order", order ? json(*order) : json(nullptr)},
           {"scalings_central", g->scalings_central()},
           {"sigma2_action", g->tables.sigma2},
           {"sigma3_action", g->tables.sigma3},
           {"swap_action", g->tables.swap}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << g->describe() << "\n";
    std::cout << "case: " << case_name(g->group_case) << "\n";
    std::cout << "order: " << (order ? std::to_string(*order) : "infinite") << "\n";
  }
  return Ok;
}

int cmd_group_enumerate(const Options& o) {
  const auto elems = enumerate_finite(structure_of(o.params()));
  if (o.json()) {
    json list = json::array();
    for (const auto& x : elems) list.push_back(to_string(x));
    std::cout << json{{"a", o.a}, {"b", o.b}, {"count", elems.size()}, {"elements", list}}.dump() << "\n";
  } else {
    for (const auto& x : elems) std::cout << to_string(x) << "\n";
    std::cout << elems.size() << " elements\n";
  }
  return Ok;
}

int cmd_geom_boundary(const Options& o) {
  const auto model = parse_model(o.model);
  if (!model) throw ParseError("unknown model '" + o.model + "'", 1, 1);
  if (o.origin != "plane" && o.origin != "quadric") throw ParseError("unknown origin '" + o.origin + "'", 1, 1);
  const LatticeOrigin origin = o.origin == "plane" ? LatticeOrigin::Plane : LatticeOrigin::Quadric;
  const BoundaryCycle c = build_compactification(o.params(), *model, origin);
  if (o.json()) {
    std::cout << cycle_to_json(c) << "\n";
  } else {
    for (const auto& curve : c.curves) std::cout << curve.name << "^2 = " << c.lattice.dot(curve.cls, curve.cls) << "\n";
    std::cout << "type " << to_string(c.type()) << "\n";
    std::cout << "K^2 = " << canonical_degree(c.lattice) << "\n";
    std::cout << "anticanonical: " << (is_anticanonical(c) ? "yes" : "no") << "\n";
  }
  return Ok;
}

int cmd_classify(const Options& o) {
  const ClassifyVerdict v = classify(o.params(), Params(o.c, o.d));
  if (o.json()) {
    std::cout << json{{"x", {o.a, o.b}},
                      {"y", {o.c, o.d}},
                      {"isomorphic", v.isomorphic},
                      {"invariant_x", v.invariant_x},
                      {"invariant_y", v.invariant_y},
                      {"reason", v.reason}}
                     .dump()
              << "\n";
  } else {
    std::cout << (v.isomorphic ? "isomorphic" : "not isomorphic") << ": " << v.invariant_x << " vs " << v.invariant_y
              << " (" << v.reason << ")\n";
  }
  return Ok;
}

int cmd_verify(const Options& o) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw ParseError("unknown suite '" + o.suite + "'", 1, 1);
  const Report r = verify_suite(*suite, o.params());
  std::cout << (o.json() ? report_to_json(r) + "\n" : report_to_text(r));
  return r.all_pass() ? Ok : Failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster automorphisms of C(a,b) and their surface models"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "exchange exponent a")->check(CLI::PositiveNumber);
    sub->add_option("--b", o.b, "exchange exponent b")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-terms", o.max_terms, "term budget per polynomial")->check(CLI::PositiveNumber);
    sub->add_option("--max-word", o.max_word, "longest accepted word")->check(CLI::PositiveNumber);
    sub->add_flag("--paper-literal", o.literal_bound, "use the uncorrected s3 sum bound");
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> subs;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    subs.emplace_back(sub, fn);
    return sub;
  };

  add("cluster", "cluster variable y_n as a Laurent polynomial in y1, y2", cmd_cluster)
      ->add_option("--n", o.n, "index")
      ->required();
  add("period", "period of the sequence, if any", cmd_period)->add_option("--n", o.n, "search bound (default 50)");
  add("aut-compose", "images of a generator word", cmd_aut_compose)->add_option("--word", o.word)->required();
  {
    auto* sub = add("aut-factor", "factor the map of a word into s2, s3 and a residue", cmd_aut_factor);
    sub->add_option("--word", o.word)->required();
    sub->add_option("--cap", o.cap, "descent depth")->check(CLI::PositiveNumber);
  }
  {
    auto* sub = add("aut-order", "order of the map of a word", cmd_aut_order);
    sub->add_option("--word", o.word)->required();
    sub->add_option("--cap", o.cap, "largest order tried")->check(CLI::PositiveNumber);
  }
  {
    auto* sub = add("group-mul", "group normal form of a word (times --rhs)", cmd_group_mul);
    sub->add_option("--word", o.word)->required();
    sub->add_option("--rhs", o.rhs);
  }
  add("group-structure", "structure of the automorphism group", cmd_group_structure);
  add("group-enumerate", "all elements of a finite automorphism group", cmd_group_enumerate);
  {
    auto* sub = add("geom-boundary", "boundary cycle of a compactification", cmd_geom_boundary);
    sub->add_option("--model", o.model, "barx, pentagon, triangle, square or y");
    sub->add_option("--origin", o.origin, "plane or quadric");
  }
  {
    auto* sub = add("classify", "decide X(a,b) ~ X(c,d)", cmd_classify);
    sub->add_option("--c", o.c)->check(CLI::PositiveNumber);
    sub->add_option("--d", o.d)->check(CLI::PositiveNumber);
  }
  add("verify", "run a self-check suite", cmd_verify)
      ->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"identities", "theorem", "geometry", "errata"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : Usage;
  }

  try {
    for (const auto& [sub, fn] : subs) {
      if (sub->parsed()) return fn(o);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::BudgetExceeded) return OverBudget;
    if (e.code() == Errc::ParseError || e.code() == Errc::InvalidArgument) return Usage;
    return Failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Failure;
  }
  return Usage;
}
