#pragma once

// Self-check batteries run by `clusteraut verify`.

#include <optional>
#include <string>
#include <vector>

#include "clusteraut/coeffpoly.hpp"

namespace clusteraut {

enum class Suite { Identities, Theorem, Geometry, Errata };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view s);

struct ReportItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  Suite suite = Suite::Identities;
  Params params;
  std::vector<ReportItem> items;

  bool all_pass() const;
};

// Errata items pass when the discrepancy is confirmed by computation; the
// errata suite does not depend on params.
Report verify_suite(Suite suite, const Params& params);

std::string report_to_text(const Report& r);
std::string report_to_json(const Report& r);

}  // namespace clusteraut
