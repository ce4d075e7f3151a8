#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dident {

// One obligation of a campaign: a validity check, an elimination, a group
// disposition, a lemma instance, and so on.
struct ReportItem {
  std::string kind;
  std::string group;
  std::string formula;
  std::string status;   // observed outcome
  std::string expected; // required outcome
  bool pass = false;
  std::vector<std::string> witness; // "x1 = (1 2 3)" style entries
  std::string detail;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct VerificationReport {
  std::string claim;
  bool pass = true;
  std::vector<ReportItem> items;
  std::vector<std::string> notes;
  double seconds = 0;

  void add(ReportItem item) {
    pass = pass && item.pass;
    items.push_back(std::move(item));
  }
  void merge(const VerificationReport& other);

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string to_text() const;
};

} // namespace dident
