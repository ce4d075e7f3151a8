#include "dident/report.hpp"

#include <sstream>

namespace dident {

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& it : other.items)
    add(it);
  pass = pass && other.pass;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  seconds += other.seconds;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["pass"] = pass;
  j["notes"] = notes;
  j["seconds"] = seconds;
  j["items"] = nlohmann::json::array();
  for (const auto& it : items) {
    j["items"].push_back({{"kind", it.kind},
                          {"group", it.group},
                          {"formula", it.formula},
                          {"status", it.status},
                          {"expected", it.expected},
                          {"pass", it.pass},
                          {"witness", it.witness},
                          {"detail", it.detail},
                          {"nodes", it.nodes},
                          {"seconds", it.seconds}});
  }
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.seconds = j.at("seconds").get<double>();
  for (const auto& ji : j.at("items")) {
    ReportItem it;
    it.kind = ji.at("kind").get<std::string>();
    it.group = ji.at("group").get<std::string>();
    it.formula = ji.at("formula").get<std::string>();
    it.status = ji.at("status").get<std::string>();
    it.expected = ji.at("expected").get<std::string>();
    it.pass = ji.at("pass").get<bool>();
    it.witness = ji.at("witness").get<std::vector<std::string>>();
    it.detail = ji.at("detail").get<std::string>();
    it.nodes = ji.at("nodes").get<std::uint64_t>();
    it.seconds = ji.at("seconds").get<double>();
    r.items.push_back(std::move(it));
  }
  r.pass = j.at("pass").get<bool>();
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "claim " << claim << ": " << (pass ? "PASS" : "FAIL") << "\n";
  for (const auto& it : items) {
    os << "  [" << (it.pass ? "ok" : "FAIL") << "] " << it.kind;
    if (!it.group.empty())
      os << " " << it.group;
    if (!it.formula.empty())
      os << " " << it.formula;
    os << ": " << it.status;
    if (!it.expected.empty() && it.expected != it.status)
      os << " (expected " << it.expected << ")";
    if (!it.detail.empty())
      os << "; " << it.detail;
    if (!it.witness.empty()) {
      os << "; witness ";
      for (std::size_t i = 0; i < it.witness.size(); ++i)
        os << (i ? ", " : "") << it.witness[i];
    }
    os << "\n";
  }
  for (const auto& n : notes)
    os << "  note: " << n << "\n";
  return os.str();
}

} // namespace dident
