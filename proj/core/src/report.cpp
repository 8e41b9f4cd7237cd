#include "pappus/report.hpp"

#include <algorithm>
#include <json.hpp>

namespace pappus {

bool TheoremEntry::pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
}

void TheoremEntry::add(std::string clause, bool ok, std::string detail) {
  clauses.push_back({std::move(clause), ok, std::move(detail)});
}

bool VerdictReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const TheoremEntry& e) { return e.pass(); });
}

std::string VerdictReport::to_json() const {
  using nlohmann::json;
  json j;
  j["input"] = input;
  j["pass"] = pass();
  json theorems = json::array();
  for (const auto& e : entries) {
    json clauses = json::array();
    for (const auto& c : e.clauses) {
      json cj = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      clauses.push_back(cj);
    }
    theorems.push_back({{"name", e.name}, {"pass", e.pass()}, {"clauses", clauses}, {"witnesses", e.witnesses}});
  }
  j["theorems"] = theorems;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j.dump(2) + "\n";
}

}  // namespace pappus
