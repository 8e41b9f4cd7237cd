#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pappus {

struct Clause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremEntry {
  std::string name;
  std::vector<Clause> clauses;
  std::map<std::string, std::string> witnesses;  // display-canonical coordinates

  bool pass() const;
  void add(std::string clause, bool ok, std::string detail = {});
};

struct VerdictReport {
  std::map<std::string, std::string> input;
  std::vector<TheoremEntry> entries;
  std::optional<double> elapsed_ms;

  bool pass() const;
  /// Pretty-printed, keys sorted.
  std::string to_json() const;
};

}  // namespace pappus
