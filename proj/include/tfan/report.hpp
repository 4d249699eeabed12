#pragma once
// Diagnostic reports: a list of rule violations.

#include <string>
#include <vector>

namespace tfan {

struct Finding {
  std::string rule;
  std::string location;
  std::string message;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct Report {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  void add(std::string rule, std::string location, std::string message);
  void merge(const Report& other);
};

}  // namespace tfan
