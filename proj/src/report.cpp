#include "tfan/report.hpp"

namespace tfan {

void Report::add(std::string rule, std::string location, std::string message) {
  findings.push_back({std::move(rule), std::move(location), std::move(message)});
}

void Report::merge(const Report& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

}  // namespace tfan
