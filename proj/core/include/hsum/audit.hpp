#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hsum {

// One printed formula checked against an independent oracle, together with
// a candidate correction when one is proposed.
struct AuditEntry {
  std::string target;  // e.g. "euler-sign", "qpnn1-k0", "hn-subscript"
  std::string params;
  std::string printed;
  std::optional<std::string> corrected;
  std::string oracle;  // how the reference value was obtained
  double printed_value = 0.0;  // NaN when the printed form is undefined
  std::optional<double> corrected_value;
  double oracle_value = 0.0;
  double oracle_bound = 0.0;
  bool exact = false;  // compared in exact rationals
  bool printed_matches = false;
  bool corrected_matches = false;
  std::string verdict;  // printed-holds, corrected-holds, both-hold, neither-holds, oracle-failed
};

inline constexpr double kAuditMatchTolerance = 1e-6;

std::vector<AuditEntry> audit_boundaries();

std::string audit_json(const std::vector<AuditEntry>& entries);
std::string audit_table(const std::vector<AuditEntry>& entries);

}  // namespace hsum
