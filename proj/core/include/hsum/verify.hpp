#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsum/catalog.hpp"

namespace hsum {

enum class Verdict { Pass, Fail, Suspect };

std::string verdict_str(Verdict v);

struct Report {
  std::string identity;
  Params params;
  double lhs = 0.0;
  double lhs_bound = 0.0;
  double rhs = 0.0;
  double rhs_bound = 0.0;
  double difference = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::Suspect;
  std::string diagnostic;  // set when an evaluation failed
  double runtime_seconds = 0.0;
  std::int64_t terms = 0;
};

// Uses the family tolerance when tol is absent.
Report verify(const Identity& id, std::optional<double> tol = std::nullopt);

// Every sweep tuple of every family, evaluated on `threads` workers
// (0 = hardware concurrency) and returned in registry order.
std::vector<Report> verify_all(std::optional<double> tol = std::nullopt, unsigned threads = 0);

bool all_pass(const std::vector<Report>& reports);

std::string reports_json(const std::vector<Report>& reports, bool timing = false);
std::string reports_table(const std::vector<Report>& reports, bool timing = false);

// printf("%.12g")
std::string fmt12(double x);

}  // namespace hsum
