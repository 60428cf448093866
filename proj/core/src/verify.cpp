#include "hsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hsum/error.hpp"
#include "hsum/mzv_numeric.hpp"

namespace hsum {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Suspect: return "suspect";
  }
  return "suspect";
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Report verify(const Identity& id, std::optional<double> tol) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.identity = id.family;
  r.params = id.params;
  r.tol = tol.value_or(id.tol);
  try {
    auto lhs = eta_numeric(id.lhs, r.tol / 2, SeriesOptions{id.max_terms});
    auto rhs = expr_value(id.rhs, r.tol / 4);
    r.lhs = lhs.value;
    r.lhs_bound = lhs.error_bound;
    r.rhs = rhs.value;
    r.rhs_bound = rhs.error_bound;
    r.terms = lhs.terms_used;
    r.difference = std::abs(r.lhs - r.rhs);
    if (!std::isfinite(r.difference)) {
      r.verdict = Verdict::Suspect;
      r.diagnostic = "non-finite value";
    } else {
      r.verdict = r.difference <= r.lhs_bound + r.rhs_bound + r.tol ? Verdict::Pass : Verdict::Fail;
    }
  } catch (const Error& e) {
    r.verdict = Verdict::Suspect;
    r.diagnostic = e.what();
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Report> verify_all(std::optional<double> tol, unsigned threads) {
  std::vector<Identity> jobs;
  for (const auto& fam : registry())
    for (const auto& p : sweep(fam)) jobs.push_back(instantiate(fam.name, p));

  // longest first keeps the pool busy to the end
  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lhs_weight(jobs[a].lhs) > lhs_weight(jobs[b].lhs);
  });

  std::vector<Report> out(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < order.size();) out[order[i]] = verify(jobs[order[i]], tol);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.verdict == Verdict::Pass; });
}

namespace {

nlohmann::ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(fmt12(x).c_str(), nullptr);
}

}  // namespace

std::string reports_json(const std::vector<Report>& reports, bool timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["lhs"] = num(r.lhs);
    j["lhs_bound"] = num(r.lhs_bound);
    j["rhs"] = num(r.rhs);
    j["rhs_bound"] = num(r.rhs_bound);
    j["difference"] = num(r.difference);
    j["verdict"] = verdict_str(r.verdict);
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    if (timing) j["runtime"] = num(r.runtime_seconds);
    j["terms"] = r.terms;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string reports_table(const std::vector<Report>& reports, bool timing) {
  std::ostringstream os;
  char line[512];
  for (const auto& r : reports) {
    std::string id = r.identity;
    if (!r.params.empty()) id += "(" + params_str(r.params) + ")";
    std::snprintf(line, sizeof line, "%-24s %-8s lhs %s ± %.2g  rhs %s ± %.2g  diff %.2g  terms %lld", id.c_str(),
                  verdict_str(r.verdict).c_str(), fmt12(r.lhs).c_str(), r.lhs_bound, fmt12(r.rhs).c_str(),
                  r.rhs_bound, r.difference, static_cast<long long>(r.terms));
    os << line;
    if (timing) {
      std::snprintf(line, sizeof line, "  %.2fs", r.runtime_seconds);
      os << line;
    }
    if (!r.diagnostic.empty()) os << "  [" << r.diagnostic << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace hsum
