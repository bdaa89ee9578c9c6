#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "supercoinv/arrangement.hpp"
#include "supercoinv/groebner.hpp"

namespace supercoinv {

struct CheckReport {
  std::string check;
  int n = 0;
  std::string instance;
  std::string expected;
  std::string actual;
  bool pass = false;
  long ms = 0;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

enum class ReportFormat { Json, Csv };

struct RunConfig {
  std::optional<int> max_n;         // per-suite default when empty
  int degree_cap = -1;              // bosonic cap for superspace tables; -1 = n(n-1)/2
  unsigned workers = 0;             // 0 = hardware concurrency
  MonomialOrder order = MonomialOrder::grevlex();
  std::optional<std::int64_t> prime;  // finite-field checks
  std::optional<std::uint32_t> sample_seed;  // keep a seeded half of each instance list
  bool allow_large = false;         // exhaustive n = 5 sweeps for the expensive suites
  bool timings = false;             // otherwise ms is reported as 0
  bool inject_fault = false;        // corrupt one input per suite (harness self-test)
};

// Southwest subsets of the augmented braid arrangement, in mask order. n <= 5.
std::vector<Arrangement> enumerate_southwest(int n, bool essential_only = false);

std::vector<std::string> suite_names();
// Throws DomainError for an unknown suite. "all" runs every suite in order.
std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& config = {});

bool all_pass(const std::vector<CheckReport>& reports);

void emit_report(const std::vector<CheckReport>& reports, ReportFormat format, std::ostream& out);
// Throws std::runtime_error on I/O failure.
void emit_report(const std::vector<CheckReport>& reports, ReportFormat format, const std::string& path);

// Human-readable summary of an arrangement with its root poset picture.
std::string describe_arrangement(const Arrangement& a);

}  // namespace supercoinv
