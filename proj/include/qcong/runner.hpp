#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qcong/finvariant.hpp"
#include "qcong/record.hpp"

namespace qcong {

/// Parses "7", "3..13", "1,2,6", "1..25:odd", "-3..3", "2..10:even" and comma
/// joins of these. Throws std::invalid_argument.
std::vector<long> parse_int_list(std::string_view text);

/// Keeps odd primes, sorted and unique. "3..13" therefore means {3,5,7,11,13}.
std::vector<long> odd_primes_in(std::span<const long> values);

enum class CheckKind { q_congruence, classical, identity, f_invariant };

struct CheckInfo {
  std::string id;
  std::string summary;
  CheckKind kind;
  bool uses_mr;       // sweeps (m, r) in addition to p
  bool uses_p;        // identities indexed by n alone ignore p
  int modulus_power;  // 1 or 2 for [p]^r, 2 for p^2, 0 for exact identities
  bool conjectural;
  long default_cap;   // identity size cap; 0 when unused
};

/// Every runnable check, in a fixed order.
std::span<const CheckInfo> check_catalog();
const CheckInfo* find_check(std::string_view id);

struct SweepConfig {
  std::vector<long> p{3, 5, 7, 11, 13};
  std::vector<long> m{1, 2, 3, 4, 5, 6, 7, 8};
  std::optional<std::vector<long>> r;  // default 1..2m per m
  std::optional<std::vector<long>> x;  // default per check
  std::optional<long> cap_n;           // default per identity
  std::optional<int> modulus_power;    // keep only checks with this modulus
};

/// Expands ids ("all", "proven", "conjectural" or catalog ids) against the
/// sweep. Throws std::invalid_argument for unknown ids.
std::vector<std::function<CheckRecord()>> build_tasks(std::span<const std::string> ids, const SweepConfig& cfg);

/// Runs work items on `jobs` threads; results come back in input order.
template <typename T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& work, unsigned jobs) {
  std::vector<std::optional<T>> slots(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) slots[i].emplace(work[i]());
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  std::vector<T> out;
  out.reserve(work.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Runs and sorts by (check_id, p, m, r, ...), so output does not depend on jobs.
std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& tasks, unsigned jobs);

enum class OutputFormat { text, jsonl, csv };
/// Throws std::invalid_argument.
OutputFormat parse_format(std::string_view name);

std::string render_records(std::span<const CheckRecord> records, OutputFormat format, bool with_timing);

/// A record that should break the exit code: fail or error on a proven check.
bool is_proven_failure(const CheckRecord& rec);

/// Grouped counts by check id and status plus every fail/error with its witness.
std::string summarize_records(std::span<const CheckRecord> records);

std::string witness_text(const CheckRecord& rec);

/// f values grouped by (p, m) in input order, seven per line:
/// "f_{7,2,1}=-12, f_{7,2,3}=-13, ...". Rows without f follow, with status and note.
std::string render_f_grid(std::span<const FRecord> rows);

/// Renders a saved file: CheckRecord JSONL gives summarize_records, an f-table
/// (CSV with p,m,r,f columns or f-table JSONL) gives render_f_grid. Blank input
/// gives "". Throws std::invalid_argument on malformed input.
std::string render_report(std::string_view text);

}  // namespace qcong
