#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qcong/qpoly.hpp"

namespace qcong {

enum class Status { pass, fail, inapplicable, error };

std::string_view to_string(Status s);
/// Throws std::invalid_argument on an unknown name.
Status parse_status(std::string_view name);

/// First mismatch found by a check: which sub-congruence, which power of x,
/// and the canonical difference of the two sides.
struct Witness {
  std::string label;
  std::size_t index = 0;
  QPoly difference;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckParams {
  long p = 0;
  std::optional<long> m;
  std::optional<long> r;
  int modulus_power = 1;
  std::map<std::string, std::string> extra;

  friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

struct CheckRecord {
  std::string check_id;
  CheckParams params;
  Status status = Status::pass;
  bool conjectural = false;
  std::optional<Witness> witness;
  std::string note;  // reason for inapplicable / error
  std::chrono::nanoseconds elapsed{0};
};

/// Sort key: (check_id, p, m, r, extra). Records with equal keys keep their
/// relative order under std::stable_sort.
bool record_less(const CheckRecord& a, const CheckRecord& b);

/// Sparse "exponent -> coefficient" map, coefficients as lowest-terms strings.
std::map<long, std::string> sparse_terms(const QPoly& a);

/// One JSON object on one line. elapsed is written only when with_timing.
std::string to_json_line(const CheckRecord& rec, bool with_timing);
/// Throws std::invalid_argument on malformed input.
CheckRecord parse_json_line(std::string_view line);

}  // namespace qcong
