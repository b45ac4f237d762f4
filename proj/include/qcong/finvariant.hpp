#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/record.hpp"

namespace qcong {

// The exponent f with
//   sum_k term_k x^k = sigma q^f sum_k term_k q^(mk) (x;q^m)_k   (mod [p]^2),
// term_k = (q^r;q^m)_k (q^(m-r);q^m)_k / (q^m;q^m)_k^2, sigma = (-1)^<-r/m>_p.

enum class FMethod { direct, brute };
enum class FStatus { pass, fail, not_a_power, inapplicable };

std::string_view to_string(FMethod m);
std::string_view to_string(FStatus s);

struct FRecord {
  long p = 0;
  long m = 0;
  long r = 0;
  std::optional<long> f;  // present iff status == pass
  FMethod method = FMethod::direct;
  FStatus status = FStatus::fail;
  /// Modulo [p] only: f is a residue class mod p.
  bool check_mod_p_only = false;
  std::string note;
};

/// Candidate from the lowest x-coefficient whose right-hand value is a unit
/// (normally x^0), then verified against every coefficient. modulus_power 1
/// gives the residue of f modulo p.
FRecord find_f(long p, long m, long r, int modulus_power = 2);

/// Default scan bound for find_f_brute: p^3 (some published |f| exceed p^2).
long default_brute_bound(long p);

/// Scans f in [-bound, bound] against the full congruence; pass only when
/// exactly one f matches.
FRecord find_f_brute(long p, long m, long r, long bound);

/// f_{p,m,m+r} = -f_{p,m,r} if p | r, else f_{p,m,r} - r, along
/// r_start, r_start + m, ..., (count terms).
CheckRecord verify_f_recurrence(long p, long m, long r_start, long count);

/// f = r(m-r)(1-p^2)/(2m) when r < m and p = +-1 (mod m).
CheckRecord check_conj_f_closed_form(long p, long m, long r);

struct PublishedF {
  long p, m, r, f;
};

/// The 31 published values.
std::span<const PublishedF> published_f_table();

/// CSV with header p,m,r,f,method,status; f empty when absent.
std::string f_table_csv(std::span<const FRecord> rows);
/// One JSON object per line.
std::string f_table_jsonl(std::span<const FRecord> rows);
/// Reads p,m,r,f columns from CSV text (header required, extra columns ignored).
/// Throws std::invalid_argument on malformed input.
std::vector<PublishedF> parse_expected_csv(std::string_view text);

/// Rows of `expected` that `rows` fails to reproduce (missing, wrong f, or not pass).
std::vector<PublishedF> table_mismatches(std::span<const FRecord> rows, std::span<const PublishedF> expected);

}  // namespace qcong
