#include "qcong/suite.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcong/finvariant.hpp"
#include "qcong/identities.hpp"
#include "qcong/ring.hpp"
#include "qcong/runner.hpp"
#include "qcong/xseries.hpp"

namespace qcong {

SuiteLevel parse_level(std::string_view name) {
  if (name == "quick") return SuiteLevel::quick;
  if (name == "full") return SuiteLevel::full;
  throw std::invalid_argument("unknown level '" + std::string(name) + "'");
}

namespace {

constexpr std::size_t kMaxListed = 5;

std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string record_line(const CheckRecord& r) {
  std::string out = std::string(to_string(r.status)) + " " + r.check_id + " p=" + std::to_string(r.params.p);
  if (r.params.m) out += " m=" + std::to_string(*r.params.m);
  if (r.params.r) out += " r=" + std::to_string(*r.params.r);
  for (const auto& [k, v] : r.params.extra) out += " " + k + "=" + v;
  if (r.witness) out += "; witness " + witness_text(r);
  if (!r.note.empty()) out += "; " + r.note;
  return out;
}

/// Folds check records into a criterion: no fail or error, and every id
/// passes somewhere (so a sweep that is entirely inapplicable does not count).
void fold(CriterionResult& c, const std::vector<CheckRecord>& records, std::span<const std::string> ids) {
  std::map<Status, long> counts;
  std::set<std::string> passed_ids;
  for (const auto& r : records) {
    ++counts[r.status];
    if (r.status == Status::pass) passed_ids.insert(r.check_id);
    if ((r.status == Status::fail || r.status == Status::error) && c.failures.size() < kMaxListed) {
      c.failures.push_back(record_line(r));
    }
  }
  bool all_ids = true;
  for (const auto& id : ids) {
    if (!passed_ids.contains(id)) {
      all_ids = false;
      if (c.failures.size() < kMaxListed) c.failures.push_back("no passing record for " + id);
    }
  }
  c.passed = counts[Status::fail] == 0 && counts[Status::error] == 0 && all_ids;
  std::ostringstream d;
  d << records.size() << " records over " << ids.size() << " checks: " << counts[Status::pass] << " pass, "
    << counts[Status::inapplicable] << " inapplicable, " << counts[Status::fail] << " fail, "
    << counts[Status::error] << " error";
  c.detail = d.str();
}

std::vector<CheckRecord> sweep(const std::vector<std::string>& ids, const SweepConfig& cfg, unsigned jobs) {
  return run_checks(build_tasks(ids, cfg), jobs);
}

CriterionResult f_table(unsigned jobs) {
  CriterionResult c{1, "f-table reproduction", false, false, {}, {}};
  const auto table = published_f_table();
  std::vector<std::function<FRecord()>> work;
  for (const auto& e : table) work.push_back([e] { return find_f(e.p, e.m, e.r); });
  const auto rows = run_parallel(work, jobs);
  const auto bad = table_mismatches(rows, table);
  for (std::size_t i = 0; i < bad.size() && c.failures.size() < kMaxListed; ++i) {
    const auto& e = bad[i];
    std::string got = "none";
    for (const auto& row : rows) {
      if (row.p == e.p && row.m == e.m && row.r == e.r) {
        got = row.f ? std::to_string(*row.f) : std::string(to_string(row.status));
      }
    }
    c.failures.push_back("f_{" + std::to_string(e.p) + "," + std::to_string(e.m) + "," + std::to_string(e.r) +
                         "} expected " + std::to_string(e.f) + ", got " + got);
  }
  c.passed = bad.empty();
  c.detail = std::to_string(table.size() - bad.size()) + "/" + std::to_string(table.size()) +
             " published values reproduced exactly";
  return c;
}

CriterionResult proven_q(SuiteLevel level, unsigned jobs) {
  CriterionResult c{2, "proven q-congruences", false, false, {}, {}};
  SweepConfig cfg;
  if (level == SuiteLevel::quick) {
    cfg.p = {3, 5, 7};
    cfg.m = range(1, 4);
  }
  const std::vector<std::string> ids{"sign-identities",
                                     "q-tauraso",
                                     "q-rv16",
                                     "q-rv16-pochx",
                                     "q-rv16-dual",
                                     "q-half-legendre-symmetry",
                                     "q-rv16-alt",
                                     "q-beukers-vanishing",
                                     "q-general-pochx",
                                     "q-rv-mod-p",
                                     "q-general-square-expansion",
                                     "q-general-legendre-symmetry",
                                     "q-legendre-specializations"};
  fold(c, sweep(ids, cfg, jobs), ids);
  return c;
}

CriterionResult identities(SuiteLevel level, unsigned jobs) {
  CriterionResult c{3, "exact identities", false, false, {}, {}};
  const bool quick = level == SuiteLevel::quick;
  std::vector<CheckRecord> records;
  std::vector<std::string> ids;
  auto add = [&](const std::string& id, SweepConfig cfg) {
    ids.push_back(id);
    const std::vector<std::string> one{id};
    auto part = sweep(one, cfg, jobs);
    records.insert(records.end(), part.begin(), part.end());
  };
  auto capped = [&](long full_cap, long quick_cap) {
    SweepConfig cfg;
    cfg.cap_n = quick ? quick_cap : full_cap;
    return cfg;
  };
  add("identity-legendre-expansions", capped(12, 6));
  add("identity-q-binomial", capped(16, 8));
  add("identity-chu-vandermonde", capped(10, 6));
  add("identity-alternating-legendre", capped(10, 6));
  add("identity-terminating-gauss", capped(10, 6));
  add("identity-shifted-legendre-symmetry", capped(12, 6));
  SweepConfig half;
  half.p = quick ? std::vector<long>{3, 5, 7} : std::vector<long>{3, 5, 7, 11, 13};
  add("identity-half-pochhammer", half);
  SweepConfig chain;
  chain.p = quick ? std::vector<long>{3, 5, 7} : std::vector<long>{3, 5, 7, 11};
  chain.m = range(1, quick ? 4 : 6);
  add("identity-fractional-binomial-chain", chain);
  fold(c, records, ids);
  c.detail += "; terminating q-Gauss q^k form checked with prefactor q^((n+j+1)(n-j)/2)";
  return c;
}

CriterionResult conjectures(SuiteLevel level, unsigned jobs) {
  CriterionResult c{4, "conjecture evidence", false, true, {}, {}};
  const bool quick = level == SuiteLevel::quick;
  std::vector<CheckRecord> records;
  auto add = [&](const std::string& id, const SweepConfig& cfg) {
    const std::vector<std::string> one{id};
    auto part = sweep(one, cfg, jobs);
    records.insert(records.end(), part.begin(), part.end());
  };
  SweepConfig rv;
  rv.p = quick ? std::vector<long>{5, 7} : std::vector<long>{5, 7, 11, 13};
  add("conj-q-rv-p2", rv);
  add("conj-q-rv-dual-p2", rv);
  SweepConfig closed;
  closed.p = quick ? std::vector<long>{3, 5, 7} : std::vector<long>{3, 5, 7, 11, 13};
  closed.m = range(1, quick ? 4 : 8);
  add("conj-f-closed-form", closed);
  SweepConfig sym;
  sym.p = quick ? std::vector<long>{3, 5, 7} : std::vector<long>{3, 5, 7, 11};
  sym.m = range(1, quick ? 4 : 6);
  add("conj-q-legendre-symmetry-p2", sym);
  const std::vector<std::string> ids{"conj-q-rv-p2", "conj-q-rv-dual-p2", "conj-f-closed-form",
                                     "conj-q-legendre-symmetry-p2"};
  fold(c, records, ids);
  return c;
}

CriterionResult classical(SuiteLevel level, unsigned jobs) {
  CriterionResult c{5, "classical congruences", false, false, {}, {}};
  const bool quick = level == SuiteLevel::quick;
  std::vector<CheckRecord> records;
  auto add = [&](const std::string& id, const SweepConfig& cfg) {
    const std::vector<std::string> one{id};
    auto part = sweep(one, cfg, jobs);
    records.insert(records.end(), part.begin(), part.end());
  };
  SweepConfig wide;
  wide.p = range(5, quick ? 60 : 200);
  add("classical-rv", wide);
  SweepConfig narrow;
  narrow.p = range(3, quick ? 23 : 50);
  add("classical-tauraso", narrow);
  SweepConfig sun = narrow;
  sun.m = range(1, quick ? 4 : 6);
  add("classical-sun-legendre", sun);
  SweepConfig mod4;
  mod4.p = range(3, quick ? 60 : 200);
  add("classical-32k", mod4);
  add("classical-van-hamme", mod4);
  add("q-to-1-limit", SweepConfig{});
  const std::vector<std::string> ids{"classical-rv", "classical-tauraso", "classical-sun-legendre",
                                     "classical-32k", "classical-van-hamme", "q-to-1-limit"};
  fold(c, records, ids);
  return c;
}

CriterionResult oracles(SuiteLevel level, unsigned jobs) {
  CriterionResult c{6, "oracle equivalences", false, false, {}, {}};
  // Each work item returns an empty string on agreement, else a description.
  std::vector<std::function<std::string()>> work;
  long f_pairs = 0, term_cases = 0, power_cases = 0;
  for (const auto& e : published_f_table()) {
    ++f_pairs;
    work.push_back([e]() -> std::string {
      const FRecord direct = find_f(e.p, e.m, e.r);
      const FRecord brute = find_f_brute(e.p, e.m, e.r, default_brute_bound(e.p));
      if (direct.status == FStatus::pass && brute.status == FStatus::pass && direct.f == brute.f) return {};
      return "find_f and brute scan disagree at (" + std::to_string(e.p) + "," + std::to_string(e.m) + "," +
             std::to_string(e.r) + "): " + std::string(to_string(direct.status)) + " vs " +
             std::string(to_string(brute.status)) + (brute.note.empty() ? "" : " (" + brute.note + ")");
    });
  }
  const long m_max = level == SuiteLevel::quick ? 4 : 6;
  for (int p : {3, 5, 7}) {
    for (int power : {1, 2}) {
      for (long m = 1; m <= m_max; ++m) {
        if (m % p == 0) continue;
        for (long r = 1; r <= 2 * m; ++r) {
          ++term_cases;
          work.push_back([p, power, m, r]() -> std::string {
            const auto ctx = RingCtx::create(p, power);
            const auto terms = general_terms(ctx, m, r, p - 1);
            for (long k = 0; k < p; ++k) {
              const RingElem den = pochhammer(ctx, m, m, k);
              const RingElem naive = pochhammer(ctx, r, m, k) * pochhammer(ctx, m - r, m, k) * inv(den * den);
              if (terms[static_cast<std::size_t>(k)] != naive) {
                return "incremental term differs from product form at p=" + std::to_string(p) + " [p]^" +
                       std::to_string(power) + " m=" + std::to_string(m) + " r=" + std::to_string(r) +
                       " k=" + std::to_string(k);
              }
            }
            return {};
          });
        }
      }
    }
    ++power_cases;
    work.push_back([p]() -> std::string {
      const auto ctx = RingCtx::create(p, 2);
      for (long f = -p * p; f <= p * p; ++f) {
        const auto s = solve_q_power(qpow(ctx, f));
        if (s.exponent != f || s.mod_p_only) {
          return "solve_q_power(q^" + std::to_string(f) + ") gave " + std::to_string(s.exponent) +
                 " modulo [" + std::to_string(p) + "]^2";
        }
      }
      return {};
    });
  }
  long bad = 0;
  for (const auto& msg : run_parallel(work, jobs)) {
    if (msg.empty()) continue;
    ++bad;
    if (c.failures.size() < kMaxListed) c.failures.push_back(msg);
  }
  c.passed = bad == 0;
  c.detail = std::to_string(f_pairs) + " direct/brute pairs, " + std::to_string(term_cases) +
             " incremental/product term sweeps, " + std::to_string(power_cases) + " solve/qpow round trips";
  return c;
}

}  // namespace

std::vector<CriterionResult> run_suite(SuiteLevel level, unsigned jobs) {
  std::vector<CriterionResult> out;
  out.push_back(f_table(jobs));
  out.push_back(proven_q(level, jobs));
  out.push_back(identities(level, jobs));
  out.push_back(conjectures(level, jobs));
  out.push_back(classical(level, jobs));
  out.push_back(oracles(level, jobs));
  return out;
}

std::string render_criterion(const CriterionResult& c) {
  std::string out = "criterion " + std::to_string(c.number) + " " + c.name + ": ";
  if (c.conjectural) {
    out += c.passed ? "PASS (conjectural, reported only)" : "FAIL (conjectural, reported only)";
  } else {
    out += c.passed ? "PASS" : "FAIL";
  }
  out += " -- " + c.detail + "\n";
  for (const auto& f : c.failures) out += "    " + f + "\n";
  return out;
}

int suite_exit_code(std::span<const CriterionResult> results) {
  for (const auto& c : results) {
    if (!c.conjectural && !c.passed) return 1;
  }
  return 0;
}

}  // namespace qcong
