#include "qcong/runner.hpp"

#include <charconv>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcong/arith.hpp"
#include "qcong/checks.hpp"
#include "qcong/classical.hpp"
#include "qcong/finvariant.hpp"
#include "qcong/identities.hpp"

#include <json.hpp>

namespace qcong {

namespace {

long parse_long(std::string_view s, std::string_view whole) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad integer list '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::vector<long> parse_int_list(std::string_view text) {
  std::vector<long> out;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (item.empty()) throw std::invalid_argument("bad integer list '" + std::string(text) + "'");
    int parity = -1;  // -1 any, 0 even, 1 odd
    if (auto colon = item.find(':'); colon != std::string_view::npos) {
      const auto filter = item.substr(colon + 1);
      if (filter == "odd") {
        parity = 1;
      } else if (filter == "even") {
        parity = 0;
      } else {
        throw std::invalid_argument("unknown filter ':" + std::string(filter) + "'");
      }
      item = item.substr(0, colon);
    }
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const long lo = parse_long(item.substr(0, dots), text);
      const long hi = parse_long(item.substr(dots + 2), text);
      if (lo > hi) throw std::invalid_argument("empty range '" + std::string(item) + "'");
      for (long v = lo; v <= hi; ++v) {
        if (parity < 0 || floor_mod(v, 2) == parity) out.push_back(v);
      }
    } else {
      const long v = parse_long(item, text);
      if (parity < 0 || floor_mod(v, 2) == parity) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("integer list '" + std::string(text) + "' selects nothing");
  return out;
}

std::vector<long> odd_primes_in(std::span<const long> values) {
  std::set<long> keep;
  for (long v : values) {
    if (v >= 3 && is_prime(v)) keep.insert(v);
  }
  return {keep.begin(), keep.end()};
}

namespace {

using K = CheckKind;

const std::vector<CheckInfo> kCatalog = {
    {"sign-identities", "(-1)^<-1/d>_p against (-3/p), (-2/p), (-1/p)", K::q_congruence, false, true, 1, false, 0},
    {"q-tauraso", "Tauraso-type x-polynomial congruence, base q^2", K::q_congruence, false, true, 2, false, 0},
    {"q-rv16", "x = 1 sum against (-1/p) q^((1-p^2)/4)", K::q_congruence, false, true, 2, false, 0},
    {"q-rv16-pochx", "x-polynomial against the (x;q^2)_k expansion", K::q_congruence, false, true, 2, false, 0},
    {"q-rv16-dual", "x = 0 sum against (-1/p) q^((p^2-1)/4)", K::q_congruence, false, true, 2, false, 0},
    {"q-half-legendre-symmetry", "P_{p-1,2,1}(q,x) against (-1/p) P_{p-1,2,1}(q,-x)", K::q_congruence, false, true, 2,
     false, 0},
    {"q-rv16-alt", "x = -1 form: sum 2q^(2k)/(1+q^(2k)) against (-1/p)", K::q_congruence, false, true, 2, false, 0},
    {"q-beukers-vanishing", "x = 0 form vanishes for p = 3 (mod 4)", K::q_congruence, false, true, 2, false, 0},
    {"q-general-pochx", "general (m, r) x-polynomial, sign and exponent", K::q_congruence, true, true, 1, false, 0},
    {"q-rv-mod-p", "m = 3, 4, 6 sums at x = 1 and x = 0", K::q_congruence, false, true, 1, false, 0},
    {"q-general-square-expansion", "general (m, r) against the squared q-binomial form", K::q_congruence, true, true, 1,
     false, 0},
    {"q-general-legendre-symmetry", "P_{p-1,m,r}(q,x) against sigma P_{p-1,m,r}(q,-x)", K::q_congruence, true, true, 1,
     false, 0},
    {"q-legendre-specializations", "x = 0 vanishing and x = -1 values for m = 3, 4, 6", K::q_congruence, false, true,
     1, false, 0},
    {"conj-q-rv-p2", "m = 2, 3, 4, 6 sums at x = 1 modulo [p]^2", K::q_congruence, false, true, 2, true, 0},
    {"conj-q-rv-dual-p2", "m = 3, 4, 6 sums at x = 0 modulo [p]^2", K::q_congruence, false, true, 2, true, 0},
    {"conj-q-legendre-symmetry-p2", "P_{p-1,m,r} symmetry modulo [p]^2", K::q_congruence, true, true, 2, true, 0},
    {"conj-f-closed-form", "f = r(m-r)(1-p^2)/(2m) when p = +-1 (mod m)", K::f_invariant, true, true, 2, true, 0},
    {"f-recurrence", "f_{p,m,m+r} from f_{p,m,r}", K::f_invariant, true, true, 2, true, 0},
    {"classical-rv", "four central-binomial sums modulo p^2", K::classical, false, true, 2, false, 0},
    {"classical-tauraso", "Tauraso's congruence at integer x", K::classical, false, true, 2, false, 0},
    {"classical-sun-legendre", "generalized Legendre symmetry, a = -r/m, integer x", K::classical, true, true, 2,
     false, 0},
    {"classical-32k", "sum C(2k,k)^2/32^k = 0 for p = 3 (mod 4)", K::classical, false, true, 2, false, 0},
    {"classical-van-hamme", "sum C(2k,k)^3/64^k = 0 for p = 3 (mod 4)", K::classical, false, true, 2, false, 0},
    {"q-to-1-limit", "q = 1 limit of the base-q^2 summand", K::classical, false, false, 0, false, 10},
    {"identity-legendre-expansions", "three little q-Legendre expansions agree", K::identity, false, false, 0, false,
     12},
    {"identity-q-binomial", "q-binomial theorem", K::identity, false, false, 0, false, 16},
    {"identity-chu-vandermonde", "q-Chu-Vandermonde, all m <= n", K::identity, false, false, 0, false, 10},
    {"identity-half-pochhammer", "(q;q^2)_k^2/(q^2;q^2)_k^2 modulo [p]^2", K::identity, false, true, 2, false, 0},
    {"identity-alternating-legendre", "alternating Legendre sum closed form, all j", K::identity, false, false, 0,
     false, 10},
    {"identity-terminating-gauss", "terminating q-Gauss evaluations, all j", K::identity, false, false, 0, false, 10},
    {"identity-shifted-legendre-symmetry", "F_n(x,q) = (-1)^n F_n(-x,q)", K::identity, false, false, 0, false, 12},
    {"identity-fractional-binomial-chain", "summand as fractional q-binomials modulo [p], all k", K::identity, true,
     true, 1, false, 0},
};

CheckRecord identity_record(const std::string& id, long p, int power, std::map<std::string, std::string> extra,
                            const std::function<bool()>& holds) {
  CheckRecord rec;
  rec.check_id = id;
  rec.params.p = p;
  rec.params.modulus_power = power;
  rec.params.extra = std::move(extra);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!holds()) {
      rec.status = Status::fail;
      rec.witness = Witness{"identity", 0, QPoly()};
    }
  } catch (const std::domain_error& e) {
    rec.status = Status::inapplicable;
    rec.note = e.what();
  } catch (const std::exception& e) {
    rec.status = Status::error;
    rec.note = e.what();
  }
  rec.elapsed = std::chrono::steady_clock::now() - start;
  return rec;
}

std::map<std::string, std::string> n_extra(long n) { return {{"n", std::to_string(n)}}; }

using Task = std::function<CheckRecord()>;

void add_identity_tasks(const CheckInfo& info, long cap, std::vector<Task>& out) {
  const std::string id = info.id;
  for (long n = 0; n <= cap; ++n) {
    std::function<bool()> body;
    if (id == "identity-legendre-expansions") {
      body = [n] {
        const auto base = legendre_expansion_binomial(n);
        return legendre_expansion_shifted(n) == base && legendre_expansion_squared(n) == base;
      };
    } else if (id == "identity-q-binomial") {
      body = [n] { return verify_q_binomial_theorem(n); };
    } else if (id == "identity-chu-vandermonde") {
      body = [n] {
        for (long m = 0; m <= n; ++m) {
          if (!verify_q_chu_vandermonde(m, n)) return false;
        }
        return true;
      };
    } else if (id == "identity-alternating-legendre" || id == "identity-terminating-gauss") {
      if (n == 0 && id == "identity-alternating-legendre") continue;
      const bool gauss = id == "identity-terminating-gauss";
      body = [n, gauss] {
        for (long j = 0; j <= n; ++j) {
          if (!(gauss ? verify_terminating_gauss(n, j) : verify_alternating_legendre_sum(n, j))) return false;
        }
        return true;
      };
    } else if (id == "identity-shifted-legendre-symmetry") {
      if (n == 0) continue;
      body = [n] { return verify_shifted_legendre_symmetry(n); };
    } else if (id == "q-to-1-limit") {
      // Single record at the cap.
      if (n != cap) continue;
      out.push_back([n] { return check_q_to_1_limit(n); });
      continue;
    }
    out.push_back([id, n, body] { return identity_record(id, 0, 0, n_extra(n), body); });
  }
}

std::vector<long> r_values(const SweepConfig& cfg, long m) {
  if (cfg.r) return *cfg.r;
  std::vector<long> out;
  for (long r = 1; r <= 2 * m; ++r) out.push_back(r);
  return out;
}

void add_tasks(const CheckInfo& info, const SweepConfig& cfg, std::vector<Task>& out) {
  const std::string& id = info.id;
  if (!info.uses_p) {
    add_identity_tasks(info, cfg.cap_n.value_or(info.default_cap), out);
    return;
  }
  const auto primes = odd_primes_in(cfg.p);
  for (long p : primes) {
    if (info.uses_mr) {
      for (long m : cfg.m) {
        for (long r : r_values(cfg, m)) {
          if (id == "q-general-pochx") out.push_back([=] { return check_q_general_pochx(p, m, r); });
          if (id == "q-general-square-expansion") {
            out.push_back([=] { return check_q_general_square_expansion(p, m, r); });
          }
          if (id == "q-general-legendre-symmetry") {
            out.push_back([=] { return check_q_general_legendre_symmetry(p, m, r); });
          }
          if (id == "conj-q-legendre-symmetry-p2") {
            out.push_back([=] { return check_conj_q_legendre_symmetry_p2(p, m, r); });
          }
          if (id == "conj-f-closed-form") out.push_back([=] { return check_conj_f_closed_form(p, m, r); });
          if (id == "f-recurrence") out.push_back([=] { return verify_f_recurrence(p, m, r, 2); });
          if (id == "classical-sun-legendre") {
            for (long x : cfg.x.value_or(std::vector<long>{-3, -2, -1, 0, 1, 2, 3})) {
              out.push_back([=] { return check_sun_legendre(p, m, r, x); });
            }
          }
          if (id == "identity-fractional-binomial-chain") {
            out.push_back([=] {
              CheckRecord rec = identity_record(id, p, 1, {}, [=] {
                for (long k = 0; k < p; ++k) {
                  if (!verify_fractional_binomial_chain(p, m, r, k)) return false;
                }
                return true;
              });
              rec.params.m = m;
              rec.params.r = r;
              return rec;
            });
          }
        }
      }
      continue;
    }
    if (id == "sign-identities") out.push_back([=] { return verify_sign_identities(p); });
    if (id == "q-tauraso") out.push_back([=] { return check_q_tauraso(p); });
    if (id == "q-rv16") out.push_back([=] { return check_q_rv16(p); });
    if (id == "q-rv16-pochx") out.push_back([=] { return check_q_rv16_pochx(p); });
    if (id == "q-rv16-dual") out.push_back([=] { return check_q_rv16_dual(p); });
    if (id == "q-half-legendre-symmetry") out.push_back([=] { return check_q_half_legendre_symmetry(p); });
    if (id == "q-rv16-alt") out.push_back([=] { return check_q_rv16_alt(p); });
    if (id == "q-beukers-vanishing") out.push_back([=] { return check_q_beukers_vanishing(p); });
    if (id == "q-rv-mod-p") out.push_back([=] { return check_q_rv_mod_p(p); });
    if (id == "q-legendre-specializations") out.push_back([=] { return check_q_legendre_specializations(p); });
    if (id == "conj-q-rv-p2") out.push_back([=] { return check_conj_q_rv_p2(p); });
    if (id == "conj-q-rv-dual-p2") out.push_back([=] { return check_conj_q_rv_dual_p2(p); });
    if (id == "classical-rv") {
      for (int base : {16, 27, 64, 432}) out.push_back([=] { return check_rv(p, base); });
    }
    if (id == "classical-tauraso") {
      for (long x : cfg.x.value_or(std::vector<long>{-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5})) {
        out.push_back([=] { return check_tauraso(p, x); });
      }
    }
    if (id == "classical-32k") out.push_back([=] { return check_32k(p); });
    if (id == "classical-van-hamme") out.push_back([=] { return check_van_hamme(p); });
    if (id == "identity-half-pochhammer") {
      out.push_back([=] { return identity_record(id, p, 2, {}, [=] { return verify_half_pochhammer_ratio(p); }); });
    }
  }
}

}  // namespace

std::span<const CheckInfo> check_catalog() { return kCatalog; }

const CheckInfo* find_check(std::string_view id) {
  for (const auto& c : kCatalog) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::function<CheckRecord()>> build_tasks(std::span<const std::string> ids, const SweepConfig& cfg) {
  std::vector<const CheckInfo*> selected;
  auto select = [&](const CheckInfo* c) {
    if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
  };
  for (const auto& id : ids) {
    if (id == "all" || id == "proven" || id == "conjectural") {
      for (const auto& c : kCatalog) {
        if (id == "all" || (id == "proven") != c.conjectural) select(&c);
      }
    } else if (const CheckInfo* c = find_check(id)) {
      select(c);
    } else {
      throw std::invalid_argument("unknown check id '" + id + "'");
    }
  }
  std::vector<Task> out;
  for (const CheckInfo* c : selected) {
    if (cfg.modulus_power && c->modulus_power != *cfg.modulus_power) continue;
    add_tasks(*c, cfg, out);
  }
  return out;
}

std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& tasks, unsigned jobs) {
  auto records = run_parallel(tasks, jobs);
  std::stable_sort(records.begin(), records.end(), record_less);
  return records;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "jsonl" || name == "json-lines") return OutputFormat::jsonl;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

bool is_proven_failure(const CheckRecord& rec) {
  return !rec.conjectural && (rec.status == Status::fail || rec.status == Status::error);
}

std::string witness_text(const CheckRecord& rec) {
  if (!rec.witness) return {};
  const auto& w = *rec.witness;
  return w.label + " at x^" + std::to_string(w.index) + ": difference " + w.difference.to_string();
}

namespace {

std::string params_text(const CheckRecord& rec) {
  std::string out;
  if (rec.params.p) out += "p=" + std::to_string(rec.params.p);
  if (rec.params.m) out += " m=" + std::to_string(*rec.params.m);
  if (rec.params.r) out += " r=" + std::to_string(*rec.params.r);
  for (const auto& [k, v] : rec.params.extra) out += " " + k + "=" + v;
  if (!out.empty() && out.front() == ' ') out.erase(out.begin());
  return out;
}

std::string sparse_text(const QPoly& a) {
  std::string out;
  for (const auto& [e, c] : sparse_terms(a)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e) + ":" + c;
  }
  return out;
}

}  // namespace

std::string render_records(std::span<const CheckRecord> records, OutputFormat format, bool with_timing) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::jsonl:
      for (const auto& r : records) out << to_json_line(r, with_timing) << '\n';
      break;
    case OutputFormat::csv:
      out << "check_id,p,m,r,modulus_power,status,conjectural,witness_label,witness_index,witness_difference\n";
      for (const auto& r : records) {
        out << r.check_id << ',' << r.params.p << ',';
        if (r.params.m) out << *r.params.m;
        out << ',';
        if (r.params.r) out << *r.params.r;
        out << ',' << r.params.modulus_power << ',' << to_string(r.status) << ',' << (r.conjectural ? 1 : 0) << ',';
        if (r.witness) out << r.witness->label << ',' << r.witness->index << ',' << sparse_text(r.witness->difference);
        else out << ",,";
        out << '\n';
      }
      break;
    case OutputFormat::text:
      for (const auto& r : records) {
        out << to_string(r.status) << ' ' << r.check_id;
        const std::string pt = params_text(r);
        if (!pt.empty()) out << ' ' << pt;
        if (r.conjectural) out << " (conjectural)";
        if (with_timing) out << " [" << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms]";
        out << '\n';
        if (r.witness) out << "  witness: " << witness_text(r) << '\n';
        if (!r.note.empty() && r.status != Status::pass) out << "  note: " << r.note << '\n';
      }
      break;
  }
  return out.str();
}

std::string summarize_records(std::span<const CheckRecord> records) {
  std::map<std::string, std::map<Status, long>> counts;
  std::map<std::string, bool> conj;
  for (const auto& r : records) {
    ++counts[r.check_id][r.status];
    conj[r.check_id] = r.conjectural;
  }
  std::ostringstream out;
  if (records.empty()) return {};
  out << "check_id pass fail inapplicable error\n";
  for (const auto& [id, c] : counts) {
    auto get = [&](Status s) {
      auto it = c.find(s);
      return it == c.end() ? 0L : it->second;
    };
    out << id << (conj[id] ? " (conjectural)" : "") << ' ' << get(Status::pass) << ' ' << get(Status::fail) << ' '
        << get(Status::inapplicable) << ' ' << get(Status::error) << '\n';
  }
  bool header = false;
  for (const auto& r : records) {
    if (r.status != Status::fail && r.status != Status::error) continue;
    if (!header) {
      out << "\nfailures:\n";
      header = true;
    }
    out << "  " << to_string(r.status) << ' ' << r.check_id << ' ' << params_text(r)
        << (r.conjectural ? " (conjectural)" : "") << '\n';
    if (r.witness) out << "    witness: " << witness_text(r) << '\n';
    if (!r.note.empty()) out << "    note: " << r.note << '\n';
  }
  return out.str();
}

std::string render_f_grid(std::span<const FRecord> rows) {
  constexpr std::size_t kPerLine = 7;
  std::vector<std::pair<long, long>> groups;
  std::map<std::pair<long, long>, std::vector<std::string>> cells;
  std::vector<const FRecord*> missing;
  for (const auto& row : rows) {
    if (!row.f) {
      missing.push_back(&row);
      continue;
    }
    const std::pair<long, long> key{row.p, row.m};
    if (!cells.contains(key)) groups.push_back(key);
    cells[key].push_back("f_{" + std::to_string(row.p) + "," + std::to_string(row.m) + "," + std::to_string(row.r) +
                         "}=" + std::to_string(*row.f));
  }
  std::string out;
  for (const auto& key : groups) {
    const auto& items = cells[key];
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += items[i];
      const bool last = i + 1 == items.size();
      if (last || (i + 1) % kPerLine == 0) {
        out += last ? "\n" : ",\n";
      } else {
        out += ", ";
      }
    }
  }
  if (!missing.empty()) {
    out += "\nwithout f:\n";
    for (const FRecord* row : missing) {
      out += "  f_{" + std::to_string(row->p) + "," + std::to_string(row->m) + "," + std::to_string(row->r) + "} " +
             std::string(to_string(row->status));
      if (!row->note.empty()) out += ": " + row->note;
      out += '\n';
    }
  }
  return out;
}

namespace {

FStatus parse_fstatus(std::string_view s) {
  for (FStatus v : {FStatus::pass, FStatus::fail, FStatus::not_a_power, FStatus::inapplicable}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown f status '" + std::string(s) + "'");
}

FMethod parse_fmethod(std::string_view s) {
  for (FMethod v : {FMethod::direct, FMethod::brute}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown f method '" + std::string(s) + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

long cell_long(const std::string& cell) { return parse_long(cell, cell); }

std::vector<FRecord> parse_f_csv(const std::vector<std::string>& lines) {
  const auto header = split_csv(lines.front());
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* need : {"p", "m", "r", "f"}) {
    if (!col.contains(need)) throw std::invalid_argument(std::string("f-table CSV lacks column '") + need + "'");
  }
  std::vector<FRecord> rows;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto cells = split_csv(lines[n]);
    if (cells.size() != header.size()) throw std::invalid_argument("ragged CSV row " + std::to_string(n + 1));
    FRecord row;
    row.p = cell_long(cells[col["p"]]);
    row.m = cell_long(cells[col["m"]]);
    row.r = cell_long(cells[col["r"]]);
    if (!cells[col["f"]].empty()) row.f = cell_long(cells[col["f"]]);
    if (col.contains("method")) row.method = parse_fmethod(cells[col["method"]]);
    if (col.contains("status")) {
      row.status = parse_fstatus(cells[col["status"]]);
    } else {
      row.status = row.f ? FStatus::pass : FStatus::not_a_power;
    }
    rows.push_back(row);
  }
  return rows;
}

FRecord parse_f_json(const nlohmann::json& j) {
  FRecord row;
  row.p = j.at("p").get<long>();
  row.m = j.at("m").get<long>();
  row.r = j.at("r").get<long>();
  if (!j.at("f").is_null()) row.f = j.at("f").get<long>();
  row.method = parse_fmethod(j.value("method", std::string("direct")));
  row.status = parse_fstatus(j.value("status", std::string(row.f ? "pass" : "not_a_power")));
  row.check_mod_p_only = j.value("check_mod_p_only", false);
  row.note = j.value("note", std::string());
  return row;
}

}  // namespace

std::string render_report(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
    }
  }
  if (lines.empty()) return {};
  if (lines.front().front() != '{') return render_f_grid(parse_f_csv(lines));

  nlohmann::json first;
  try {
    first = nlohmann::json::parse(lines.front());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("line 1: " + std::string(e.what()));
  }
  if (first.is_object() && first.contains("check_id")) {
    std::vector<CheckRecord> records;
    for (std::size_t n = 0; n < lines.size(); ++n) {
      try {
        records.push_back(parse_json_line(lines[n]));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(n + 1) + ": " + e.what());
      }
    }
    return summarize_records(records);
  }
  std::vector<FRecord> rows;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    try {
      rows.push_back(parse_f_json(nlohmann::json::parse(lines[n])));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("line " + std::to_string(n + 1) + ": " + e.what());
    }
  }
  return render_f_grid(rows);
}

}  // namespace qcong
