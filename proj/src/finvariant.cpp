#include "qcong/finvariant.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qcong/arith.hpp"
#include "qcong/ring.hpp"
#include "qcong/xseries.hpp"

namespace qcong {

namespace {

struct Sides {
  XPoly lhs;
  XPoly rhs;  // already multiplied by sigma
};

Sides build_sides(const RingPtr& ctx, long m, long r) {
  const long t = least_nonneg_residue(-r, m, ctx->p());
  return {sum_lhs_general(ctx, m, r), sum_rhs_pochx(ctx, m, r) * ring_constant(ctx, sign_pow(t))};
}

/// Empty when the tuple is admissible.
std::string hypothesis_failure(long p, long m, long r) {
  if (p < 3 || !is_prime(p)) return "p must be an odd prime";
  if (m < 1 || r < 1) return "needs positive m and r";
  if (m % p == 0) return "p divides m";
  if (r % m == 0) return "m divides r";
  return {};
}

FRecord start(long p, long m, long r, FMethod method) {
  FRecord rec;
  rec.p = p;
  rec.m = m;
  rec.r = r;
  rec.method = method;
  return rec;
}

}  // namespace

std::string_view to_string(FMethod m) { return m == FMethod::direct ? "direct" : "brute"; }

std::string_view to_string(FStatus s) {
  switch (s) {
    case FStatus::pass: return "pass";
    case FStatus::fail: return "fail";
    case FStatus::not_a_power: return "not_a_power";
    case FStatus::inapplicable: return "inapplicable";
  }
  return "fail";
}

FRecord find_f(long p, long m, long r, int modulus_power) {
  FRecord rec = start(p, m, r, FMethod::direct);
  if (auto why = hypothesis_failure(p, m, r); !why.empty()) {
    rec.status = FStatus::inapplicable;
    rec.note = why;
    return rec;
  }
  auto ctx = RingCtx::create(static_cast<int>(p), modulus_power);
  const Sides s = build_sides(ctx, m, r);

  // The x^0 coefficient of the right side is normally a unit; otherwise take
  // the first coefficient that is.
  std::optional<std::size_t> pivot;
  for (std::size_t k = 0; k < s.rhs.coeffs().size(); ++k) {
    if (s.rhs.coeffs()[k].is_unit()) {
      pivot = k;
      break;
    }
  }
  if (!pivot) {
    rec.status = FStatus::not_a_power;
    rec.note = "no right-hand coefficient is a unit";
    return rec;
  }
  if (*pivot != 0) rec.note = "x^0 coefficient not a unit; used x^" + std::to_string(*pivot);

  const RingElem u = s.lhs.coeff(*pivot) * inv(s.rhs.coeff(*pivot));
  QPowerSolution sol{};
  try {
    sol = solve_q_power(u);
  } catch (const NotAPowerOfQ& e) {
    rec.status = FStatus::not_a_power;
    rec.note = e.what();
    return rec;
  }
  rec.check_mod_p_only = sol.mod_p_only;
  if (auto d = first_difference(s.lhs, s.rhs * qpow(ctx, sol.exponent))) {
    rec.status = FStatus::fail;
    rec.note = "candidate f=" + std::to_string(sol.exponent) + " fails at x^" + std::to_string(d->index);
    return rec;
  }
  rec.status = FStatus::pass;
  rec.f = sol.exponent;
  return rec;
}

long default_brute_bound(long p) { return p * p * p; }

FRecord find_f_brute(long p, long m, long r, long bound) {
  FRecord rec = start(p, m, r, FMethod::brute);
  if (auto why = hypothesis_failure(p, m, r); !why.empty()) {
    rec.status = FStatus::inapplicable;
    rec.note = why;
    return rec;
  }
  if (bound < p * p) throw std::invalid_argument("brute-force bound must be at least p^2");
  auto ctx = RingCtx::create(static_cast<int>(p), 2);
  const Sides s = build_sides(ctx, m, r);
  const RingElem q = qpow(ctx, 1);
  RingElem power = qpow(ctx, -bound);
  std::vector<long> hits;
  const RingElem lhs0 = s.lhs.coeff(0);
  const RingElem rhs0 = s.rhs.coeff(0);
  for (long f = -bound; f <= bound; ++f, power *= q) {
    // Cheap x^0 filter before the full comparison.
    if (!(lhs0 == rhs0 * power)) continue;
    if (congruent(s.lhs, s.rhs * power)) hits.push_back(f);
  }
  if (hits.size() == 1) {
    rec.status = FStatus::pass;
    rec.f = hits.front();
  } else if (hits.empty()) {
    rec.status = FStatus::not_a_power;
    rec.note = "no f in [-" + std::to_string(bound) + ", " + std::to_string(bound) + "]";
  } else {
    rec.status = FStatus::fail;
    rec.note = std::to_string(hits.size()) + " values of f match";
  }
  return rec;
}

CheckRecord verify_f_recurrence(long p, long m, long r_start, long count) {
  CheckRecord rec;
  rec.check_id = "f-recurrence";
  rec.params.p = p;
  rec.params.m = m;
  rec.params.r = r_start;
  rec.params.modulus_power = 2;
  rec.params.extra["count"] = std::to_string(count);
  rec.conjectural = true;
  const auto begin = std::chrono::steady_clock::now();
  std::optional<long> prev;
  for (long i = 0; i < count; ++i) {
    const long r = r_start + i * m;
    const FRecord fr = find_f(p, m, r);
    if (fr.status == FStatus::inapplicable) {
      rec.status = Status::inapplicable;
      rec.note = "r=" + std::to_string(r) + ": " + fr.note;
      break;
    }
    if (fr.status != FStatus::pass) {
      rec.status = Status::fail;
      rec.note = "r=" + std::to_string(r) + ": " + std::string(to_string(fr.status)) + " " + fr.note;
      break;
    }
    if (prev) {
      const long r_prev = r - m;
      const long expected = (r_prev % p == 0) ? -*prev : *prev - r_prev;
      if (*fr.f != expected) {
        rec.status = Status::fail;
        rec.witness = Witness{"r=" + std::to_string(r), 0, QPoly(*fr.f - expected)};
        break;
      }
    }
    prev = fr.f;
  }
  rec.elapsed = std::chrono::steady_clock::now() - begin;
  return rec;
}

CheckRecord check_conj_f_closed_form(long p, long m, long r) {
  CheckRecord rec;
  rec.check_id = "conj-f-closed-form";
  rec.params.p = p;
  rec.params.m = m;
  rec.params.r = r;
  rec.params.modulus_power = 2;
  rec.conjectural = true;
  const auto begin = std::chrono::steady_clock::now();
  std::string why = hypothesis_failure(p, m, r);
  if (why.empty() && r >= m) why = "needs r < m";
  if (why.empty() && (p - 1) % m != 0 && (p + 1) % m != 0) why = "needs p = +-1 (mod m)";
  if (!why.empty()) {
    rec.status = Status::inapplicable;
    rec.note = why;
  } else {
    const long num = r * (m - r) * (1 - p * p);
    if (num % (2 * m) != 0) {
      rec.status = Status::error;
      rec.note = "r(m-r)(1-p^2)/(2m) is not an integer";
    } else {
      const long closed = num / (2 * m);
      const FRecord fr = find_f(p, m, r);
      rec.params.extra["closed_form"] = std::to_string(closed);
      if (fr.status != FStatus::pass) {
        rec.status = Status::fail;
        rec.note = std::string("f not found: ") + std::string(to_string(fr.status)) + " " + fr.note;
      } else if (*fr.f != closed) {
        rec.status = Status::fail;
        rec.witness = Witness{"f - closed form", 0, QPoly(*fr.f - closed)};
      }
    }
  }
  rec.elapsed = std::chrono::steady_clock::now() - begin;
  return rec;
}

namespace {

constexpr PublishedF kPublished[] = {
    {7, 2, 1, -12},   {7, 2, 3, -13},   {7, 2, 5, -16},  {7, 2, 7, -21},   {7, 2, 9, 21},    {7, 2, 11, 12},
    {7, 2, 13, 1},    {7, 2, 15, -12},  {7, 2, 17, -27}, {7, 2, 19, -44},  {7, 2, 21, -63},  {7, 2, 23, 63},
    {7, 2, 25, 40},   {3, 5, 1, -5},    {3, 5, 2, -3},   {3, 5, 6, -6},    {3, 5, 7, -5},    {3, 5, 8, 3},
    {3, 5, 9, -9},    {7, 5, 1, -29},   {7, 5, 2, -19},  {7, 5, 6, -30},   {7, 5, 7, -21},   {7, 5, 8, -22},
    {7, 5, 9, -33},   {11, 7, 1, -86},  {11, 7, 2, -103}, {11, 7, 3, -51}, {11, 7, 8, -87},  {11, 7, 9, -105},
    {11, 7, 10, -54},
};

}  // namespace

std::span<const PublishedF> published_f_table() { return kPublished; }

std::string f_table_csv(std::span<const FRecord> rows) {
  std::ostringstream out;
  out << "p,m,r,f,method,status\n";
  for (const auto& row : rows) {
    out << row.p << ',' << row.m << ',' << row.r << ',';
    if (row.f) out << *row.f;
    out << ',' << to_string(row.method) << ',' << to_string(row.status) << '\n';
  }
  return out.str();
}

std::string f_table_jsonl(std::span<const FRecord> rows) {
  std::string out;
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["p"] = row.p;
    j["m"] = row.m;
    j["r"] = row.r;
    j["f"] = row.f ? nlohmann::ordered_json(*row.f) : nlohmann::ordered_json(nullptr);
    j["method"] = to_string(row.method);
    j["status"] = to_string(row.status);
    j["check_mod_p_only"] = row.check_mod_p_only;
    if (!row.note.empty()) j["note"] = row.note;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<PublishedF> parse_expected_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
      cells.push_back(cell);
    }
    return cells;
  };
  if (!std::getline(in, line)) throw std::invalid_argument("expected-values file is empty");
  const auto header = split(line);
  auto column = [&](const char* name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::invalid_argument(std::string("missing column '") + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t cp = column("p"), cm = column("m"), cr = column("r"), cf = column("f");
  std::vector<PublishedF> out;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    try {
      out.push_back({std::stol(cells.at(cp)), std::stol(cells.at(cm)), std::stol(cells.at(cr)), std::stol(cells.at(cf))});
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed expected-values row at line " + std::to_string(line_no));
    }
  }
  return out;
}

std::vector<PublishedF> table_mismatches(std::span<const FRecord> rows, std::span<const PublishedF> expected) {
  std::vector<PublishedF> bad;
  for (const auto& e : expected) {
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const FRecord& r) { return r.p == e.p && r.m == e.m && r.r == e.r; });
    if (it == rows.end() || it->status != FStatus::pass || !it->f || *it->f != e.f) bad.push_back(e);
  }
  return bad;
}

}  // namespace qcong
