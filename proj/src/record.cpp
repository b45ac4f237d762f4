#include "qcong/record.hpp"

#include <json.hpp>

#include <stdexcept>
#include <tuple>

namespace qcong {

using Json = nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inapplicable: return "inapplicable";
    case Status::error: return "error";
  }
  return "error";
}

Status parse_status(std::string_view name) {
  for (Status s : {Status::pass, Status::fail, Status::inapplicable, Status::error}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown status '" + std::string(name) + "'");
}

bool record_less(const CheckRecord& a, const CheckRecord& b) {
  const auto& x = a.params;
  const auto& y = b.params;
  return std::tie(a.check_id, x.p, x.m, x.r, x.modulus_power, x.extra) <
         std::tie(b.check_id, y.p, y.m, y.r, y.modulus_power, y.extra);
}

std::map<long, std::string> sparse_terms(const QPoly& a) {
  std::map<long, std::string> out;
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out.emplace(static_cast<long>(i), to_string(c[i]));
  }
  return out;
}

std::string to_json_line(const CheckRecord& rec, bool with_timing) {
  Json j;
  j["check_id"] = rec.check_id;
  j["p"] = rec.params.p;
  if (rec.params.m) j["m"] = *rec.params.m;
  if (rec.params.r) j["r"] = *rec.params.r;
  j["modulus_power"] = rec.params.modulus_power;
  if (!rec.params.extra.empty()) {
    Json extra = Json::object();
    for (const auto& [k, v] : rec.params.extra) extra[k] = v;
    j["extra"] = extra;
  }
  j["status"] = to_string(rec.status);
  j["conjectural"] = rec.conjectural;
  if (rec.witness) {
    // Keys in increasing exponent order; ordered_json keeps insertion order.
    Json diff = Json::object();
    for (const auto& [e, c] : sparse_terms(rec.witness->difference)) diff[std::to_string(e)] = c;
    j["witness"] = {{"label", rec.witness->label}, {"index", rec.witness->index}, {"difference", diff}};
  }
  if (!rec.note.empty()) j["note"] = rec.note;
  if (with_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(rec.elapsed).count();
  return j.dump();
}

CheckRecord parse_json_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  try {
    CheckRecord rec;
    rec.check_id = j.at("check_id").get<std::string>();
    rec.params.p = j.at("p").get<long>();
    if (j.contains("m")) rec.params.m = j["m"].get<long>();
    if (j.contains("r")) rec.params.r = j["r"].get<long>();
    rec.params.modulus_power = j.value("modulus_power", 1);
    if (j.contains("extra")) {
      for (const auto& [k, v] : j["extra"].items()) rec.params.extra[k] = v.get<std::string>();
    }
    rec.status = parse_status(j.at("status").get<std::string>());
    rec.conjectural = j.value("conjectural", false);
    if (j.contains("witness")) {
      const Json& w = j["witness"];
      Witness wit;
      wit.label = w.value("label", "");
      wit.index = w.value("index", std::size_t{0});
      std::vector<Rational> coeffs;
      for (const auto& [e, c] : w.at("difference").items()) {
        const auto exp = static_cast<std::size_t>(std::stoul(e));
        if (coeffs.size() <= exp) coeffs.resize(exp + 1);
        coeffs[exp] = parse_rational(c.get<std::string>());
      }
      wit.difference = QPoly(std::move(coeffs));
      rec.witness = std::move(wit);
    }
    rec.note = j.value("note", "");
    if (j.contains("elapsed_ms")) {
      rec.elapsed = std::chrono::nanoseconds(static_cast<long long>(j["elapsed_ms"].get<double>() * 1e6));
    }
    return rec;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

}  // namespace qcong
