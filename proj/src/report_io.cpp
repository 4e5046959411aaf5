#include "wlab/report_io.hpp"

#include <ostream>

#include "wlab/error.hpp"

namespace wlab {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(const std::string& s) {
  if (s == "jsonl") return OutputFormat::Jsonl;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "human") return OutputFormat::Human;
  throw Error(ErrorCode::InvalidInput, "unknown format '" + s + "'");
}

namespace {

ordered_json opt_decimal(const std::optional<BigInt>& v) { return v ? ordered_json(to_decimal(*v)) : ordered_json(); }

Status parse_status(const std::string& s) {
  for (auto st : {Status::Holds, Status::Fails, Status::Identity, Status::NotApplicable, Status::Probe}) {
    if (s == to_string(st)) return st;
  }
  throw Error(ErrorCode::InvalidInput, "unknown status '" + s + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* witness_primary(SearchKind k) { return k == SearchKind::Wolstenholme ? "r1_valuation" : "residual_valuation"; }
const char* witness_recheck(SearchKind k) {
  return k == SearchKind::Wolstenholme ? "binom_residual_valuation" : "recheck_residual_valuation";
}

}  // namespace

ordered_json report_to_json(const CongruenceReport& r) {
  ordered_json j = {{"check", r.check},
                    {"p", to_decimal(r.p)},
                    {"required_exp", r.required_exponent},
                    {"residual_valuation", r.residual_valuation},
                    {"holds", r.holds},
                    {"lhs", opt_decimal(r.lhs)},
                    {"rhs", opt_decimal(r.rhs)},
                    {"status", to_string(r.status)},
                    {"working_exp", r.working_exponent}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CongruenceReport report_from_json(const ordered_json& j) {
  try {
    CongruenceReport r;
    r.check = j.at("check").get<std::string>();
    r.p = BigInt(j.at("p").get<std::string>());
    r.required_exponent = j.at("required_exp").get<int>();
    r.residual_valuation = j.at("residual_valuation").get<int>();
    r.holds = j.at("holds").get<bool>();
    if (j.contains("lhs") && j["lhs"].is_string()) r.lhs = BigInt(j["lhs"].get<std::string>());
    if (j.contains("rhs") && j["rhs"].is_string()) r.rhs = BigInt(j["rhs"].get<std::string>());
    r.status = parse_status(j.at("status").get<std::string>());
    r.working_exponent = j.value("working_exp", r.required_exponent + 1);
    r.note = j.value("note", std::string());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed report line: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidInput, "malformed decimal in report line");
  }
}

ordered_json hit_to_json(const SearchHit& h) {
  return {{"kind", to_string(h.kind)},
          {"p", h.p},
          {"witness", {{witness_primary(h.kind), h.indicator}, {witness_recheck(h.kind), h.recheck}}}};
}

void write_report_header(std::ostream& out, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    out << "check,p,required_exp,residual_valuation,holds,lhs,rhs,status,working_exp,note\n";
  }
}

void write_report(std::ostream& out, const CongruenceReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Jsonl:
      out << report_to_json(r).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << csv_field(r.check) << ',' << to_decimal(r.p) << ',' << r.required_exponent << ',' << r.residual_valuation
          << ',' << (r.holds ? "true" : "false") << ',' << (r.lhs ? to_decimal(*r.lhs) : "") << ','
          << (r.rhs ? to_decimal(*r.rhs) : "") << ',' << to_string(r.status) << ',' << r.working_exponent << ','
          << csv_field(r.note) << '\n';
      break;
    case OutputFormat::Human:
      out << "p=" << to_decimal(r.p) << "  " << r.check << "  " << to_string(r.status);
      if (r.status != Status::NotApplicable) {
        out << "  v_p=" << r.residual_valuation << " (need " << r.required_exponent << ", mod p^"
            << r.working_exponent << ")";
      }
      if (!r.note.empty()) out << "  [" << r.note << "]";
      out << '\n';
      break;
  }
  out.flush();
}

void write_hit_header(std::ostream& out, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) out << "kind,p,indicator,recheck\n";
}

void write_hit(std::ostream& out, const SearchHit& h, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Jsonl:
      out << hit_to_json(h).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << to_string(h.kind) << ',' << h.p << ',' << h.indicator << ',' << h.recheck << '\n';
      break;
    case OutputFormat::Human:
      out << "hit  " << to_string(h.kind) << "  p=" << h.p << "  " << witness_primary(h.kind) << '=' << h.indicator
          << "  " << witness_recheck(h.kind) << '=' << h.recheck << '\n';
      break;
  }
  out.flush();
}

}  // namespace wlab
