#pragma once

// Serialisation of reports and search hits. Residues are written as decimal strings.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "wlab/report.hpp"
#include "wlab/search.hpp"

namespace wlab {

enum class OutputFormat { Jsonl, Csv, Human };

OutputFormat parse_output_format(const std::string& s);

nlohmann::ordered_json report_to_json(const CongruenceReport& r);
// Inverse of report_to_json; InvalidInput on missing fields.
CongruenceReport report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json hit_to_json(const SearchHit& h);

void write_report_header(std::ostream& out, OutputFormat fmt);
void write_report(std::ostream& out, const CongruenceReport& r, OutputFormat fmt);

void write_hit_header(std::ostream& out, OutputFormat fmt);
void write_hit(std::ostream& out, const SearchHit& h, OutputFormat fmt);

}  // namespace wlab
