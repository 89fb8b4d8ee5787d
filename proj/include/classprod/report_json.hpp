// JSON encoding of verifier reports and scan output. Field names and their
// order are documented in docs/report-schema.md.

#ifndef CLASSPROD_REPORT_JSON_HPP_
#define CLASSPROD_REPORT_JSON_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "classprod/search_harness.hpp"
#include "classprod/theorem_suite.hpp"

namespace classprod {

using Json = nlohmann::ordered_json;

Json to_json(Witness const& w);
Json to_json(SubVerdict const& s);
Json to_json(VerifierReport const& r);
Json to_json(ScanFlags const& f);
Json to_json(ScanRow const& row);
Json to_json(ScanSummary const& s);
Json to_json(std::vector<VerifierReport> const& reports);

//! Inverses of to_json; throw ParseError on missing or mistyped fields.
Witness        witness_from_json(Json const& j);
SubVerdict     sub_verdict_from_json(Json const& j);
VerifierReport report_from_json(Json const& j);
ScanRow        scan_row_from_json(Json const& j);

//! One compact JSON object per line, each line ending in '\n'.
std::string to_json_lines(std::vector<ScanRow> const& rows);
//! Skips blank lines; throws ParseError on malformed lines.
std::vector<ScanRow> scan_rows_from_json_lines(std::string const& text);

}  // namespace classprod

#endif  // CLASSPROD_REPORT_JSON_HPP_
