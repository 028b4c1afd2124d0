#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "webcalc/howe.hpp"
#include "webcalc/reduce.hpp"
#include "webcalc/wreath.hpp"

namespace webcalc {

// Reports are JSON documents with a fixed schema version. The timestamp is
// confined to the header so the rest of a document is byte-stable across
// identical runs.
using Json = nlohmann::ordered_json;

constexpr int kReportSchema = 1;

Json report_header();

Json suite_to_json(const SuiteReport& rep);
Json verdict_to_json(const Verdict& v);
Json howe_to_json(const HoweReport& rep);
Json schur_weyl_to_json(const SchurWeylReport& rep);

Json make_report(const std::string& command, const std::string& algebra,
                 Json params, Json result);

// Serializes with a trailing newline; throws std::runtime_error on IO errors.
void write_report(const std::string& path, const Json& doc);

}  // namespace webcalc
