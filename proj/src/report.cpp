#include "webcalc/report.hpp"

#include <ctime>
#include <fstream>
#include <stdexcept>

namespace webcalc {

Json report_header() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return {{"schema", kReportSchema}, {"tool", "webcalc"}, {"generated", buf}};
}

Json suite_to_json(const SuiteReport& rep) {
  Json lines = Json::array();
  for (const auto& l : rep.lines)
    lines.push_back({{"relation", l.relation},
                     {"instances", l.instances},
                     {"equal", l.equal},
                     {"unequal", l.unequal},
                     {"witness", l.witness}});
  return {{"pair", rep.pair_name},
          {"bound", rep.bound},
          {"n", rep.n},
          {"set", rep.set},
          {"total", rep.total},
          {"failed", rep.failed},
          {"lines", lines}};
}

Json verdict_to_json(const Verdict& v) {
  return {{"equal", v.equal}, {"witness", v.witness}};
}

Json howe_to_json(const HoweReport& rep) {
  return {{"pair", rep.pair_name},
          {"m", rep.m},
          {"n", rep.n},
          {"d", rep.d},
          {"dim_space", rep.dim_space},
          {"dim_left", rep.dim_left},
          {"dim_right", rep.dim_right},
          {"dim_cl", rep.dim_cl},
          {"dim_cr", rep.dim_cr},
          {"summands", rep.summands},
          {"right_centralizes", rep.right_centralizes},
          {"left_centralizes", rep.left_centralizes},
          {"asserted", rep.asserted}};
}

Json schur_weyl_to_json(const SchurWeylReport& rep) {
  return {{"commutant_dim", rep.commutant_dim},
          {"image_rank", rep.image_rank},
          {"equal", rep.equal},
          {"asserted", rep.asserted}};
}

Json make_report(const std::string& command, const std::string& algebra,
                 Json params, Json result) {
  Json doc;
  doc["header"] = report_header();
  doc["command"] = command;
  doc["algebra"] = algebra;
  doc["params"] = std::move(params);
  doc["result"] = std::move(result);
  return doc;
}

void write_report(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace webcalc
