#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "webcalc/algebra.hpp"
#include "webcalc/combinatorics.hpp"
#include "webcalc/eval.hpp"
#include "webcalc/howe.hpp"
#include "webcalc/parse.hpp"
#include "webcalc/reduce.hpp"
#include "webcalc/report.hpp"
#include "webcalc/schur.hpp"
#include "webcalc/threads.hpp"
#include "webcalc/udot.hpp"
#include "webcalc/wreath.hpp"

using json = webcalc::Json;

namespace {

struct Common {
  std::string algebra = "trivial";
  std::string out;
  int jobs = webcalc::default_jobs();
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--algebra", c.algebra, "builtin name or algebra file path")
      ->capture_default_str();
  cmd->add_option("--out", c.out, "write a JSON report here");
  cmd->add_option("--jobs", c.jobs, "worker threads for sweeps")
      ->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

webcalc::GoodPair load_pair(const std::string& src) {
  if (std::filesystem::exists(src))
    return webcalc::pair_from_json(read_file(src));
  return webcalc::builtin_pair(src);
}

// Human summary to stdout, structured report to --out when asked for.
void emit(const Common& c, const std::string& command, json params,
          json result, const std::string& human) {
  if (!human.empty()) std::cout << human << "\n";
  if (c.out.empty()) return;
  webcalc::write_report(
      c.out, webcalc::make_report(command, c.algebra, std::move(params),
                                  std::move(result)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for web categories over good pairs"};
  app.require_subcommand(1);
  int code = 0;

  Common c;

  // algebra validate
  auto* algebra = app.add_subcommand("algebra", "algebra table commands");
  algebra->require_subcommand(1);
  auto* validate = algebra->add_subcommand("validate", "check the axioms");
  add_common(validate, c);
  validate->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::ValidationReport vr = pair.validate();
    std::ostringstream os;
    if (vr.ok()) os << pair.name << ": ok";
    for (const auto& v : vr.violations) os << "violation: " << v << "\n";
    for (const auto& nt : vr.notes) os << "note: " << nt << "\n";
    emit(c, "algebra validate", {{"algebra", c.algebra}},
         {{"ok", vr.ok()},
          {"violations", vr.violations},
          {"notes", vr.notes}},
         os.str());
    code = vr.ok() ? 0 : 1;
  });

  // basis enum
  auto* basis = app.add_subcommand("basis", "basis diagram commands");
  basis->require_subcommand(1);
  auto* benum = basis->add_subcommand("enum", "enumerate hom basis grids");
  std::string src_s, dst_s;
  benum->add_option("--src", src_s, "source object word")->required();
  benum->add_option("--dst", dst_s, "target object word")->required();
  add_common(benum, c);
  benum->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::Obj src = parse_obj(pair, src_s);
    webcalc::Obj dst = parse_obj(pair, dst_s);
    auto grids = enum_M(pair, src, dst);
    std::ostringstream os;
    os << grids.size() << " basis diagrams " << src.str(&pair) << " -> "
       << dst.str(&pair);
    json list = json::array();
    for (const auto& g : grids) {
      os << "\n  " << g.str(pair);
      list.push_back(g.str(pair));
    }
    emit(c, "basis enum", {{"src", src_s}, {"dst", dst_s}},
         {{"count", grids.size()}, {"grids", list}}, os.str());
  });

  // web eval / reduce / verify
  auto* web = app.add_subcommand("web", "web morphism commands");
  web->require_subcommand(1);

  auto* weval = web->add_subcommand("eval", "evaluate a morphism file");
  std::string diagram_path;
  int rank_n = 3;
  weval->add_option("--diagram", diagram_path, "morphism file")->required();
  weval->add_option("--n", rank_n, "evaluation rank")->capture_default_str();
  add_common(weval, c);
  weval->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::WebMorphism m = parse_morphism(pair, read_file(diagram_path));
    webcalc::Evaluator ev(pair, rank_n);
    std::string table = ev.export_matrix(m);
    emit(c, "web eval", {{"diagram", diagram_path}, {"n", rank_n}},
         {{"dom", m.dom.str(&pair)},
          {"cod", m.cod.str(&pair)},
          {"matrix", table}},
         table);
  });

  auto* wreduce = web->add_subcommand("reduce", "coordinates over the basis");
  wreduce->add_option("--diagram", diagram_path, "morphism file")->required();
  add_common(wreduce, c);
  wreduce->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::WebMorphism m = parse_morphism(pair, read_file(diagram_path));
    webcalc::BasisCoordinates bc = reduce_to_basis(pair, m);
    std::ostringstream os;
    os << bc.coeff.nnz() << " terms over " << bc.index.size()
       << " basis diagrams " << m.dom.str(&pair) << " -> " << m.cod.str(&pair);
    json coords = json::array();
    for (const auto& [i, v] : bc.coeff.e) {
      os << "\n  " << webcalc::rat_str(v) << " * " << bc.index[i].str(pair);
      coords.push_back({{"index", i},
                        {"coeff", webcalc::rat_str(v)},
                        {"grid", bc.index[i].str(pair)}});
    }
    emit(c, "web reduce", {{"diagram", diagram_path}},
         {{"basis_size", bc.index.size()}, {"coords", coords}}, os.str());
  });

  auto* wverify = web->add_subcommand("verify", "sweep a relation suite");
  std::string relset = "all";
  int bound = 2;
  rank_n = 3;
  wverify->add_option("--relations", relset, "defining | implied | all")
      ->capture_default_str();
  wverify->add_option("--bound", bound, "thickness bound")
      ->capture_default_str();
  wverify->add_option("--n", rank_n, "evaluation rank")->capture_default_str();
  add_common(wverify, c);
  wverify->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::SuiteReport rep =
        verify_suite(pair, bound, rank_n, relset, c.jobs);
    emit(c, "web verify",
         {{"relations", relset}, {"bound", bound}, {"n", rank_n}},
         suite_to_json(rep), rep.str());
    code = rep.all_equal() ? 0 : 1;
  });

  // schur check-iso / dim
  auto* schur = app.add_subcommand("schur", "Schur algebra commands");
  schur->require_subcommand(1);
  int sn = 2, sd = 2;

  auto* iso = schur->add_subcommand("check-iso", "web vs Schur actions");
  iso->add_option("--n", sn, "rank")->capture_default_str();
  iso->add_option("--d", sd, "degree")->capture_default_str();
  add_common(iso, c);
  iso->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::Verdict v = check_web_schur_iso(pair, sn, sd, c.jobs);
    std::string human =
        v.equal ? "web and Schur actions agree" : "MISMATCH: " + v.witness;
    emit(c, "schur check-iso", {{"n", sn}, {"d", sd}},
         {{"equal", v.equal}, {"witness", v.witness}}, human);
    code = v.equal ? 0 : 1;
  });

  auto* sdim = schur->add_subcommand("dim", "dimension of the Schur algebra");
  sdim->add_option("--n", sn, "rank")->capture_default_str();
  sdim->add_option("--d", sd, "degree")->capture_default_str();
  add_common(sdim, c);
  sdim->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    long dim = schur_dim(pair, sn, sd);
    emit(c, "schur dim", {{"n", sn}, {"d", sd}}, {{"dim", dim}},
         std::to_string(dim));
  });

  // wreath check
  auto* wreath = app.add_subcommand("wreath", "wreath product commands");
  wreath->require_subcommand(1);
  auto* wcheck = wreath->add_subcommand(
      "check", "wreath algebra vs web endomorphisms, optional rank check");
  int wd = 2, wn = 0;
  wcheck->add_option("--d", wd, "tensor degree")->capture_default_str();
  wcheck->add_option("--n", wn,
                     "also compare image rank and commutant at this rank");
  add_common(wcheck, c);
  wcheck->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::Verdict v = wreath_from_web(pair, wd, c.jobs);
    std::ostringstream os;
    os << "wreath/web structure constants at d=" << wd << ": "
       << (v.equal ? "agree" : "MISMATCH: " + v.witness);
    json result = {{"iso_equal", v.equal}, {"iso_witness", v.witness}};
    bool bad = !v.equal;
    if (wn > 0) {
      webcalc::SchurWeylReport sw = schur_weyl_check(pair, wn, wd);
      os << "\nrank check at n=" << wn << ": " << sw.str();
      result["commutant_dim"] = sw.commutant_dim;
      result["image_rank"] = sw.image_rank;
      result["rank_equal"] = sw.equal;
      result["asserted"] = sw.asserted;
      if (sw.asserted && !sw.equal) bad = true;
    }
    emit(c, "wreath check", {{"d", wd}, {"n", wn}}, result, os.str());
    code = bad ? 1 : 0;
  });

  // udot verify
  auto* udot = app.add_subcommand("udot", "idempotented enveloping algebra");
  udot->require_subcommand(1);
  auto* uverify = udot->add_subcommand("verify", "sweep the gl_n(A) relations");
  int un = 2, ubound = 2, urank = 0;
  uverify->add_option("--n", un, "gl rank")->capture_default_str();
  uverify->add_option("--bound", ubound, "max weight entry")
      ->capture_default_str();
  uverify->add_option("--rank", urank,
                      "fixed evaluation rank (default: per-weight total)");
  add_common(uverify, c);
  uverify->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::SuiteReport rep = verify_udot(pair, un, ubound, urank, c.jobs);
    emit(c, "udot verify", {{"n", un}, {"bound", ubound}, {"rank", urank}},
         suite_to_json(rep), rep.str());
    code = rep.all_equal() ? 0 : 1;
  });

  // howe check
  auto* howe = app.add_subcommand("howe", "symmetric space commands");
  howe->require_subcommand(1);
  auto* hcheck = howe->add_subcommand("check", "double centralizer check");
  int hm = 1, hn = 1, hd = 2;
  hcheck->add_option("--m", hm, "left rank")->capture_default_str();
  hcheck->add_option("--n", hn, "right rank")->capture_default_str();
  hcheck->add_option("--d", hd, "degree")->capture_default_str();
  add_common(hcheck, c);
  hcheck->callback([&] {
    webcalc::GoodPair pair = load_pair(c.algebra);
    webcalc::HoweReport rep = double_centralizer_check(pair, hm, hn, hd);
    emit(c, "howe check", {{"m", hm}, {"n", hn}, {"d", hd}},
         {{"dim_space", rep.dim_space},
          {"dim_left", rep.dim_left},
          {"dim_right", rep.dim_right},
          {"dim_cl", rep.dim_cl},
          {"dim_cr", rep.dim_cr},
          {"summands", rep.summands},
          {"right_centralizes", rep.right_centralizes},
          {"left_centralizes", rep.left_centralizes},
          {"asserted", rep.asserted}},
         rep.str());
    bool bad = rep.asserted &&
               !(rep.right_centralizes && rep.left_centralizes);
    code = bad ? 1 : 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int ec = app.exit(e);
    return ec == 0 ? 0 : 2;
  } catch (const webcalc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const webcalc::AlgebraFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
