// Command-line front end: named verification suites, one-shot evaluation of
// diagrammatic words, object dumps, graded-dimension queries, and
// machine-readable JSON reports.  Exit codes: 0 all checks pass, 1 at least
// one check failed, 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nilhecke/suites.hpp>

using namespace nilhecke;
using nlohmann::json;

namespace {

json report_json(const Report& rep) {
  json recs = json::array();
  for (const Record& r : rep.records) {
    json e = {{"suite", r.suite},
              {"lemma", r.lemma},
              {"params", r.params},
              {"status", r.pass ? "pass" : "fail"},
              {"millis", r.millis}};
    if (!r.pass) e["witness"] = r.witness;
    recs.push_back(std::move(e));
  }
  return json{{"version", rep.version},
              {"config", rep.config},
              {"records", std::move(recs)},
              {"summary",
               {{"total", rep.total()},
                {"passed", rep.total() - rep.failed()},
                {"failed", rep.failed()}}}};
}

void write_report(const Report& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--report", "cannot write " + path);
  out << report_json(rep).dump(2) << "\n";
}

int finish_report(const Report& rep, const std::string& report_path, bool list_records) {
  if (list_records)
    for (const Record& r : rep.records) {
      std::printf("  [%s] %s/%s  %s  (%lld ms)", r.pass ? "pass" : "FAIL",
                  r.suite.c_str(), r.lemma.c_str(), r.params.c_str(), r.millis);
      if (!r.pass) std::printf("  -- %s", r.witness.c_str());
      std::printf("\n");
    }
  std::printf("%s: %d checks, %d failed\n", rep.config.c_str(), rep.total(),
              rep.failed());
  if (!report_path.empty()) write_report(rep, report_path);
  return rep.ok() ? 0 : 1;
}

// Rendering of module elements for object dumps: leaves print as algebra
// elements, inner nodes as slot-tagged sums.
std::string melem_str(const MElem<Rational>& e) {
  if (e.leaf) return e.h.is_zero() ? "0" : e.h.str();
  std::string s;
  for (const auto& [k, kid] : e.kids) {
    std::string inner = melem_str(kid);
    if (inner == "0") continue;
    if (!s.empty()) s += "  +  ";
    s += "(" + inner + ") (x) slot[" + std::to_string(k.first);
    if (k.second) s += ";" + std::to_string(k.second);
    s += "]";
  }
  return s.empty() ? "0" : s;
}

void dump_bobject(const BObject<Rational>& X) {
  std::printf("  top row:    %s\n", module_str(X.M).c_str());
  std::printf("  bottom row: %s\n", module_str(X.N).c_str());
  for (std::size_t g = 0; g < X.gamma.img.size(); ++g)
    for (std::size_t p = 0; p < X.gamma.img[g].comp.size(); ++p)
      if (!X.gamma.img[g].comp[p].is_zero())
        std::printf("  glue g%zu -> %s\n", g, melem_str(X.gamma.img[g].comp[p]).c_str());
}

void dump_complex(const std::string& head, const BComplex<Rational>& C) {
  std::printf("%s: terms %d..%d over rank %d\n", head.c_str(), C.lo, C.hi(), C.n);
  for (std::size_t t = 0; t < C.terms.size(); ++t) {
    std::printf("term %d:\n", C.lo + static_cast<int>(t));
    dump_bobject(C.terms[t]);
    if (t + 1 < C.terms.size()) {
      const BMorphism<Rational>& d = C.diffs[t];
      std::printf("differential %d:\n", C.lo + static_cast<int>(t));
      for (std::size_t g = 0; g < d.fM.img.size(); ++g)
        for (std::size_t p = 0; p < d.fM.img[g].comp.size(); ++p)
          if (!d.fM.img[g].comp[p].is_zero())
            std::printf("  top g%zu -> %s\n", g, melem_str(d.fM.img[g].comp[p]).c_str());
      for (std::size_t g = 0; g < d.fN.img.size(); ++g)
        for (std::size_t p = 0; p < d.fN.img[g].comp.size(); ++p)
          if (!d.fN.img[g].comp[p].is_zero())
            std::printf("  bottom g%zu -> %s\n", g,
                        melem_str(d.fN.img[g].comp[p]).c_str());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for graded bimodule complexes"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  if (const char* env = std::getenv("NILHECKE_FIELD")) cfg.field = env;

  // ------------------------------------------------------------- verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  bool quiet = false;
  verify->add_option("--suite", cfg.suite, "suite name")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", cfg.n_max, "rank / whisker bound override");
  verify->add_option("--deg-max", cfg.deg_max, "degree window override");
  verify->add_option("--trunc", cfg.trunc, "series truncation override");
  verify->add_option("--field", cfg.field, "rat or fp:<prime>");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 64));
  verify->add_option("--report", cfg.report_path, "write a JSON report here");
  verify->add_flag("--quiet", quiet, "suppress the per-check lines");

  // --------------------------------------------------------------- eval
  auto* eval = app.add_subcommand("eval", "evaluate a diagrammatic word");
  std::string eval_text;
  eval->add_option("text", eval_text, "word, e.g. \"lam o rho\"")->required();

  // --------------------------------------------------------------- dump
  auto* dump = app.add_subcommand("dump", "print a standard object");
  std::string dump_name;
  std::vector<int> dump_params;
  dump->add_option("name", dump_name, "object family: Y, X, P+, P-")->required();
  dump->add_option("params", dump_params, "family parameters");

  // -------------------------------------------------------------- grdim
  auto* grdim = app.add_subcommand("grdim", "graded dimension of the algebra");
  int grdim_n = 2;
  int grdim_trunc = 12;
  grdim->add_option("--n", grdim_n, "rank")->check(CLI::Range(0, 8));
  grdim->add_option("--trunc", grdim_trunc, "expansion bound in q");

  // ---------------------------------------------------------- relations
  auto* relations = app.add_subcommand("relations", "diagrammatic relation suite");
  int rel_bound = 2;
  std::string rel_report;
  relations->add_option("--bound", rel_bound, "whisker total bound")
      ->check(CLI::Range(0, 4));
  relations->add_option("--report", rel_report, "write a JSON report here");

  // ----------------------------------------------------------- isometry
  auto* isometry = app.add_subcommand("isometry", "Hom graded dimensions vs the form");
  int iso_max = 2;
  int iso_trunc = 12;
  std::string iso_report;
  isometry->add_option("--max", iso_max, "object total bound")->check(CLI::Range(0, 3));
  isometry->add_option("--trunc", iso_trunc, "comparison bound in q");
  isometry->add_option("--report", iso_report, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  try {
    if (*verify) {
      return finish_report(run_suite(cfg), cfg.report_path, !quiet);
    }
    if (*eval) {
      TypedWord w = type_text(eval_text);
      HElem<Rational> h = eval_R<Rational>(w);
      std::printf("%s (deg %d)\n", h.str().c_str(), degree(w));
      return 0;
    }
    if (*dump) {
      auto need = [&](std::size_t k) {
        if (dump_params.size() != k)
          throw std::invalid_argument("dump " + dump_name + " expects " +
                                      std::to_string(k) + " parameter(s)");
      };
      if (dump_name == "Y") {
        need(2);
        dump_complex("Y(" + std::to_string(dump_params[0]) + "," +
                         std::to_string(dump_params[1]) + ")",
                     make_Y<Rational>(dump_params[0], dump_params[1]));
      } else if (dump_name == "X") {
        need(1);
        dump_complex("X(" + std::to_string(dump_params[0]) + ")",
                     make_X<Rational>(dump_params[0]));
      } else if (dump_name == "P+") {
        need(1);
        std::printf("P+(%d):\n", dump_params[0]);
        dump_bobject(make_P_plus<Rational>(dump_params[0]));
      } else if (dump_name == "P-") {
        need(1);
        std::printf("P-(%d):\n", dump_params[0]);
        dump_bobject(make_P_minus<Rational>(dump_params[0]));
      } else {
        throw std::invalid_argument("unknown object family: " + dump_name);
      }
      return 0;
    }
    if (*grdim) {
      RatFunc closed = grdim_closed(grdim_n);
      Laurent series = closed.expand(2 * grdim_trunc);
      std::printf("grdim rank %d = %s\n", grdim_n, closed.str().c_str());
      std::printf("  = %s + O(q^%d)\n", series.str_q().c_str(), grdim_trunc + 1);
      CheckResult r = grdim_agree_check(grdim_n);
      std::printf("  enumeration over length classes: %s\n",
                  r.ok ? "agrees" : r.detail.c_str());
      return r.ok ? 0 : 1;
    }
    if (*relations) {
      SuiteConfig rc;
      rc.suite = "webster";
      rc.n_max = rel_bound;
      Report rep;
      rep.version = kVersion;
      rep.config = "relations bound=" + std::to_string(rel_bound);
      rep.records = run_cells(cells_webster<Rational>(rc), 1);
      return finish_report(rep, rel_report, true);
    }
    if (*isometry) {
      SuiteConfig ic;
      ic.suite = "isometry";
      ic.n_max = iso_max;
      ic.trunc = iso_trunc;
      Report rep;
      rep.version = kVersion;
      rep.config = "isometry max=" + std::to_string(iso_max) +
                   " trunc=" + std::to_string(iso_trunc);
      rep.records = run_cells(cells_isometry(ic), 1);
      return finish_report(rep, iso_report, true);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
