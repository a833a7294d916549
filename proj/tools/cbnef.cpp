// Command-line front end: divisor classes, intersections, extremality
// certificates, basis matrices, weighted-space contraction checks, and
// batch surveys, with deterministic JSON output for golden-file testing.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cbnef/basis.hpp"
#include "cbnef/divisors.hpp"
#include "cbnef/extremality.hpp"
#include "cbnef/hassett.hpp"

using json = nlohmann::json;
using namespace cbnef;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "text";
  std::string out_path;

  void emit(const std::string& command, const json& params, const json& result,
            const std::string& text) const {
    std::ostringstream buf;
    if (format == "json") {
      json envelope;
      envelope["command"] = command;
      envelope["format_version"] = "1";
      envelope["params"] = params;
      envelope["result"] = result;
      buf << envelope.dump(2) << '\n';
    } else {
      buf << text;
      if (!text.empty() && text.back() != '\n') buf << '\n';
    }
    if (out_path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open --out file " + out_path);
      f << buf.str();
    }
  }
};

int partition_cap_from_env() {
  if (const char* v = std::getenv("CBNEF_PARTITION_CAP")) {
    int cap = std::atoi(v);
    if (cap >= 4) return cap;
  }
  return kDefaultSetPartitionCap;
}

json rat_vec_json(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(x.str());
  return arr;
}

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

std::string join_rats(const std::vector<Rat>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

json family_json(const CurveFamily& f) {
  json arr = json::array();
  for (const FamilyEntry& e : f.entries) {
    json ent;
    ent["dropped"] = f.dropped_in_entries && e.index == f.dropped;
    ent["i"] = e.index;
    ent["pair"] = e.pair;
    ent["shape"] = e.shape(f.ctx).str();
    arr.push_back(ent);
  }
  return arr;
}

std::string verdict_str(Verdict v) {
  return v == Verdict::Extremal ? "Extremal" : "NotCertified";
}

json certificate_json(const ExtremalityCertificate& cert) {
  const CbDivisorSpec& spec = cert.spec;
  json out;
  out["n"] = spec.ctx.n;
  out["j"] = spec.j;
  out["k"] = spec.k();
  out["r"] = spec.r();
  out["method"] = cert.method == CertMethod::Structured ? "structured" : "bruteforce";
  out["verdict"] = verdict_str(cert.verdict);
  out["rank"] = cert.rank;
  out["checks"] = {{"zeros", cert.zeros_ok},
                   {"distinct", cert.distinct_ok},
                   {"nef", cert.nef_ok}};
  out["minor_det"] = cert.minor_det ? json(cert.minor_det->str()) : json();
  if (spec.j >= 2 && spec.r() != 0 && cert.method == CertMethod::Structured &&
      cert.family) {
    Rat expected = spec.j % 2 == 0
                       ? Rat(spec.j, 2)
                       : (spec.r() % 2 == 0 ? Rat(spec.j) - Rat(spec.r(), 2)
                                            : Rat(spec.j - spec.r(), 2));
    out["det_expected"] = expected.str();
  } else {
    out["det_expected"] = json();
  }
  if (cert.family) {
    out["family"] = family_json(*cert.family);
    out["dropped"] = cert.family->dropped;
  } else if (!cert.bruteforce_rows.empty()) {
    json rows = json::array();
    for (const FCurveShape& s : cert.bruteforce_rows) rows.push_back(s.str());
    out["family"] = rows;
    out["dropped"] = json();
  } else {
    out["family"] = json::array();
    out["dropped"] = json();
  }
  if (!cert.note.empty()) out["note"] = cert.note;
  return out;
}

std::string certificate_text(const ExtremalityCertificate& cert) {
  std::ostringstream out;
  const CbDivisorSpec& spec = cert.spec;
  out << "n=" << spec.ctx.n << " j=" << spec.j << " k=" << spec.k()
      << " r=" << spec.r() << "  verdict: " << verdict_str(cert.verdict) << '\n';
  bool evaluated = cert.family || !cert.bruteforce_rows.empty();
  if (!evaluated) {
    if (!cert.note.empty()) out << "note: " << cert.note << '\n';
    return out.str();
  }
  out << "method: "
      << (cert.method == CertMethod::Structured ? "structured" : "bruteforce")
      << "  rank: " << cert.rank << "/" << spec.ctx.g - 1 << '\n';
  if (cert.minor_det)
    out << "|minor det|: " << cert.minor_det->abs().str() << '\n';
  out << "checks: zeros=" << (cert.zeros_ok ? "ok" : "FAIL")
      << " distinct=" << (cert.distinct_ok ? "ok" : "FAIL")
      << " nef=" << (cert.nef_ok ? "ok" : "FAIL") << '\n';
  if (cert.family) {
    out << "family:";
    for (const FamilyEntry& e : cert.family->entries) {
      out << ' ' << e.str();
      if (cert.family->dropped_in_entries && e.index == cert.family->dropped)
        out << "(dropped)";
    }
    out << '\n';
  } else if (!cert.bruteforce_rows.empty()) {
    out << "independent zero-intersection shapes:";
    for (const FCurveShape& s : cert.bruteforce_rows) out << ' ' << s.str();
    out << '\n';
  }
  if (!cert.note.empty()) out << "note: " << cert.note << '\n';
  return out.str();
}

struct SurveyRow {
  int n, j, k, r;
  std::string verdict, minor_det, det_expected, nef, family;
};

std::string survey_family_summary(const ExtremalityCertificate& cert) {
  std::ostringstream out;
  if (cert.family) {
    bool first = true;
    for (const FamilyEntry& e : cert.family->entries) {
      if (e.is_one_one()) continue;
      if (!first) out << ' ';
      out << e.str();
      first = false;
    }
    if (cert.family->dropped_in_entries) out << " drop=" << cert.family->dropped;
    if (first && !cert.family->dropped_in_entries) out << "all-one-one";
  } else {
    out << "bruteforce";
  }
  return out.str();
}

SurveyRow survey_one(int n, int j) {
  CbDivisorSpec spec = make_divisor_spec(n, j);
  ExtremalityCertificate cert = certify(spec, CertMethod::Structured);
  SurveyRow row{n, j, spec.k(), spec.r(), verdict_str(cert.verdict), "", "",
                cert.nef_ok ? "yes" : "no", survey_family_summary(cert)};
  if (cert.minor_det) row.minor_det = cert.minor_det->abs().str();
  if (spec.r() != 0 && cert.method == CertMethod::Structured) {
    DetFormulaReport rep = det_formula_check(spec);
    row.det_expected = rep.expected.str();
  }
  return row;
}

// ---- commands ----

int cmd_class(int n, int j, const Output& out) {
  CbDivisorSpec spec = make_divisor_spec(n, j);
  SymDivisorClass d = divisor_class(spec);
  json result;
  result["b"] = rat_vec_json(d.coeffs);
  result["basis"] = json::array();
  for (int r = 2; r <= spec.ctx.g + 1; ++r)
    result["basis"].push_back("B" + std::to_string(r));
  json params = {{"n", n}, {"j", j}};
  out.emit("class", params, result, join_rats(d.coeffs, ", "));
  return kExitOk;
}

int cmd_intersect(int n, int j, const std::string& shape_text,
                  const std::string& weights_text, const std::string& partition_text,
                  const Output& out) {
  bool symmetric = j > 0 || !shape_text.empty();
  bool general = !weights_text.empty() || !partition_text.empty();
  if (symmetric == general)
    throw CLI::ValidationError(
        "intersect", "give either --j with --shape, or --weights with --partition");
  json params = {{"n", n}};
  if (symmetric) {
    if (j <= 0 || shape_text.empty())
      throw CLI::ValidationError("intersect", "--j and --shape go together");
    FCurveShape s = parse_shape(shape_text);
    if (s.sum() != n)
      throw CLI::ValidationError("intersect", "shape " + shape_text +
                                                  " does not sum to n=" + std::to_string(n));
    long value = fakh_sym_intersect(n, j, s);
    params["j"] = j;
    params["shape"] = s.str();
    json result = {{"value", value}};
    out.emit("intersect", params, result, std::to_string(value));
    return kExitOk;
  }
  WeightVector w = parse_weight_vector(n, weights_text);
  SetPartition4 p = parse_set_partition(partition_text, n);
  bool certified = general_weight_vanishing(n, w.indices, p);
  params["weights"] = weights_text;
  params["partition"] = p.str();
  json result = {{"certified_zero", certified}};
  out.emit("intersect", params, result,
           certified ? "certified-zero true" : "certified-zero false (no certificate)");
  return kExitOk;
}

int cmd_extremal(int n, int j, const std::string& method, bool expect_extremal,
                 const Output& out) {
  CbDivisorSpec spec = make_divisor_spec(n, j);
  CertMethod m = method == "bruteforce" ? CertMethod::BruteForce : CertMethod::Structured;
  ExtremalityCertificate cert = certify(spec, m);
  json params = {{"n", n}, {"j", j}, {"method", method}};
  out.emit("extremal", params, certificate_json(cert), certificate_text(cert));
  if (expect_extremal && cert.verdict != Verdict::Extremal) return kExitCheckFailed;
  return kExitOk;
}

int cmd_nef(int n, int j, const Output& out) {
  CbDivisorSpec spec = make_divisor_spec(n, j);
  FConeReport rep = f_cone_check(divisor_class(spec));
  json result;
  result["nef"] = rep.is_in_cone;
  result["violations"] = json::array();
  for (const FCurveShape& s : rep.violations) result["violations"].push_back(s.str());
  json params = {{"n", n}, {"j", j}};
  std::string text = rep.is_in_cone ? "in F-cone (no negative intersections)"
                                    : "violations: " + std::to_string(rep.violations.size());
  out.emit("nef", params, result, text);
  return kExitOk;
}

int cmd_basis(int n, const std::string& which, const Output& out) {
  ModuliContext ctx = make_context(n);
  RatMatrix m;
  if (which == "M")
    m = intersection_matrix(ctx);
  else if (which == "N")
    m = intersection_matrix_inverse(ctx);
  else
    m = dual_expansion_matrix(ctx);
  json params = {{"n", n}, {"which", which}};
  json result = {{"matrix", matrix_json(m)}, {"rows", m.rows()}, {"cols", m.cols()}};
  out.emit("basis", params, result, m.str());
  return kExitOk;
}

int cmd_gamma(int n, const std::string& shape_text, const Output& out) {
  ModuliContext ctx = make_context(n);
  FCurveShape s = parse_shape(shape_text);
  if (s.sum() != n)
    throw CLI::ValidationError("gamma", "shape does not sum to n");
  SymCurveClass c = expand_fcurve(ctx, s);
  json params = {{"n", n}, {"shape", s.str()}};
  json result = {{"gamma", c.gammas}};
  std::ostringstream text;
  for (std::size_t i = 0; i < c.gammas.size(); ++i) {
    if (i) text << ", ";
    text << c.gammas[i];
  }
  out.emit("gamma", params, result, text.str());
  return kExitOk;
}

int cmd_hassett(int n, const std::string& weights_text, const std::string& check,
                std::uint64_t samples, std::uint64_t seed, const Output& out) {
  WeightVector w = parse_weight_vector(n, weights_text);
  HassettWeights h = minimal_hassett(n, w);
  json params = {{"n", n}, {"weights", weights_text}};
  json result;
  result["a"] = rat_vec_json(h.a);
  std::ostringstream text;
  text << "weights: " << join_rats(h.a, ", ") << '\n';
  if (!check.empty()) {
    SamplePlan plan;
    if (check == "random") {
      plan.kind = SamplePlan::Kind::Random;
      plan.count = samples;
      plan.seed = seed;
    } else {
      plan.kind = SamplePlan::Kind::Exhaustive;
      plan.cap = partition_cap_from_env();
    }
    CompatibilityReport rep = contraction_compatibility_check(n, w, plan);
    params["check"] = check;
    if (check == "random") {
      params["samples"] = samples;
      params["seed"] = seed;
    }
    result["checked"] = rep.checked;
    result["contracted"] = rep.contracted;
    result["violations"] = json::array();
    for (const SetPartition4& p : rep.violations)
      result["violations"].push_back(p.str());
    text << "checked " << rep.checked << " partitions, " << rep.contracted
         << " contracted, " << rep.violations.size() << " violations\n";
  }
  out.emit("hassett", params, result, text.str());
  return kExitOk;
}

int cmd_survey(int n_min, int n_max, unsigned jobs, bool expect_extremal,
               const Output& out) {
  std::vector<std::pair<int, int>> tasks;
  for (int n = std::max(6, n_min); n <= n_max; ++n)
    for (int j = 2; j <= n / 2; ++j) tasks.emplace_back(n, j);

  std::vector<SurveyRow> rows(tasks.size());
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t t = cursor.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        rows[t] = survey_one(tasks[t].first, tasks[t].second);
      } catch (const std::exception& e) {
        rows[t] = SurveyRow{tasks[t].first, tasks[t].second, 0, 0,
                            "Error", "", "", "", e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  std::ostringstream csv;
  csv << "n,j,k,r,verdict,minor_det,det_expected,nef,family\n";
  bool all_extremal = true;
  json jrows = json::array();
  for (const SurveyRow& r : rows) {
    csv << r.n << ',' << r.j << ',' << r.k << ',' << r.r << ',' << r.verdict << ','
        << r.minor_det << ',' << r.det_expected << ',' << r.nef << ",\"" << r.family
        << "\"\n";
    if (r.verdict != "Extremal") all_extremal = false;
    jrows.push_back({{"n", r.n},
                     {"j", r.j},
                     {"k", r.k},
                     {"r", r.r},
                     {"verdict", r.verdict},
                     {"minor_det", r.minor_det},
                     {"det_expected", r.det_expected},
                     {"nef", r.nef == "yes"},
                     {"family", r.family}});
  }
  json params = {{"n_min", n_min}, {"n_max", n_max}};
  json result = {{"all_extremal", all_extremal}, {"count", rows.size()}, {"rows", jrows}};
  if (out.format == "json" && !out.out_path.empty()) {
    // JSON summary to stdout, CSV into the file
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open --out file " + out.out_path);
    f << csv.str();
    Output stdout_only{out.format, ""};
    stdout_only.emit("survey", params, result, csv.str());
  } else {
    out.emit("survey", params, result, csv.str());
  }
  if (expect_extremal && !all_extremal) return kExitCheckFailed;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection calculus and nef-cone extremality "
               "certificates for symmetric divisors on the moduli space of "
               "stable pointed rational curves"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--out may follow the subcommand

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out.out_path, "write output to this file");

  int n = 0, j = 0;
  std::string shape_text, weights_text, partition_text;
  std::string method = "structured", which = "N", check;
  bool expect_extremal = false;
  std::uint64_t samples = 100000, seed = 0;
  unsigned jobs = 0;
  int n_min = 6, n_max = 30;

  CLI::App* c_class = app.add_subcommand("class", "divisor class on the boundary basis");
  c_class->add_option("--n", n, "marked points")->required();
  c_class->add_option("--j", j, "weight index")->required();

  CLI::App* c_int = app.add_subcommand("intersect", "intersection numbers / certificates");
  c_int->add_option("--n", n, "marked points")->required();
  c_int->add_option("--j", j, "weight index (with --shape)");
  c_int->add_option("--shape", shape_text, "F-curve shape a,b,c,d");
  c_int->add_option("--weights", weights_text, "weight indices j_1,...,j_n");
  c_int->add_option("--partition", partition_text, "set partition i,...|...|...|...");

  CLI::App* c_ext = app.add_subcommand("extremal", "extremality certificate");
  c_ext->add_option("--n", n, "marked points")->required();
  c_ext->add_option("--j", j, "weight index")->required();
  c_ext->add_option("--method", method, "certificate method")
      ->check(CLI::IsMember({"structured", "bruteforce"}))
      ->capture_default_str();
  c_ext->add_flag("--expect-extremal", expect_extremal,
                  "exit 1 unless the verdict is Extremal");

  CLI::App* c_nef = app.add_subcommand("nef", "F-cone membership of the divisor class");
  c_nef->add_option("--n", n, "marked points")->required();
  c_nef->add_option("--j", j, "weight index")->required();

  CLI::App* c_basis = app.add_subcommand("basis", "intersection/basis-change matrices");
  c_basis->add_option("--n", n, "marked points")->required();
  c_basis->add_option("--which", which, "M, N (= M^-1) or P (= N^t)")
      ->check(CLI::IsMember({"M", "N", "P"}))
      ->capture_default_str();

  CLI::App* c_gamma = app.add_subcommand("gamma", "expand an F-curve in the F_{j,1,1} basis");
  c_gamma->add_option("--n", n, "marked points")->required();
  c_gamma->add_option("--shape", shape_text, "F-curve shape a,b,c,d")->required();

  CLI::App* c_has = app.add_subcommand("hassett", "minimal weighted space and contraction check");
  c_has->add_option("--n", n, "marked points")->required();
  c_has->add_option("--weights", weights_text, "weight indices j_1,...,j_n")->required();
  c_has->add_option("--check", check, "compatibility check over set partitions")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  c_has->add_option("--samples", samples, "random check: sample count")
      ->capture_default_str();
  c_has->add_option("--seed", seed, "random check: seed")->capture_default_str();

  CLI::App* c_sur = app.add_subcommand("survey", "batch certificates over a range of n");
  c_sur->add_option("--n-min", n_min, "lowest n")->capture_default_str();
  c_sur->add_option("--n-max", n_max, "highest n")->capture_default_str();
  c_sur->add_option("--jobs", jobs, "parallel workers (0 = all cores)");
  c_sur->add_flag("--expect-extremal", expect_extremal,
                  "exit 1 unless every row is Extremal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_class)) return cmd_class(n, j, out);
    if (app.got_subcommand(c_int))
      return cmd_intersect(n, j, shape_text, weights_text, partition_text, out);
    if (app.got_subcommand(c_ext)) return cmd_extremal(n, j, method, expect_extremal, out);
    if (app.got_subcommand(c_nef)) return cmd_nef(n, j, out);
    if (app.got_subcommand(c_basis)) return cmd_basis(n, which, out);
    if (app.got_subcommand(c_gamma)) return cmd_gamma(n, shape_text, out);
    if (app.got_subcommand(c_has)) return cmd_hassett(n, weights_text, check, samples, seed, out);
    if (app.got_subcommand(c_sur)) return cmd_survey(n_min, n_max, jobs, expect_extremal, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
