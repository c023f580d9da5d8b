// minklat: build rational polytopes, compute their geometry-of-numbers
// functionals, and run the inequality check catalog.
//
// Subcommands: gen, compute, verify, fuzz. Exit codes: 0 on success, 1 if
// any theorem-status check failed, 2 on usage errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "minklat/io.hpp"

using namespace minklat;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--in", "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
  out << text;
}

Lattice load_lattice(const std::string& spec, int dim) {
  if (spec.empty() || spec == "Zn" || spec == "identity")
    return Lattice::standard(dim);
  return lattice_from_json(json::parse(slurp(spec)));
}

struct BodyInput {
  std::string body_spec;  // --body
  std::string in_path;    // --in
};

Polytope load_body(const BodyInput& bi, std::string* label) {
  if (!bi.body_spec.empty() && !bi.in_path.empty())
    throw CLI::ValidationError("--body", "give either --body or --in, not both");
  if (!bi.body_spec.empty()) {
    if (label) *label = bi.body_spec;
    return make(parse_body_spec(bi.body_spec));
  }
  if (!bi.in_path.empty()) {
    Polytope p = polytope_from_json(json::parse(slurp(bi.in_path)));
    if (label) *label = polytope_digest(p);
    return p;
  }
  throw CLI::ValidationError("--body", "need --body or --in");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int emit_reports(const std::vector<CheckReport>& reports,
                 const std::string& format, const std::string& out_path) {
  std::string text;
  if (format == "json") {
    text = reports_to_json(reports).dump(2) + "\n";
  } else if (format == "csv") {
    text = reports_to_csv(reports);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) os << report_line(r) << "\n";
    text = os.str();
  }
  emit(out_path, text);
  for (const auto& r : reports)
    if (!r.holds && !r.probe) return 1;
  return 0;
}

int run_gen(const BodyInput& bi, const std::string& out_path) {
  std::string label;
  Polytope p = load_body(bi, &label);
  emit(out_path, polytope_to_json(p).dump(2) + "\n");
  return 0;
}

int run_compute(const BodyInput& bi, const std::string& lattice_spec,
                const std::string& what, const std::string& format,
                const std::string& out_path) {
  std::string label;
  Polytope p = load_body(bi, &label);
  Lattice l = load_lattice(lattice_spec, p.dim());

  json jout;
  std::ostringstream text;
  for (const std::string& w : split_commas(what)) {
    if (w == "volume") {
      Rational v = p.volume();
      jout["volume"] = rat_str(v);
      text << "volume = " << rat_str(v) << "\n";
    } else if (w == "centroid") {
      RatVector c = p.centroid();
      json arr = json::array();
      for (int i = 0; i < c.dim(); ++i) arr.push_back(rat_str(c[i]));
      jout["centroid"] = arr;
      text << "centroid = " << c.str() << "\n";
    } else if (w == "minima") {
      auto sm = successive_minima(p, l);
      json vals = json::array(), wits = json::array();
      for (const auto& v : sm.values) vals.push_back(rat_str(v));
      for (const auto& z : sm.witnesses) {
        json row = json::array();
        for (int i = 0; i < z.dim(); ++i) row.push_back(rat_str(z[i]));
        wits.push_back(row);
      }
      jout["minima"] = {{"values", vals}, {"witnesses", wits}};
      text << "minima =";
      for (const auto& v : sm.values) text << " " << rat_str(v);
      text << "\n";
      for (const auto& z : sm.witnesses) text << "  witness " << z.str() << "\n";
    } else if (w == "surface") {
      auto s = p.surface_area();
      jout["surface"] = s.value;
      text << "surface = " << format_double(s.value)
           << " (rel err <= " << format_double(s.rel_error) << ")\n";
    } else if (w == "lattice-surface") {
      Rational v = lattice_surface_area(p);
      jout["lattice-surface"] = rat_str(v);
      text << "lattice-surface = " << rat_str(v) << "\n";
    } else if (w == "ehrhart") {
      auto e = ehrhart_polynomial(p);
      jout["ehrhart"] = ehrhart_to_json(e);
      text << "ehrhart =";
      for (const auto& c : e.coeffs) text << " " << rat_str(c);
      text << " (lowest degree first)\n";
    } else if (w == "root-sum") {
      Rational v = root_sum(p);
      jout["root-sum"] = rat_str(v);
      text << "root-sum = " << rat_str(v) << "\n";
    } else {
      throw CLI::ValidationError("--what", "unknown functional: " + w);
    }
  }
  emit(out_path, format == "json" ? jout.dump(2) + "\n" : text.str());
  return 0;
}

int run_verify(const BodyInput& bi, const std::string& lattice_spec,
               const std::string& checks, double tolerance,
               const std::string& format, const std::string& out_path) {
  std::string label;
  Polytope p = load_body(bi, &label);
  Lattice l = load_lattice(lattice_spec, p.dim());

  std::vector<std::string> ids;
  bool all = checks.empty() || checks == "all-applicable";
  if (all)
    for (const auto& c : check_catalog()) ids.push_back(c.id);
  else
    ids = split_commas(checks);

  std::vector<CheckReport> reports;
  for (const auto& id : ids) {
    const CheckInfo* info = find_check(id);
    if (!info) throw CLI::ValidationError("--checks", "unknown check id: " + id);
    CheckOptions opts;
    opts.tolerance = tolerance;
    opts.body_label = label;
    std::string why;
    if (!check_applicable(*info, p, l, &why)) {
      if (all) {
        // "all-applicable" silently skips with a note instead of erroring.
        CheckReport skip;
        skip.check_id = id;
        skip.body = label;
        skip.lattice = lattice_digest(l);
        skip.holds = true;
        skip.probe = true;
        skip.notes = "skipped: " + why;
        reports.push_back(std::move(skip));
        continue;
      }
      throw CLI::ValidationError("--checks", id + " not applicable: " + why);
    }
    reports.push_back(run_check(id, p, l, opts));
  }
  return emit_reports(reports, format, out_path);
}

int run_fuzz(const std::string& kind, int dim, int count, std::uint64_t seed,
             const std::string& checks, double tolerance,
             const std::string& format, const std::string& out_path) {
  FuzzConfig cfg;
  cfg.kinds = {parse_random_kind(kind)};
  cfg.dims = {dim};
  cfg.count = count;
  cfg.seed = seed;
  cfg.tolerance = tolerance;
  if (!checks.empty() && checks != "all-applicable")
    cfg.check_ids = split_commas(checks);

  FuzzResult res = fuzz_campaign(cfg);
  std::ostringstream summary;
  summary << "bodies=" << res.summary.bodies << " reports=" << res.summary.reports
          << " skipped=" << res.summary.skipped
          << " violations=" << res.summary.violations << "\n";
  for (const auto& pe : res.summary.probes)
    summary << "probe " << pe.check_id << ": max ratio "
            << format_double(pe.ratio) << " at " << pe.body << "\n";

  if (format == "json") {
    json j{{"summary",
            {{"bodies", res.summary.bodies},
             {"reports", res.summary.reports},
             {"skipped", res.summary.skipped},
             {"violations", res.summary.violations}}},
           {"reports", reports_to_json(res.reports)}};
    json probes = json::array();
    for (const auto& pe : res.summary.probes)
      probes.push_back({{"check_id", pe.check_id},
                        {"max_ratio", pe.ratio},
                        {"body", pe.body}});
    j["summary"]["probes"] = probes;
    emit(out_path, j.dump(2) + "\n");
  } else if (format == "csv") {
    emit(out_path, reports_to_csv(res.reports));
    std::cerr << summary.str();
  } else {
    std::ostringstream os;
    for (const auto& r : res.reports)
      if (!r.holds && !r.probe) os << report_line(r) << "\n";
    os << summary.str();
    emit(out_path, os.str());
  }
  return res.summary.violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometry-of-numbers toolkit for rational polytopes"};
  app.require_subcommand(1);

  std::string body_spec, in_path, lattice_spec, out_path, what, checks, kind;
  std::string format = "text";
  double tolerance = 1e-9;
  int dim = 2, count = 10;
  std::uint64_t seed = 1;

  auto add_body = [&](CLI::App* cmd) {
    cmd->add_option("--body", body_spec, "body spec string, e.g. T:2 or Kell:3:5");
    cmd->add_option("--in", in_path, "polytope JSON file");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "write a body as polytope JSON");
  add_body(gen);
  gen->add_option("--out", out_path);

  CLI::App* compute = app.add_subcommand("compute", "evaluate functionals");
  add_body(compute);
  compute->add_option("--lattice", lattice_spec, "lattice JSON file or 'Zn'");
  compute
      ->add_option("--what", what,
                   "comma list of volume,centroid,minima,surface,"
                   "lattice-surface,ehrhart,root-sum")
      ->required();
  add_common(compute);

  CLI::App* verify = app.add_subcommand("verify", "run catalog checks");
  add_body(verify);
  verify->add_option("--lattice", lattice_spec);
  verify->add_option("--checks", checks, "comma list or 'all-applicable'");
  verify->add_option("--tolerance", tolerance);
  add_common(verify);

  CLI::App* fuzz = app.add_subcommand("fuzz", "run a fuzz campaign");
  fuzz->add_option("--kind", kind, "symmetric|centered|general")->required();
  fuzz->add_option("--dim", dim)->check(CLI::Range(1, 5));
  fuzz->add_option("--count", count)->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--checks", checks, "comma list or 'all-applicable'");
  fuzz->add_option("--tolerance", tolerance);
  add_common(fuzz);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen({body_spec, in_path}, out_path);
    if (compute->parsed())
      return run_compute({body_spec, in_path}, lattice_spec, what, format,
                         out_path);
    if (verify->parsed())
      return run_verify({body_spec, in_path}, lattice_spec, checks, tolerance,
                        format, out_path);
    if (fuzz->parsed())
      return run_fuzz(kind, dim, count, seed, checks, tolerance, format,
                      out_path);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
