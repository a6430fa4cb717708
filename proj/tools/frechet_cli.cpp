#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frechet/cpacked.hpp"
#include "frechet/dagfrechet.hpp"
#include "frechet/io.hpp"
#include "frechet/solver.hpp"

namespace {

using namespace frechet;

struct CommonOpts {
  std::vector<std::string> files;
  std::string out;
  std::vector<int> starts, ends;
  bool use_explicit = false;
  bool no_timing = false;
  bool strict = false;
};

void add_common(CLI::App* cmd, CommonOpts* opts, int min_files) {
  cmd->add_option("files", opts->files, "input files")
      ->required()
      ->expected(min_files, -1);
  cmd->add_option("--out,-o", opts->out, "write result to this file");
  cmd->add_option("--starts", opts->starts,
                  "start vertex id per input (default: file marker or 0)");
  cmd->add_option("--ends", opts->ends,
                  "end vertex id per input (default: file marker or last)");
  cmd->add_flag("--explicit", opts->use_explicit,
                "materialize the full product graph instead of lazy search");
  cmd->add_flag("--no-timing", opts->no_timing,
                "omit wall time from the output record");
}

std::vector<ParsedComplex> load_all(const CommonOpts& opts) {
  std::vector<ParsedComplex> out;
  for (const auto& path : opts.files) {
    auto parsed = read_complex_file(path, opts.strict);
    for (const auto& w : parsed.warnings) {
      std::cerr << path << ": warning: " << w << "\n";
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

int endpoint(const std::vector<int>& flags, const ParsedComplex& parsed,
             size_t i, bool is_start) {
  if (i < flags.size()) return flags[i];
  return is_start ? parsed.start_or(0)
                  : parsed.end_or(static_cast<int>(parsed.points.size()) - 1);
}

void emit(const ResultRecord& rec, const CommonOpts& opts) {
  const std::string text = rec.to_json(!opts.no_timing) + "\n";
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out);
    if (!f) throw GeometryError("cannot write " + opts.out);
    f << text;
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Shared driver for the lowest-path commands (weak, kpath, dogs, perimeter).
int run_paths(const std::string& command, const CommonOpts& opts,
              const CostFunction& cost) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto parsed = load_all(opts);
  std::vector<SimplicialComplex> complexes;
  complexes.reserve(parsed.size());
  for (const auto& p : parsed) complexes.push_back(p.to_complex());
  std::vector<const SimplicialComplex*> ptrs;
  std::vector<int> starts, ends;
  for (size_t i = 0; i < complexes.size(); ++i) {
    ptrs.push_back(&complexes[i]);
    starts.push_back(endpoint(opts.starts, parsed[i], i, true));
    ends.push_back(endpoint(opts.ends, parsed[i], i, false));
  }
  LazySearchStats stats;
  const auto path = k_complex_paths(
      ptrs, starts, ends, cost,
      opts.use_explicit ? SolveMode::explicit_graph : SolveMode::lazy,
      &stats);
  auto rec = record_from_path(command, path);
  rec.explored = stats.popped;
  rec.wall_ms = ms_since(t0);
  emit(rec, opts);
  return 0;
}

std::vector<Curve> to_curves(const std::vector<ParsedComplex>& parsed) {
  std::vector<Curve> curves;
  curves.reserve(parsed.size());
  for (const auto& p : parsed) curves.push_back(p.to_curve());
  return curves;
}

DagComplex to_dag_any(const ParsedComplex& parsed) {
  if (parsed.kind == "curve") {
    return DagComplex::from_curve(parsed.to_curve());
  }
  return parsed.to_dag();
}

ResultRecord record_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ResultRecord rec;
  rec.command = j.value("command", std::string());
  rec.value = j.value("value", 0.0);
  rec.explored = j.value("explored", std::uint64_t(0));
  rec.seed = j.value("seed", std::uint64_t(0));
  if (j.contains("projections")) {
    for (const auto& jp : j["projections"]) {
      SimplicialPath p;
      p.simplex_ids = jp.value("simplices", std::vector<int>());
      p.breakpoints = jp.value("breakpoints", std::vector<double>());
      for (const auto& w : jp["witnesses"]) {
        const auto coords = w.get<std::vector<double>>();
        p.witnesses.push_back(
            Eigen::Map<const Point>(coords.data(), coords.size()));
      }
      rec.projections.push_back(std::move(p));
    }
  }
  if (j.contains("mean")) {
    for (const auto& w : j["mean"]) {
      const auto coords = w.get<std::vector<double>>();
      rec.mean.push_back(Eigen::Map<const Point>(coords.data(), coords.size()));
    }
  }
  return rec;
}

int run(int argc, char** argv) {
  CLI::App app{"Frechet-style distances on simplicial complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonOpts weak_o, kpath_o, mean_o, aprx_o, dogs_o, peri_o, dag_o, val_o,
      svg_o;

  auto* weak = app.add_subcommand("weak", "weak Frechet lowest path");
  add_common(weak, &weak_o, 2);
  int s1 = -1, t1 = -1, s2 = -1, t2 = -1;
  weak->add_option("--s1", s1, "start vertex in the first complex");
  weak->add_option("--t1", t1, "end vertex in the first complex");
  weak->add_option("--s2", s2, "start vertex in the second complex");
  weak->add_option("--t2", t2, "end vertex in the second complex");

  auto* kpath = app.add_subcommand("kpath", "lowest path under a chosen cost");
  add_common(kpath, &kpath_o, 1);
  std::string cost_name = "meb";
  int handler = 0;
  std::vector<std::string> weight_specs;
  kpath->add_option("--cost", cost_name,
                    "star-max, meb, weighted-sum or perimeter");
  kpath->add_option("--handler", handler, "handler index for star-max");
  kpath->add_option("--weight", weight_specs,
                    "weighted-sum edge as i,j,w (repeatable)");

  auto* mean = app.add_subcommand("mean", "exact mean curve of input curves");
  add_common(mean, &mean_o, 1);
  int resolution = 16;
  mean->add_option("--resolution", resolution, "samples per path edge");

  auto* aprx = app.add_subcommand("mean-approx",
                                  "(1+eps)-approximate mean curve");
  add_common(aprx, &aprx_o, 1);
  double eps = 0.25;
  int aprx_resolution = 16;
  aprx->add_option("--eps", eps, "approximation parameter")->required();
  aprx->add_option("--resolution", aprx_resolution, "samples per path edge");

  auto* dogs = app.add_subcommand("dogs", "handler-and-dogs longest leash");
  add_common(dogs, &dogs_o, 1);
  int dogs_handler = 0;
  dogs->add_option("--handler", dogs_handler, "handler index");

  auto* peri = app.add_subcommand("perimeter",
                                  "minimize the maximum hull perimeter");
  add_common(peri, &peri_o, 1);

  auto* dag = app.add_subcommand("dag", "monotone Frechet distance on dags");
  add_common(dag, &dag_o, 2);
  std::uint64_t dag_seed = 1;
  int dag_samples = 0;
  dag->add_option("--seed", dag_seed, "sampling seed");
  dag->add_option("--samples", dag_samples,
                  "override the critical-value sample count");

  auto* gen = app.add_subcommand("gen", "generate a synthetic c-packed curve");
  int gen_n = 64;
  double gen_c = 4.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "number of vertices")->required();
  gen->add_option("--c", gen_c, "packedness budget")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out,-o", gen_out, "write curve to this file");

  auto* bench = app.add_subcommand(
      "bench", "explored-cell scaling on generated c-packed families");
  double bench_c = 4.0, bench_eps = 0.25;
  std::uint64_t bench_seed = 1;
  std::vector<int> bench_sizes = {128, 256, 512, 1024, 2048, 4096, 8192};
  std::string bench_out;
  bench->add_option("--c", bench_c, "packedness budget");
  bench->add_option("--eps", bench_eps, "approximation parameter");
  bench->add_option("--seed", bench_seed, "generator seed");
  bench->add_option("--sizes", bench_sizes, "curve sizes to run");
  bench->add_option("--out,-o", bench_out, "write tuples to this file");

  auto* val = app.add_subcommand("validate", "check files against the format");
  val->add_option("files", val_o.files, "input files")->required();

  auto* svg = app.add_subcommand("export-svg",
                                 "render a result record and its inputs");
  std::string svg_record;
  svg->add_option("record", svg_record, "result record json file")->required();
  svg->add_option("files", svg_o.files, "input complexes")
      ->required()
      ->expected(1, -1);
  svg->add_option("--out,-o", svg_o.out, "write svg to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (weak->parsed()) {
    if (s1 >= 0) weak_o.starts = {s1, s2 >= 0 ? s2 : 0};
    if (t1 >= 0) weak_o.ends = {t1, t2 >= 0 ? t2 : 0};
    if (s2 >= 0 && s1 < 0) throw GeometryError("--s2 requires --s1");
    PairwiseDistanceCost cost;
    return run_paths("weak", weak_o, cost);
  }
  if (kpath->parsed()) {
    const int k = static_cast<int>(kpath_o.files.size());
    if (cost_name == "star-max") {
      StarMaxCost cost(handler);
      return run_paths("kpath", kpath_o, cost);
    }
    if (cost_name == "meb") {
      MebRadiusCost cost;
      return run_paths("kpath", kpath_o, cost);
    }
    if (cost_name == "perimeter") {
      HullPerimeterCost cost;
      return run_paths("kpath", kpath_o, cost);
    }
    if (cost_name == "weighted-sum") {
      std::vector<WeightedSumCost::Edge> edges;
      for (const auto& spec : weight_specs) {
        int i = 0, j = 0;
        double w = 0.0;
        if (std::sscanf(spec.c_str(), "%d,%d,%lf", &i, &j, &w) != 3) {
          std::cerr << "bad --weight spec: " << spec << "\n";
          return 2;
        }
        edges.emplace_back(i, j, w);
      }
      if (edges.empty()) {
        WeightedSumCost cost = make_uniform_star_cost(k, 0);
        return run_paths("kpath", kpath_o, cost);
      }
      WeightedSumCost cost(std::move(edges));
      return run_paths("kpath", kpath_o, cost);
    }
    std::cerr << "unknown cost: " << cost_name << "\n";
    return 2;
  }
  if (mean->parsed()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto curves = to_curves(load_all(mean_o));
    const auto res = mean_curve(
        curves, resolution,
        mean_o.use_explicit ? SolveMode::explicit_graph : SolveMode::lazy);
    auto rec = record_from_path("mean", res.path);
    rec.value = res.value;
    rec.mean = res.mean.vertices();
    rec.wall_ms = ms_since(t0);
    emit(rec, mean_o);
    return 0;
  }
  if (aprx->parsed()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto curves = to_curves(load_all(aprx_o));
    const auto res = aprx_mean(eps, curves, aprx_resolution);
    ResultRecord rec;
    rec.command = "mean-approx";
    rec.value = res.value;
    rec.mean = res.mean.vertices();
    rec.explored = res.explored;
    rec.wall_ms = ms_since(t0);
    emit(rec, aprx_o);
    return 0;
  }
  if (dogs->parsed()) {
    StarMaxCost cost(dogs_handler);
    return run_paths("dogs", dogs_o, cost);
  }
  if (peri->parsed()) {
    HullPerimeterCost cost;
    return run_paths("perimeter", peri_o, cost);
  }
  if (dag->parsed()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto parsed = load_all(dag_o);
    const DagComplex d1 = to_dag_any(parsed[0]);
    const DagComplex d2 = to_dag_any(parsed[1]);
    const int ds1 = endpoint(dag_o.starts, parsed[0], 0, true);
    const int dt1 = endpoint(dag_o.ends, parsed[0], 0, false);
    const int ds2 = endpoint(dag_o.starts, parsed[1], 1, true);
    const int dt2 = endpoint(dag_o.ends, parsed[1], 1, false);
    const auto res =
        comp_fr(d1, d2, ds1, dt1, ds2, dt2, dag_seed, dag_samples);
    auto rec = record_from_path("dag", res.path);
    rec.value = res.value;
    rec.seed = dag_seed;
    rec.wall_ms = ms_since(t0);
    emit(rec, dag_o);
    return 0;
  }
  if (gen->parsed()) {
    const Curve curve = gen_cpacked(gen_n, gen_c, gen_seed);
    const std::string text = write_complex_text(to_parsed(curve));
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(gen_out);
      if (!f) throw GeometryError("cannot write " + gen_out);
      f << text;
    }
    return 0;
  }
  if (bench->parsed()) {
    std::ostringstream lines;
    std::vector<double> log_n, log_cells;
    for (size_t i = 0; i < bench_sizes.size(); ++i) {
      const int n = bench_sizes[i];
      std::vector<Curve> curves;
      curves.push_back(gen_cpacked(n, bench_c, bench_seed + 2 * i));
      curves.push_back(gen_cpacked(n, bench_c, bench_seed + 2 * i + 1));
      const auto t0 = std::chrono::steady_clock::now();
      const auto res = aprx_mean(bench_eps, curves);
      const double ms = ms_since(t0);
      lines << n << ' ' << res.explored << ' ' << ms << '\n';
      log_n.push_back(std::log(static_cast<double>(n)));
      log_cells.push_back(std::log(static_cast<double>(
          std::max<std::uint64_t>(res.explored, 1))));
    }
    if (log_n.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < log_n.size(); ++i) {
        sx += log_n[i];
        sy += log_cells[i];
        sxx += log_n[i] * log_n[i];
        sxy += log_n[i] * log_cells[i];
      }
      const double m = static_cast<double>(log_n.size());
      lines << "# slope "
            << (m * sxy - sx * sy) / (m * sxx - sx * sx) << '\n';
    }
    if (bench_out.empty()) {
      std::cout << lines.str();
    } else {
      std::ofstream f(bench_out);
      if (!f) throw GeometryError("cannot write " + bench_out);
      f << lines.str();
    }
    return 0;
  }
  if (val->parsed()) {
    bool ok = true;
    for (const auto& path : val_o.files) {
      try {
        const auto parsed = read_complex_file(path, false);
        for (const auto& w : parsed.warnings) {
          std::cout << path << ": downward-closure: " << w << "\n";
          ok = false;
        }
        std::vector<Violation> violations;
        if (parsed.kind == "dag") {
          violations = parsed.to_dag().validate();
        } else {
          violations = parsed.to_complex().validate();
        }
        for (const auto& v : violations) {
          std::cout << path << ": " << v.rule << ": " << v.detail << "\n";
          ok = false;
        }
        if (parsed.warnings.empty() && violations.empty()) {
          std::cout << path << ": ok\n";
        }
      } catch (const IoError& e) {
        std::cout << path << ": " << e.what() << "\n";
        ok = false;
      } catch (const GeometryError& e) {
        std::cout << path << ": " << e.what() << "\n";
        ok = false;
      }
    }
    return ok ? 0 : 1;
  }
  if (svg->parsed()) {
    std::ifstream in(svg_record);
    if (!in) throw GeometryError("cannot open file: " + svg_record);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto rec = record_from_json(buf.str());
    const auto parsed = load_all(svg_o);
    std::vector<SimplicialComplex> complexes;
    complexes.reserve(parsed.size());
    for (const auto& p : parsed) complexes.push_back(p.to_complex());
    std::vector<const SimplicialComplex*> ptrs;
    for (const auto& c : complexes) ptrs.push_back(&c);
    const std::string doc = export_svg(rec, ptrs);
    if (svg_o.out.empty()) {
      std::cout << doc;
    } else {
      std::ofstream f(svg_o.out);
      if (!f) throw GeometryError("cannot write " + svg_o.out);
      f << doc;
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const frechet::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const frechet::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
