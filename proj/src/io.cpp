#include "frechet/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace frechet {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw IoError(line_no, "expected a finite number, got '" + tok + "'");
  }
  return v;
}

int parse_int(const std::string& tok, int line_no) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0') {
    throw IoError(line_no, "expected an integer, got '" + tok + "'");
  }
  return static_cast<int>(v);
}

// All nonempty subsets of a sorted simplex.
void add_closure(const std::vector<int>& simplex,
                 std::set<std::vector<int>>* out) {
  const int m = static_cast<int>(simplex.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> face;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) face.push_back(simplex[i]);
    }
    out->insert(std::move(face));
  }
}

}  // namespace

ParsedComplex parse_complex_text(const std::string& text, bool strict,
                                 const std::string& name) {
  ParsedComplex out;
  out.name = name;
  std::istringstream ss(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks[0] != "fcx") {
        throw IoError(line_no, "expected header 'fcx <version> <dim> <kind>'");
      }
      if (toks.size() != 4) {
        throw IoError(line_no, "header needs version, dimension and kind");
      }
      out.version = parse_int(toks[1], line_no);
      if (out.version != 1) {
        throw IoError(line_no, "unsupported format version " + toks[1]);
      }
      out.dim = parse_int(toks[2], line_no);
      if (out.dim < 1) {
        throw IoError(line_no, "dimension must be positive");
      }
      out.kind = toks[3];
      if (out.kind != "complex" && out.kind != "curve" && out.kind != "dag") {
        throw IoError(line_no, "kind must be complex, curve or dag");
      }
      have_header = true;
      continue;
    }
    if (toks[0] == "name") {
      if (toks.size() != 2) throw IoError(line_no, "name takes one token");
      out.name = toks[1];
    } else if (toks[0] == "v") {
      if (static_cast<int>(toks.size()) != out.dim + 2) {
        throw IoError(line_no, "vertex line needs id and " +
                                   std::to_string(out.dim) + " coordinates");
      }
      const int id = parse_int(toks[1], line_no);
      if (id != static_cast<int>(out.points.size())) {
        throw IoError(line_no, "vertex ids must be consecutive from 0; got " +
                                   toks[1]);
      }
      Point p(out.dim);
      for (int i = 0; i < out.dim; ++i) {
        p[i] = parse_double(toks[2 + i], line_no);
      }
      out.points.push_back(std::move(p));
    } else if (toks[0] == "s") {
      if (out.kind != "complex") {
        throw IoError(line_no, "simplex lines only allowed for kind complex");
      }
      if (toks.size() < 2) throw IoError(line_no, "empty simplex");
      std::vector<int> simplex;
      for (size_t i = 1; i < toks.size(); ++i) {
        const int v = parse_int(toks[i], line_no);
        if (v < 0 || v >= static_cast<int>(out.points.size())) {
          throw IoError(line_no, "simplex vertex " + toks[i] +
                                     " not declared before use");
        }
        simplex.push_back(v);
      }
      std::sort(simplex.begin(), simplex.end());
      if (std::adjacent_find(simplex.begin(), simplex.end()) !=
          simplex.end()) {
        throw IoError(line_no, "simplex repeats a vertex");
      }
      out.simplices.push_back(std::move(simplex));
    } else if (toks[0] == "e") {
      if (out.kind != "dag") {
        throw IoError(line_no, "edge lines only allowed for kind dag");
      }
      if (toks.size() != 3) throw IoError(line_no, "edge line needs two ids");
      const int u = parse_int(toks[1], line_no);
      const int w = parse_int(toks[2], line_no);
      if (u < 0 || u >= static_cast<int>(out.points.size()) || w < 0 ||
          w >= static_cast<int>(out.points.size())) {
        throw IoError(line_no, "edge endpoint not declared before use");
      }
      if (u == w) throw IoError(line_no, "self-loop edge");
      out.edges.emplace_back(u, w);
    } else if (toks[0] == "start" || toks[0] == "end") {
      if (toks.size() != 2) {
        throw IoError(line_no, toks[0] + " takes one vertex id");
      }
      const int v = parse_int(toks[1], line_no);
      if (v < 0 || v >= static_cast<int>(out.points.size())) {
        throw IoError(line_no, toks[0] + " vertex not declared before use");
      }
      (toks[0] == "start" ? out.start : out.end) = v;
    } else {
      throw IoError(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_header) throw IoError(line_no, "missing fcx header");
  if (out.points.empty()) throw IoError(line_no, "no vertices");
  if (out.kind == "dag" && out.edges.empty() && out.points.size() > 1) {
    throw IoError(line_no, "dag with several vertices needs edges");
  }
  if (out.kind == "complex") {
    std::set<std::vector<int>> closed;
    for (int v = 0; v < static_cast<int>(out.points.size()); ++v) {
      closed.insert({v});
    }
    for (const auto& s : out.simplices) add_closure(s, &closed);
    std::set<std::vector<int>> given(out.simplices.begin(),
                                     out.simplices.end());
    for (int v = 0; v < static_cast<int>(out.points.size()); ++v) {
      given.insert({v});
    }
    if (given != closed) {
      if (strict) {
        throw IoError(line_no, "simplex table is not downward closed");
      }
      out.warnings.push_back("completed downward closure (" +
                             std::to_string(closed.size() - given.size()) +
                             " missing faces)");
    }
    out.simplices.assign(closed.begin(), closed.end());
  }
  return out;
}

ParsedComplex read_complex_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) {
    throw GeometryError("cannot open file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto base = path.find_last_of('/');
  return parse_complex_text(buf.str(), strict,
                            base == std::string::npos
                                ? path
                                : path.substr(base + 1));
}

std::string write_complex_text(const ParsedComplex& parsed) {
  std::ostringstream out;
  out << "fcx 1 " << parsed.dim << ' ' << parsed.kind << '\n';
  if (!parsed.name.empty()) out << "name " << parsed.name << '\n';
  for (size_t i = 0; i < parsed.points.size(); ++i) {
    out << "v " << i;
    for (int d = 0; d < parsed.dim; ++d) {
      out << ' ' << fmt_double(parsed.points[i][d]);
    }
    out << '\n';
  }
  if (parsed.kind == "complex") {
    auto simplices = parsed.simplices;
    std::sort(simplices.begin(), simplices.end());
    for (const auto& s : simplices) {
      out << 's';
      for (int v : s) out << ' ' << v;
      out << '\n';
    }
  } else if (parsed.kind == "dag") {
    auto edges = parsed.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, w] : edges) out << "e " << u << ' ' << w << '\n';
  }
  if (parsed.start >= 0) out << "start " << parsed.start << '\n';
  if (parsed.end >= 0) out << "end " << parsed.end << '\n';
  return out.str();
}

SimplicialComplex ParsedComplex::to_complex() const {
  if (kind == "curve") return to_curve().complex();
  if (kind == "dag") return to_dag().complex();
  return SimplicialComplex(points, simplices, name);
}

Curve ParsedComplex::to_curve() const {
  if (kind != "curve") {
    throw GeometryError("file does not hold a curve");
  }
  return Curve(points, name);
}

DagComplex ParsedComplex::to_dag() const {
  if (kind != "dag") {
    throw GeometryError("file does not hold a dag complex");
  }
  return DagComplex(points, edges, name);
}

ParsedComplex to_parsed(const Curve& curve) {
  ParsedComplex out;
  out.kind = "curve";
  out.name = curve.name();
  out.points = curve.vertices();
  out.dim = out.points.empty() ? 0 : static_cast<int>(out.points[0].size());
  return out;
}

ParsedComplex to_parsed(const SimplicialComplex& complex) {
  ParsedComplex out;
  out.kind = "complex";
  out.name = complex.name();
  out.points = complex.points();
  out.simplices = complex.simplices();
  out.dim = complex.ambient_dim();
  return out;
}

ParsedComplex to_parsed(const DagComplex& dag) {
  ParsedComplex out;
  out.kind = "dag";
  out.name = dag.name();
  out.points = dag.points();
  out.edges = dag.edges();
  out.dim = out.points.empty() ? 0 : static_cast<int>(out.points[0].size());
  return out;
}

std::string ResultRecord::to_json(bool include_wall_time) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["value"] = value;
  j["projections"] = nlohmann::ordered_json::array();
  for (const auto& p : projections) {
    nlohmann::ordered_json jp;
    jp["simplices"] = p.simplex_ids;
    jp["breakpoints"] = p.breakpoints;
    auto coords = nlohmann::ordered_json::array();
    for (const auto& w : p.witnesses) {
      coords.push_back(std::vector<double>(w.data(), w.data() + w.size()));
    }
    jp["witnesses"] = coords;
    j["projections"].push_back(std::move(jp));
  }
  if (!mean.empty()) {
    auto coords = nlohmann::ordered_json::array();
    for (const auto& p : mean) {
      coords.push_back(std::vector<double>(p.data(), p.data() + p.size()));
    }
    j["mean"] = std::move(coords);
  }
  j["explored"] = explored;
  if (include_wall_time) j["wall_ms"] = wall_ms;
  j["seed"] = seed;
  j["version"] = version;
  return j.dump(2);
}

ResultRecord record_from_path(const std::string& command,
                              const ProductPath& path) {
  ResultRecord rec;
  rec.command = command;
  rec.value = path.value;
  if (!path.vertices.empty()) {
    const int k = static_cast<int>(path.vertices.front().id.simplex.size());
    for (int i = 0; i < k; ++i) {
      rec.projections.push_back(project_path(path, i));
    }
  }
  return rec;
}

std::string export_svg(const ResultRecord& record,
                       const std::vector<const SimplicialComplex*>& complexes) {
  for (const auto* c : complexes) {
    if (c->ambient_dim() != 2) {
      throw GeometryError("export_svg: planar inputs only");
    }
  }
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
  auto grow = [&](const Point& p) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  };
  for (const auto* c : complexes) {
    for (const auto& p : c->points()) grow(p);
  }
  for (const auto& proj : record.projections) {
    for (const auto& w : proj.witnesses) grow(w);
  }
  if (xmin > xmax) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  const double margin = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-9});
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << fmt_double(xmin - margin) << ' ' << fmt_double(ymin - margin) << ' '
      << fmt_double(xmax - xmin + 2 * margin) << ' '
      << fmt_double(ymax - ymin + 2 * margin) << "\">\n";
  const double stroke = 0.004 * std::max(xmax - xmin + 2 * margin,
                                         ymax - ymin + 2 * margin);
  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#8c564b", "#e377c2"};
  for (size_t ci = 0; ci < complexes.size(); ++ci) {
    const auto& c = *complexes[ci];
    const char* color = palette[ci % 6];
    svg << "  <g class=\"complex\" stroke=\"" << color
        << "\" stroke-width=\"" << fmt_double(stroke) << "\" fill=\"none\">\n";
    for (int s = 0; s < c.size(); ++s) {
      const auto& verts = c.simplex(s);
      if (verts.size() == 2) {
        const Point &a = c.points()[verts[0]], &b = c.points()[verts[1]];
        svg << "    <line x1=\"" << fmt_double(a[0]) << "\" y1=\""
            << fmt_double(a[1]) << "\" x2=\"" << fmt_double(b[0])
            << "\" y2=\"" << fmt_double(b[1]) << "\"/>\n";
      } else if (verts.size() == 3) {
        svg << "    <polygon fill=\"" << color
            << "\" fill-opacity=\"0.12\" points=\"";
        for (int v : verts) {
          svg << fmt_double(c.points()[v][0]) << ','
              << fmt_double(c.points()[v][1]) << ' ';
        }
        svg << "\"/>\n";
      }
    }
    for (const auto& p : c.points()) {
      svg << "    <circle cx=\"" << fmt_double(p[0]) << "\" cy=\""
          << fmt_double(p[1]) << "\" r=\"" << fmt_double(1.5 * stroke)
          << "\" fill=\"" << color << "\"/>\n";
    }
    svg << "  </g>\n";
  }
  // Leash segments tie the witnesses of the first projection to the others
  // at every shared breakpoint.
  if (record.projections.size() >= 2) {
    svg << "  <g class=\"leash\" stroke=\"#999999\" stroke-width=\""
        << fmt_double(0.5 * stroke) << "\" stroke-dasharray=\""
        << fmt_double(2 * stroke) << "\">\n";
    const auto& first = record.projections.front();
    for (size_t j = 1; j < record.projections.size(); ++j) {
      const auto& other = record.projections[j];
      const size_t steps = std::min(first.witnesses.size(),
                                    other.witnesses.size());
      for (size_t i = 0; i < steps; ++i) {
        svg << "    <line x1=\"" << fmt_double(first.witnesses[i][0])
            << "\" y1=\"" << fmt_double(first.witnesses[i][1]) << "\" x2=\""
            << fmt_double(other.witnesses[i][0]) << "\" y2=\""
            << fmt_double(other.witnesses[i][1]) << "\"/>\n";
      }
    }
    svg << "  </g>\n";
  }
  for (size_t j = 0; j < record.projections.size(); ++j) {
    const auto& proj = record.projections[j];
    if (proj.witnesses.empty()) continue;
    svg << "  <path class=\"solution\" fill=\"none\" stroke=\""
        << palette[j % 6] << "\" stroke-width=\"" << fmt_double(2 * stroke)
        << "\" stroke-opacity=\"0.6\" d=\"";
    for (size_t i = 0; i < proj.witnesses.size(); ++i) {
      svg << (i == 0 ? 'M' : 'L') << fmt_double(proj.witnesses[i][0]) << ' '
          << fmt_double(proj.witnesses[i][1]);
    }
    svg << "\"/>\n";
  }
  if (!record.mean.empty()) {
    svg << "  <path class=\"mean\" fill=\"none\" stroke=\"#000000\" "
           "stroke-width=\""
        << fmt_double(1.5 * stroke) << "\" d=\"";
    for (size_t i = 0; i < record.mean.size(); ++i) {
      svg << (i == 0 ? 'M' : 'L') << fmt_double(record.mean[i][0]) << ' '
          << fmt_double(record.mean[i][1]);
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

double measured_packedness(const Curve& curve, int samples,
                           std::uint64_t seed) {
  const auto& v = curve.vertices();
  if (v.size() < 2) return 0.0;
  double total = 0.0;
  double diam = 0.0;
  for (size_t i = 1; i < v.size(); ++i) {
    total += (v[i] - v[i - 1]).norm();
    diam = std::max(diam, (v[i] - v[0]).norm());
  }
  diam = std::max(diam, 1e-9);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_edge(0,
                                               static_cast<int>(v.size()) - 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int it = 0; it < samples; ++it) {
    const int e = pick_edge(rng);
    const Point q = v[e] + unit(rng) * (v[e + 1] - v[e]);
    const double r = diam * std::pow(10.0, -3.0 * unit(rng));
    double inside = 0.0;
    for (size_t i = 1; i < v.size(); ++i) {
      // Portion of segment v[i-1]v[i] inside the ball (q, r).
      const Eigen::VectorXd d = v[i] - v[i - 1];
      const Eigen::VectorXd w = v[i - 1] - q;
      const double A = d.squaredNorm();
      if (A <= 0.0) continue;
      const double B = 2.0 * d.dot(w);
      const double C = w.squaredNorm() - r * r;
      const double disc = B * B - 4.0 * A * C;
      if (disc <= 0.0) continue;
      const double sq = std::sqrt(disc);
      const double lo = std::max(0.0, (-B - sq) / (2.0 * A));
      const double hi = std::min(1.0, (-B + sq) / (2.0 * A));
      if (hi > lo) inside += (hi - lo) * std::sqrt(A);
    }
    worst = std::max(worst, inside / r);
  }
  return worst;
}

Curve gen_cpacked(int n, double c, std::uint64_t seed) {
  if (n < 2) {
    throw GeometryError("gen_cpacked: need n >= 2");
  }
  if (c < 1.7) {
    // Any curve admits balls holding length 2r around interior points.
    throw GeometryError("gen_cpacked: packedness below 1.7 is infeasible");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Unit steps in x with a bounded-slope wiggle keep the length inside any
  // ball of radius r at or below 2 r sqrt(1 + slope^2).
  const double budget = 0.45 * c;
  double slope = budget > 1.0 ? std::sqrt(budget * budget - 1.0) : 0.0;
  const double f1 = 0.5 + unit(rng);
  const double f2 = 2.0 + unit(rng);
  const double phase1 = 6.28318530717958648 * unit(rng);
  const double phase2 = 6.28318530717958648 * unit(rng);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double a1 = 0.7 * slope / std::max(f1, 1e-9);
    const double a2 = 0.3 * slope / std::max(f2, 1e-9);
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
      Point p(2);
      p[0] = static_cast<double>(i);
      p[1] = a1 * std::sin(f1 * i + phase1) + a2 * std::sin(f2 * i + phase2);
      pts.push_back(std::move(p));
    }
    Curve curve(std::move(pts), "cpacked");
    if (measured_packedness(curve) <= 1.2 * c) return curve;
    slope *= 0.7;
  }
  throw GeometryError("gen_cpacked: could not meet the packedness bound");
}

}  // namespace frechet
