#ifndef FRECHET_IO_HPP
#define FRECHET_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "frechet/cellgraph.hpp"
#include "frechet/complex.hpp"

namespace frechet {

inline constexpr const char* kToolVersion = "0.1.0";

struct IoError : std::runtime_error {
  IoError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
  int line;
};

// Parsed contents of a complex file: header `fcx 1 <d> <kind>` followed by
// `v` vertex lines, `s` simplex lines (kind complex), `e` directed-edge
// lines (kind dag), and optional `start` / `end` vertex markers.
struct ParsedComplex {
  int version = 1;
  int dim = 0;
  std::string kind;  // "complex", "curve", or "dag"
  std::string name;
  std::vector<Point> points;
  std::vector<std::vector<int>> simplices;
  std::vector<std::pair<int, int>> edges;
  int start = -1;
  int end = -1;
  std::vector<std::string> warnings;

  SimplicialComplex to_complex() const;
  Curve to_curve() const;
  DagComplex to_dag() const;

  int start_or(int fallback) const { return start >= 0 ? start : fallback; }
  int end_or(int fallback) const { return end >= 0 ? end : fallback; }
};

// Strict mode refuses files whose simplex table is not downward closed;
// otherwise the closure is completed with a warning.
ParsedComplex parse_complex_text(const std::string& text, bool strict = false,
                                 const std::string& name = "");
ParsedComplex read_complex_file(const std::string& path, bool strict = false);

// Canonical serialization; reading it back yields the same canonical text.
std::string write_complex_text(const ParsedComplex& parsed);
ParsedComplex to_parsed(const Curve& curve);
ParsedComplex to_parsed(const SimplicialComplex& complex);
ParsedComplex to_parsed(const DagComplex& dag);

struct ResultRecord {
  std::string command;
  double value = 0.0;
  // One polyline per input complex: witness coordinates with shared
  // breakpoint parameters.
  std::vector<SimplicialPath> projections;
  std::vector<Point> mean;  // mean-curve vertices, when applicable
  std::uint64_t explored = 0;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
  std::string version = kToolVersion;

  std::string to_json(bool include_wall_time = true) const;
};

ResultRecord record_from_path(const std::string& command,
                              const ProductPath& path);

// Planar wireframe rendering of the inputs plus solution polylines and
// leash segments at the path breakpoints.
std::string export_svg(const ResultRecord& record,
                       const std::vector<const SimplicialComplex*>& complexes);

// Deterministic synthetic curve whose measured packedness stays below
// c * 1.2.
Curve gen_cpacked(int n, double c, std::uint64_t seed);

// max over sampled balls of curve-length-inside / radius.
double measured_packedness(const Curve& curve, int samples = 256,
                           std::uint64_t seed = 7);

}  // namespace frechet

#endif
