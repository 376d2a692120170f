#pragma once

#include <string>
#include <vector>

#include "lineact/lamination.hpp"
#include "lineact/plmap.hpp"

namespace lineact {

/// One plottable item. Graphs are drawn as polylines through their exact
/// vertices, orbits as tick circles on the axis, laminations as nested arcs.
struct PlotItem {
  enum class Kind { FunctionGraph, OrbitPoints, LeafArcs };
  Kind kind;
  std::string label;
  PLMap map;                         // FunctionGraph
  std::vector<Rational> points;      // OrbitPoints
  std::vector<LeafInterval> leaves;  // LeafArcs
  /// Shade sign regions of map - id (used for the family plots).
  bool shade_signs = false;
};

struct PlotSpec {
  Window window;
  std::vector<PlotItem> items;
};

/// Decimal rendering for display only: truncates toward minus infinity at
/// the given precision using integer arithmetic, so output is deterministic
/// and never goes through floating point.
std::string fixed_decimal(const Rational& q, int digits);

/// Deterministic standalone SVG: identical input gives byte-identical output.
std::string render_svg(const PlotSpec& spec);

}  // namespace lineact
