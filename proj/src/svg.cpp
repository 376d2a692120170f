#include "lineact/svg.hpp"

#include <algorithm>
#include <sstream>

namespace lineact {

std::string fixed_decimal(const Rational& q, int digits) {
  Integer scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = floor_div(Integer(q.get_num()) * scale, Integer(q.get_den()));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::ostringstream out;
  if (negative) out << '-';
  out << whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out << '.' << std::string(static_cast<std::size_t>(digits) - f.size(), '0') << f;
  }
  return out.str();
}

namespace {

constexpr int kWidth = 840;
constexpr int kHeight = 640;
constexpr int kMargin = 40;

const char* kPalette[] = {"#1b6ca8", "#c0392b", "#1e8449", "#8e44ad", "#b7950b", "#2c3e50"};

struct Transform {
  Rational x_lo, x_hi, y_lo, y_hi;

  std::string x(const Rational& v) const {
    Rational t = (v - x_lo) / (x_hi - x_lo);
    return fixed_decimal(Rational(kMargin) + t * (kWidth - 2 * kMargin), 2);
  }
  std::string y(const Rational& v) const {
    Rational t = (v - y_lo) / (y_hi - y_lo);
    return fixed_decimal(Rational(kHeight - kMargin) - t * (kHeight - 2 * kMargin), 2);
  }
};

std::vector<Rational> graph_vertices(const PLMap& map, const Window& w) {
  std::vector<Rational> xs{w.left};
  for (const auto& b : map.breakpoints())
    if (b > w.left && b < w.right) xs.push_back(b);
  xs.push_back(w.right);
  return xs;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (spec.items.empty()) throw std::invalid_argument("render_svg: empty plot spec");
  const Window& w = spec.window;

  // Vertical range: everything the items can reach, padded by 1/20.
  Rational y_lo = w.left, y_hi = w.right;
  for (const auto& item : spec.items) {
    if (item.kind == PlotItem::Kind::FunctionGraph) {
      for (const auto& x : graph_vertices(item.map, w)) {
        Rational v = item.map(x);
        y_lo = std::min(y_lo, v);
        y_hi = std::max(y_hi, v);
      }
    } else if (item.kind == PlotItem::Kind::LeafArcs) {
      for (const auto& leaf : item.leaves) y_hi = std::max(y_hi, Rational((leaf.b - leaf.a) / 2 + 1));
    }
  }
  Rational pad = (y_hi - y_lo) / 20;
  Transform tr{w.left, w.right, y_lo - pad, y_hi + pad};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // Axis: the diagonal reference and the x-axis line.
  out << "<line x1=\"" << tr.x(w.left) << "\" y1=\"" << tr.y(Rational(0)) << "\" x2=\""
      << tr.x(w.right) << "\" y2=\"" << tr.y(Rational(0))
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << tr.x(w.left) << "\" y1=\"" << tr.y(w.left) << "\" x2=\"" << tr.x(w.right)
      << "\" y2=\"" << tr.y(w.right) << "\" stroke=\"#dddddd\" stroke-dasharray=\"4 3\"/>\n";

  int color_index = 0;
  int legend_y = kMargin;
  for (const auto& item : spec.items) {
    const char* color = kPalette[color_index % 6];
    ++color_index;
    switch (item.kind) {
      case PlotItem::Kind::FunctionGraph: {
        if (item.shade_signs) {
          FixedSet fs = fixed_set(item.map, w);
          for (const auto& comp : fs.complement) {
            const char* fill = comp.sign > 0 ? "#d9ead3" : "#f4cccc";
            out << "<rect x=\"" << tr.x(comp.lo) << "\" y=\"" << kMargin << "\" width=\""
                << fixed_decimal((comp.hi - comp.lo) / (w.right - w.left) *
                                     (kWidth - 2 * kMargin),
                                 2)
                << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"" << fill
                << "\" opacity=\"0.5\"/>\n";
          }
        }
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& x : graph_vertices(item.map, w)) {
          if (!first) out << ' ';
          first = false;
          out << tr.x(x) << ',' << tr.y(item.map(x));
        }
        out << "\"/>\n";
        break;
      }
      case PlotItem::Kind::OrbitPoints: {
        for (const auto& p : item.points) {
          if (p < w.left || p > w.right) continue;
          out << "<circle cx=\"" << tr.x(p) << "\" cy=\"" << tr.y(Rational(0))
              << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        break;
      }
      case PlotItem::Kind::LeafArcs: {
        for (const auto& leaf : item.leaves) {
          // Arc radius in pixel units.
          Rational r = (leaf.b - leaf.a) / 2 / (w.right - w.left) * (kWidth - 2 * kMargin);
          out << "<path fill=\"none\" stroke=\"" << color << "\" d=\"M " << tr.x(leaf.a) << ' '
              << tr.y(Rational(0)) << " A " << fixed_decimal(r, 2) << ' ' << fixed_decimal(r, 2)
              << " 0 0 1 " << tr.x(leaf.b) << ' ' << tr.y(Rational(0)) << "\"/>\n";
        }
        break;
      }
    }
    out << "<text x=\"" << kWidth - kMargin - 180 << "\" y=\"" << legend_y << "\" fill=\"" << color
        << "\" font-size=\"13\" font-family=\"monospace\">" << item.label << "</text>\n";
    legend_y += 18;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lineact
