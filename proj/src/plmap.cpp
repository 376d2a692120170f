#include "lineact/plmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace lineact {

namespace {

// Index of the piece owning x, given the breakpoint sequence. Pieces meet
// continuously at breakpoints, so ties can go either way; we use the piece
// to the left of a breakpoint.
std::size_t piece_index(const std::vector<Rational>& bps, const Rational& x) {
  return static_cast<std::size_t>(std::lower_bound(bps.begin(), bps.end(), x) - bps.begin());
}

}  // namespace

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  validate_and_normalize();
}

void PLMap::validate_and_normalize() {
  if (pieces_.size() != breakpoints_.size() + 1)
    throw std::invalid_argument("PLMap: piece/breakpoint count mismatch");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("PLMap: breakpoints not strictly increasing");
  for (const auto& p : pieces_)
    if (!(p.slope > 0)) throw std::invalid_argument("PLMap: non-positive slope");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i)
    if (pieces_[i].at(breakpoints_[i]) != pieces_[i + 1].at(breakpoints_[i]))
      throw std::invalid_argument("PLMap: discontinuity at breakpoint " + to_string(breakpoints_[i]));

  // Merge collinear neighbors so equality is decidable structurally.
  std::vector<Rational> nb;
  std::vector<AffinePiece> np;
  np.push_back(pieces_[0]);
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (pieces_[i + 1] == np.back()) continue;
    nb.push_back(breakpoints_[i]);
    np.push_back(pieces_[i + 1]);
  }
  breakpoints_ = std::move(nb);
  pieces_ = std::move(np);
}

PLMap PLMap::affine(const Rational& slope, const Rational& intercept) {
  return PLMap({}, {AffinePiece{slope, intercept}});
}

PLMap PLMap::through_points(std::span<const std::pair<Rational, Rational>> nodes,
                            const AffinePiece& left, const AffinePiece& right) {
  if (nodes.empty()) throw std::invalid_argument("through_points: no nodes");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i].first < nodes[i + 1].first && nodes[i].second < nodes[i + 1].second))
      throw std::invalid_argument("through_points: nodes not strictly increasing");
  if (left.at(nodes.front().first) != nodes.front().second ||
      right.at(nodes.back().first) != nodes.back().second)
    throw std::invalid_argument("through_points: end pieces do not meet the boundary nodes");

  std::vector<Rational> bps;
  std::vector<AffinePiece> pieces;
  pieces.push_back(left);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto& [x0, y0] = nodes[i];
    const auto& [x1, y1] = nodes[i + 1];
    Rational slope = (y1 - y0) / (x1 - x0);
    bps.push_back(x0);
    pieces.push_back(AffinePiece{slope, y0 - slope * x0});
  }
  bps.push_back(nodes.back().first);
  pieces.push_back(right);
  return PLMap(std::move(bps), std::move(pieces));
}

PLMap PLMap::compactly_supported(std::span<const std::pair<Rational, Rational>> nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("compactly_supported: need at least two nodes");
  if (nodes.front().second != nodes.front().first || nodes.back().second != nodes.back().first)
    throw std::invalid_argument("compactly_supported: boundary nodes must be fixed points");
  AffinePiece id{Rational(1), Rational(0)};
  return through_points(nodes, id, id);
}

const AffinePiece& PLMap::piece_at(const Rational& x) const {
  return pieces_[piece_index(breakpoints_, x)];
}

Rational PLMap::operator()(const Rational& x) const { return piece_at(x).at(x); }

PLMap PLMap::inverse() const {
  std::vector<Rational> bps;
  bps.reserve(breakpoints_.size());
  for (const auto& b : breakpoints_) bps.push_back((*this)(b));
  std::vector<AffinePiece> pieces;
  pieces.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    Rational inv_slope = 1 / p.slope;
    pieces.push_back(AffinePiece{inv_slope, -p.intercept * inv_slope});
  }
  return PLMap(std::move(bps), std::move(pieces));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // Candidate breakpoints: those of g, plus preimages of those of f.
  PLMap g_inv = g.inverse();
  std::vector<Rational> cand(g.breakpoints().begin(), g.breakpoints().end());
  for (const auto& b : f.breakpoints()) cand.push_back(g_inv(b));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<AffinePiece> pieces;
  pieces.reserve(cand.size() + 1);
  for (std::size_t i = 0; i <= cand.size(); ++i) {
    Rational probe;
    if (cand.empty())
      probe = 0;
    else if (i == 0)
      probe = cand.front() - 1;
    else if (i == cand.size())
      probe = cand.back() + 1;
    else
      probe = (cand[i - 1] + cand[i]) / 2;
    const AffinePiece& pg = g.piece_at(probe);
    const AffinePiece& pf = f.piece_at(g(probe));
    pieces.push_back(AffinePiece{pf.slope * pg.slope, pf.slope * pg.intercept + pf.intercept});
  }
  return PLMap(std::move(cand), std::move(pieces));
}

PLMap PLMap::pow(long k) const {
  PLMap base = k >= 0 ? *this : inverse();
  long n = k >= 0 ? k : -k;
  PLMap acc = identity();
  for (long i = 0; i < n; ++i) acc = compose(base, acc);
  return acc;
}

PLMap translate_conjugate(const PLMap& f, const Rational& t) {
  std::vector<Rational> bps;
  bps.reserve(f.breakpoints().size());
  for (const auto& b : f.breakpoints()) bps.push_back(b + t);
  std::vector<AffinePiece> pieces;
  pieces.reserve(f.piece_count());
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const auto& p = f.piece(i);
    // T_t o (sx + c) o T_{-t} = sx + (c + t - st)
    pieces.push_back(AffinePiece{p.slope, p.intercept + t - p.slope * t});
  }
  return PLMap(std::move(bps), std::move(pieces));
}

bool PLMap::is_dyadic_map() const {
  for (const auto& b : breakpoints_)
    if (!is_dyadic(b)) return false;
  for (const auto& p : pieces_)
    if (!is_power_of_two(p.slope) || !is_dyadic(p.intercept)) return false;
  return true;
}

PLCurve PLCurve::difference(const PLMap& f, const PLMap& g) {
  std::vector<Rational> cand(f.breakpoints().begin(), f.breakpoints().end());
  cand.insert(cand.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  PLCurve d;
  for (std::size_t i = 0; i <= cand.size(); ++i) {
    Rational probe;
    if (cand.empty())
      probe = 0;
    else if (i == 0)
      probe = cand.front() - 1;
    else if (i == cand.size())
      probe = cand.back() + 1;
    else
      probe = (cand[i - 1] + cand[i]) / 2;
    const AffinePiece& pf = f.piece_at(probe);
    const AffinePiece& pg = g.piece_at(probe);
    d.pieces_.push_back(AffinePiece{pf.slope - pg.slope, pf.intercept - pg.intercept});
  }
  d.breakpoints_ = std::move(cand);

  // Drop breakpoints where the two sides are collinear.
  std::vector<Rational> nb;
  std::vector<AffinePiece> np;
  np.push_back(d.pieces_[0]);
  for (std::size_t i = 0; i < d.breakpoints_.size(); ++i) {
    if (d.pieces_[i + 1] == np.back()) continue;
    nb.push_back(d.breakpoints_[i]);
    np.push_back(d.pieces_[i + 1]);
  }
  d.breakpoints_ = std::move(nb);
  d.pieces_ = std::move(np);
  return d;
}

const AffinePiece& PLCurve::piece_at(const Rational& x) const {
  return pieces_[piece_index(breakpoints_, x)];
}

Rational PLCurve::operator()(const Rational& x) const { return piece_at(x).at(x); }

Rational PLCurve::sup_abs_over(const Window& w) const {
  Rational best = abs((*this)(w.left));
  Rational right = abs((*this)(w.right));
  if (right > best) best = right;
  auto lo = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), w.left);
  auto hi = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), w.right);
  for (auto it = lo; it != hi; ++it) {
    Rational v = abs((*this)(*it));
    if (v > best) best = v;
  }
  return best;
}

Rational PLCurve::min_over(const Window& w) const {
  Rational best = (*this)(w.left);
  Rational right = (*this)(w.right);
  if (right < best) best = right;
  auto lo = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), w.left);
  auto hi = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), w.right);
  for (auto it = lo; it != hi; ++it) {
    Rational v = (*this)(*it);
    if (v < best) best = v;
  }
  return best;
}

bool PLCurve::is_zero_outside(const Rational& a, const Rational& b) const {
  // Every piece whose domain has interior in (-inf, a) or (b, inf) must
  // vanish identically; continuity then gives zero on the closed rays.
  AffinePiece zero{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    bool interior_left = (i == 0) || (breakpoints_[i - 1] < a);
    bool interior_right = (i == breakpoints_.size()) || (breakpoints_[i] > b);
    if ((interior_left || interior_right) && !(pieces_[i] == zero)) return false;
  }
  return true;
}

bool PLCurve::positive_on_open(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::invalid_argument("positive_on_open: empty interval");
  if ((*this)(a) < 0 || (*this)(b) < 0) return false;
  auto lo = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), a);
  auto hi = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), b);
  for (auto it = lo; it != hi; ++it)
    if (!((*this)(*it) > 0)) return false;
  // Guard against a piece vanishing identically next to an endpoint root.
  if ((*this)(a) == 0) {
    Rational next = (lo != hi) ? *lo : b;
    if (!((*this)(next) > 0)) return false;
  }
  if ((*this)(b) == 0) {
    Rational prev = (lo != hi) ? *(hi - 1) : a;
    if (!((*this)(prev) > 0)) return false;
  }
  return true;
}

Rational sup_distance(const PLMap& f, const PLMap& g, const Window& w) {
  return PLCurve::difference(f, g).sup_abs_over(w);
}

bool agree_outside(const PLMap& f, const PLMap& g, const Rational& a, const Rational& b) {
  return PLCurve::difference(f, g).is_zero_outside(a, b);
}

FixedSet fixed_set(const PLMap& f, const Window& w) {
  PLCurve d = PLCurve::difference(f, PLMap::identity());

  // Vertex list: window endpoints plus interior breakpoints of f - id.
  std::vector<Rational> verts;
  verts.push_back(w.left);
  auto lo = std::upper_bound(d.breakpoints().begin(), d.breakpoints().end(), w.left);
  auto hi = std::lower_bound(d.breakpoints().begin(), d.breakpoints().end(), w.right);
  verts.insert(verts.end(), lo, hi);
  verts.push_back(w.right);

  // Refine with the exact root of any segment that changes sign, so that
  // afterwards no segment has an interior zero unless it vanishes entirely.
  std::vector<Rational> refined;
  refined.push_back(verts[0]);
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    Rational va = d(verts[i]), vb = d(verts[i + 1]);
    if ((va < 0 && vb > 0) || (va > 0 && vb < 0)) {
      const AffinePiece& p = d.piece_at((verts[i] + verts[i + 1]) / 2);
      refined.push_back(-p.intercept / p.slope);
    }
    refined.push_back(verts[i + 1]);
  }

  // Closed zero set: identically-zero segments plus zero vertices, merged.
  std::vector<ClosedComponent> comps;
  for (std::size_t i = 0; i + 1 < refined.size(); ++i) {
    if (d(refined[i]) == 0 && d(refined[i + 1]) == 0 && d((refined[i] + refined[i + 1]) / 2) == 0)
      comps.push_back(ClosedComponent{refined[i], refined[i + 1]});
  }
  for (const auto& v : refined)
    if (d(v) == 0) comps.push_back(ClosedComponent{v, v});
  std::sort(comps.begin(), comps.end(),
            [](const ClosedComponent& a, const ClosedComponent& b) { return a.lo < b.lo; });
  FixedSet out;
  for (auto& c : comps) {
    if (!out.components.empty() && !(out.components.back().hi < c.lo)) {
      if (out.components.back().hi < c.hi) out.components.back().hi = c.hi;
    } else {
      out.components.push_back(c);
    }
  }

  // Complement gaps carry a constant sign (no zeros inside them).
  Rational cursor = w.left;
  auto emit_gap = [&](const Rational& gap_lo, const Rational& gap_hi) {
    if (!(gap_lo < gap_hi)) return;
    int sign = d((gap_lo + gap_hi) / 2) > 0 ? 1 : -1;
    out.complement.push_back(SignComponent{gap_lo, gap_hi, sign});
  };
  for (const auto& c : out.components) {
    emit_gap(cursor, c.lo);
    cursor = c.hi;
  }
  emit_gap(cursor, w.right);
  return out;
}

}  // namespace lineact
