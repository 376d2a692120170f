#include "lineact/suspension.hpp"

#include <algorithm>
#include <map>

#include "lineact/families.hpp"

namespace lineact {

namespace {

bool odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace

CantorPoint CantorPoint::from_value(const Rational& value) {
  if (!odd(Integer(value.get_den())))
    throw std::invalid_argument("cantor point: denominator must be odd (2-adic integer)");
  CantorPoint p;
  p.value_ = value;
  return p;
}

CantorPoint CantorPoint::from_digits(const std::string& preword, const std::string& period) {
  if (period.empty()) throw std::invalid_argument("cantor point: empty period");
  for (char c : preword + period)
    if (c != '0' && c != '1') throw std::invalid_argument("cantor point: digits must be 0/1");
  // value = sum preword_i 2^i + 2^|preword| * (sum period_j 2^j) / (1 - 2^|period|)
  Integer pre(0);
  for (std::size_t i = preword.size(); i-- > 0;) {
    pre <<= 1;
    if (preword[i] == '1') pre += 1;
  }
  Integer per(0);
  for (std::size_t i = period.size(); i-- > 0;) {
    per <<= 1;
    if (period[i] == '1') per += 1;
  }
  Integer two_p(1);
  mpz_mul_2exp(two_p.get_mpz_t(), two_p.get_mpz_t(), period.size());
  Integer two_l(1);
  mpz_mul_2exp(two_l.get_mpz_t(), two_l.get_mpz_t(), preword.size());
  Rational tail = Rational(per) / Rational(1 - two_p);
  Rational value = Rational(pre) + Rational(two_l) * tail;
  value.canonicalize();
  return from_value(value);
}

int CantorPoint::digit(std::size_t i) const {
  // d_0 = value mod 2 (denominator odd), then iterate x -> (x - d)/2.
  Rational x = value_;
  for (std::size_t k = 0;; ++k) {
    Integer num = x.get_num(), den = x.get_den();
    Integer m = num * den;  // num/den mod 2 == num*den mod 2 for odd den
    int d = odd(m) ? 1 : 0;
    if (k == i) return d;
    x = (x - d) / 2;
  }
}

std::optional<unsigned long> CantorPoint::first_one() const {
  if (value_ == 0) return std::nullopt;
  // Digits 0..v-1 vanish and digit v is 1, where v = v_2(numerator).
  Integer num = value_.get_num();
  return mpz_scan1(num.get_mpz_t(), 0);
}

std::pair<std::string, std::string> CantorPoint::digits() const {
  // Expand digits until the rational state repeats; the first repeat gives
  // the minimal preword and period.
  std::map<Rational, std::size_t> seen;
  std::string out;
  Rational x = value_;
  while (true) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      std::size_t start = it->second;
      return {out.substr(0, start), out.substr(start)};
    }
    seen.emplace(x, out.size());
    Integer m = Integer(x.get_num()) * Integer(x.get_den());
    int d = odd(m) ? 1 : 0;
    out.push_back(d ? '1' : '0');
    x = (x - d) / 2;
  }
}

SuspensionPoint suspension_point(const CantorPoint& x, const Rational& t) {
  Integer shift = rational_floor(t);
  return SuspensionPoint{x.step(shift), t - Rational(shift)};
}

SuspensionPoint flow(const SuspensionPoint& p, const Rational& t) {
  return suspension_point(p.base, p.time + t);
}

unsigned long cylinder_index(const CantorPoint& x) {
  auto pos = x.first_one();
  if (!pos)
    throw ExcludedOrbit("point lies over 0^inf: the local map there is not PL");
  return 1 + *pos;
}

ChartElement ChartElement::identity() { return ChartElement(); }

ChartElement ChartElement::diagonal(PLMap local_on_unit) {
  if (!agree_outside(local_on_unit, PLMap::identity(), rat(0), rat(1)))
    throw std::invalid_argument("diagonal chart element: support must lie inside (0,1)");
  ChartElement e;
  e.kind_ = Kind::Diagonal;
  e.local_ = std::move(local_on_unit);
  return e;
}

ChartElement ChartElement::tower() {
  ChartElement e;
  e.kind_ = Kind::Tower;
  return e;
}

namespace {

// Thompson's F generators on [0,1]: A has breaks (1/2 -> 1/4, 3/4 -> 1/2),
// B is the identity on [0,1/2] and a rescaled A on [1/2,1].
PLMap thompson_a_unit() {
  std::vector<std::pair<Rational, Rational>> nodes{
      {rat(0), rat(0)}, {rat(1, 2), rat(1, 4)}, {rat(3, 4), rat(1, 2)}, {rat(1), rat(1)}};
  return PLMap::compactly_supported(nodes);
}

PLMap thompson_b_unit() {
  std::vector<std::pair<Rational, Rational>> nodes{{rat(0), rat(0)},
                                                   {rat(1, 2), rat(1, 2)},
                                                   {rat(3, 4), rat(5, 8)},
                                                   {rat(7, 8), rat(3, 4)},
                                                   {rat(1), rat(1)}};
  return PLMap::compactly_supported(nodes);
}

// Rescale a map supported on (0,1) to J = (1/16, 15/16) by the affine chart.
PLMap rescale_to_j(const PLMap& unit_map) {
  PLMap chart = PLMap::affine(rat(7, 8), rat(1, 16));
  return compose(chart, compose(unit_map, chart.inverse()));
}

// The index m from which f_m stabilizes at t: least m with 4^-(m+1) <= |t|.
int stabilization_index(const Rational& t) {
  Rational a = rat(1, 4);
  int m = 1;
  while (a / 4 > abs(t)) {
    a /= 4;
    ++m;
    if (m > 4096) throw std::logic_error("stabilization index exploded");
  }
  return m;
}

// Forward value of the tower map on the cylinder of x at time u, with the
// limit map at 0^inf evaluated through the stabilization property: f_n(u)
// equals f_m(u) as soon as |u| clears the m-th refinement radius.
Rational tower_forward(const CantorPoint& x, const Rational& u) {
  if (x.value() == 0) {
    if (u == 0) return Rational(0);  // the limit map fixes 0
    return dyadic_sequence(stabilization_index(u))(u);
  }
  int n = static_cast<int>(cylinder_index(x));
  int m = (u != 0) ? std::min(n, stabilization_index(u)) : n;
  return dyadic_sequence(m)(u);
}

// Inverse value: stabilization must be certified on the preimage side, so
// the index grows until the preimage clears the refinement radius (or the
// finite cylinder index is reached).
Rational tower_inverse(const CantorPoint& x, const Rational& u) {
  bool limit_map = x.value() == 0;
  if (limit_map && u == 0) return Rational(0);
  int cap = limit_map ? 0 : static_cast<int>(cylinder_index(x));
  int m = (u != 0) ? stabilization_index(u) : cap;
  if (!limit_map) m = std::min(m, cap);
  if (m < 1) m = 1;
  while (true) {
    Rational preimage = dyadic_sequence(m).inverse()(u);
    if (!limit_map && m >= cap) return preimage;
    if (abs(preimage) >= pow2(-2 * (m + 1))) return preimage;
    ++m;
    if (m > 4096) throw std::logic_error("tower inverse failed to stabilize");
  }
}

}  // namespace

ChartElement element_f() { return ChartElement::tower(); }

std::pair<ChartElement, ChartElement> thompson_generators_on_j() {
  return {ChartElement::diagonal(rescale_to_j(thompson_a_unit())),
          ChartElement::diagonal(rescale_to_j(thompson_b_unit()))};
}

std::vector<ChartTraceRow> chart_trace(const SuspensionPoint& y, long k_lo, long k_hi) {
  std::vector<ChartTraceRow> rows;
  for (long k = k_lo; k <= k_hi; ++k) {
    CantorPoint base = y.base.step(k);
    unsigned long n = cylinder_index(base);
    std::string cylinder(n - 1, '0');
    cylinder.push_back('1');
    rows.push_back(ChartTraceRow{k, std::move(cylinder), static_cast<int>(n)});
  }
  return rows;
}

SuspensionGroup SuspensionGroup::standard() {
  SuspensionGroup g;
  g.names_ = {"f", "A", "B"};
  g.elements_.push_back(element_f());
  auto [a, b] = thompson_generators_on_j();
  g.elements_.push_back(std::move(a));
  g.elements_.push_back(std::move(b));
  return g;
}

Rational SuspensionGroup::letter_tau(int gen, int sign, const SuspensionPoint& p) const {
  const ChartElement& e = element(gen);
  switch (e.kind()) {
    case ChartElement::Kind::Identity:
      return Rational(0);
    case ChartElement::Kind::Diagonal: {
      // J lies inside (0,1), so normalized time is already the chart time.
      const Rational& t = p.time;
      Rational image = sign > 0 ? e.local()(t) : e.local().inverse()(t);
      return image - t;
    }
    case ChartElement::Kind::Tower: {
      Rational r = ChartElement::tower_radius();
      CantorPoint chart_base = p.base;
      Rational u = p.time;
      if (p.time < r) {
        // chart time u = t in [0, 1/4)
      } else if (p.time > 1 - r) {
        chart_base = p.base.step(1);
        u = p.time - 1;  // in (-1/4, 0)
      } else {
        return Rational(0);
      }
      Rational image = sign > 0 ? tower_forward(chart_base, u) : tower_inverse(chart_base, u);
      return image - u;
    }
  }
  return Rational(0);
}

Rational SuspensionGroup::tau(const Word& w, const SuspensionPoint& p) const {
  // tau_{gh}(p) = tau_g(h.p) + tau_h(p): accumulate right-to-left.
  Rational total(0);
  SuspensionPoint cur = p;
  const auto sylls = w.syllables();
  for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
    int sign = it->exp > 0 ? 1 : -1;
    long reps = it->exp > 0 ? it->exp : -it->exp;
    for (long i = 0; i < reps; ++i) {
      Rational d = letter_tau(it->gen, sign, cur);
      cur = flow(cur, d);
      total += d;
    }
  }
  return total;
}

SuspensionPoint SuspensionGroup::act(const Word& w, const SuspensionPoint& p) const {
  return flow(p, tau(w, p));
}

PLMap SuspensionGroup::letter_rho(const SuspensionPoint& y, int gen, int sign, const Rational& lo,
                                  const Rational& hi) const {
  const ChartElement& e = element(gen);
  if (e.kind() == ChartElement::Kind::Identity) return PLMap::identity();

  // Along the flow line of y = (x, t0), the letter acts on the s-axis by the
  // translate of its local map anchored at each integer chart: the factor at
  // integer j is T_{j - t0} (local_j) T_{t0 - j}, supported in (j - t0) + D
  // where D is the local support. Factors have disjoint supports, so the
  // graph is assembled piece by piece.
  const Rational& t0 = y.time;
  std::vector<Rational> bps;
  std::vector<AffinePiece> pieces;
  pieces.push_back(AffinePiece{Rational(1), Rational(0)});

  Integer j_lo = rational_floor(lo + t0) - 1;
  Integer j_hi = rational_floor(hi + t0) + 2;
  for (Integer j = j_lo; j <= j_hi; j += 1) {
    PLMap local;
    if (e.kind() == ChartElement::Kind::Diagonal) {
      local = e.local();
    } else {
      CantorPoint base_j = y.base.step(j);
      if (base_j.value() == 0)
        throw ExcludedOrbit("rho: flow line passes through the chart of 0^inf");
      local = dyadic_sequence(static_cast<int>(cylinder_index(base_j)));
      // Tower charts are centered at the integers: shift domain by -1/4..1/4
      // around j, i.e. the local map acts on (-1/4, 1/4).
    }
    if (sign < 0) local = local.inverse();
    Rational shift = Rational(j) - t0;
    PLMap factor = translate_conjugate(local, shift);
    for (std::size_t i = 0; i < factor.breakpoints().size(); ++i) {
      bps.push_back(factor.breakpoints()[i]);
      pieces.push_back(factor.piece(i + 1));
    }
  }
  return PLMap(std::move(bps), std::move(pieces));
}

PLMap SuspensionGroup::rho(const SuspensionPoint& y, const Word& w, const Window& window) const {
  // Letters displace by less than 1, so intermediate images of the window
  // stay within |w| of it; letter graphs are assembled with that margin.
  Rational margin = rat(w.length() + 1);
  Rational lo = window.left - margin, hi = window.right + margin;
  PLMap acc = PLMap::identity();
  const auto sylls = w.syllables();
  for (const auto& s : sylls) {
    int sign = s.exp > 0 ? 1 : -1;
    long reps = s.exp > 0 ? s.exp : -s.exp;
    for (long i = 0; i < reps; ++i) acc = compose(acc, letter_rho(y, s.gen, sign, lo, hi));
  }
  return acc;
}

RecurrenceReport recurrence_experiment(const SuspensionGroup& g, const SuspensionPoint& y,
                                       std::span<const Word> words, const Window& window,
                                       int max_n) {
  if (is_integer(y.base.value()))
    throw ExcludedOrbit("recurrence experiment: base point lies on the flow line of z");
  RecurrenceReport report;
  std::vector<PLMap> base_maps;
  for (const auto& w : words) base_maps.push_back(g.rho(y, w, window));
  for (int n = 0; n <= max_n; ++n) {
    Integer t(1);
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(n));
    SuspensionPoint shifted = flow(y, Rational(t));
    Rational dist(0);
    for (std::size_t i = 0; i < words.size(); ++i) {
      PLMap moved = g.rho(shifted, words[i], window);
      Rational d = sup_distance(base_maps[i], moved, window);
      if (d > dist) dist = d;
    }
    report.rows.push_back(RecurrenceRow{n, t, dist});
  }
  for (std::size_t i = report.rows.size(); i-- > 0;) {
    if (report.rows[i].distance != 0) break;
    report.threshold = report.rows[i].n;
  }
  return report;
}

}  // namespace lineact
