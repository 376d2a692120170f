#include "lineact/families.hpp"

#include <algorithm>
#include <mutex>

namespace lineact {

namespace {

void check_signs(const std::string& signs) {
  if (signs.empty()) throw std::invalid_argument("omega word: empty sign string");
  for (char c : signs)
    if (c != '+' && c != '-') throw std::invalid_argument("omega word: signs must be '+'/'-'");
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

OmegaWord OmegaWord::periodic(const std::string& signs) {
  check_signs(signs);
  OmegaWord w;
  w.periodic_ = true;
  w.signs_ = signs;
  return w;
}

OmegaWord OmegaWord::finite(const std::string& signs, long offset) {
  check_signs(signs);
  OmegaWord w;
  w.periodic_ = false;
  w.signs_ = signs;
  w.offset_ = offset;
  return w;
}

int OmegaWord::at(long n) const {
  if (periodic_) return signs_[static_cast<std::size_t>(mod(n, static_cast<long>(signs_.size())))] == '+' ? 1 : -1;
  long i = n - offset_;
  if (i < 0 || i >= static_cast<long>(signs_.size())) return 1;
  return signs_[static_cast<std::size_t>(i)] == '+' ? 1 : -1;
}

OmegaWord OmegaWord::shifted(long k) const {
  OmegaWord w = *this;
  if (periodic_) {
    long p = static_cast<long>(signs_.size());
    // (shifted(k))_n = at(n - k): rotate the pattern.
    std::string rotated(signs_.size(), '+');
    for (long i = 0; i < p; ++i)
      rotated[static_cast<std::size_t>(i)] = signs_[static_cast<std::size_t>(mod(i - k, p))];
    w.signs_ = rotated;
  } else {
    w.offset_ = offset_ + k;
  }
  return w;
}

long OmegaWord::period() const {
  if (!periodic_) throw std::invalid_argument("period() on a finite-support word");
  return static_cast<long>(signs_.size());
}

std::string OmegaWord::str() const {
  return (periodic_ ? "periodic:" : "finite@" + std::to_string(offset_) + ":") + signs_;
}

namespace {

// Minimal period of a pattern (the shortest rotation-generating prefix).
std::string minimal_period(const std::string& signs) {
  for (std::size_t p = 1; p <= signs.size(); ++p) {
    if (signs.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < signs.size() && ok; ++i) ok = signs[i] == signs[i - p];
    if (ok) return signs.substr(0, p);
  }
  return signs;
}

// Core of a finite-support word: the span from the first to the last '-'.
std::string minus_core(const std::string& signs) {
  auto first = signs.find('-');
  if (first == std::string::npos) return "";
  auto last = signs.rfind('-');
  return signs.substr(first, last - first + 1);
}

}  // namespace

bool shift_orbit_equal(const OmegaWord& w1, const OmegaWord& w2) {
  if (w1.is_periodic() != w2.is_periodic())
    throw UnsupportedOmegaPair("shift_orbit_equal: mixed representation classes");
  if (w1.is_periodic()) {
    std::string p1 = minimal_period(w1.pattern());
    std::string p2 = minimal_period(w2.pattern());
    if (p1.size() != p2.size()) return false;
    std::string doubled = p1 + p1;
    return doubled.find(p2) != std::string::npos;
  }
  // The core between the outermost '-' entries is a shift-invariant.
  return minus_core(w1.pattern()) == minus_core(w2.pattern());
}

namespace {

// Node pattern of the base lift g on one period [n/2, (n+1)/2]: fixes the
// endpoints, sends the quarter point up by 1/8. sign = -1 gives g^-1.
void append_cell_nodes(std::vector<std::pair<Rational, Rational>>& nodes, long n, int sign) {
  Rational base = rat(n, 2);
  nodes.emplace_back(base, base);
  if (sign > 0)
    nodes.emplace_back(base + rat(1, 4), base + rat(3, 8));
  else
    nodes.emplace_back(base + rat(3, 8), base + rat(1, 4));
}

PLMap assemble_omega_lift(const OmegaWord& omega, long cell_lo, long cell_hi, const Rational& shift) {
  // Cells n in [cell_lo, cell_hi): [n/2, (n+1)/2] + shift.
  std::vector<std::pair<Rational, Rational>> nodes;
  for (long n = cell_lo; n < cell_hi; ++n) append_cell_nodes(nodes, n, omega.at(n));
  nodes.emplace_back(rat(cell_hi, 2), rat(cell_hi, 2));
  if (shift != 0)
    for (auto& [x, y] : nodes) {
      x += shift;
      y += shift;
    }
  return PLMap::compactly_supported(nodes);
}

}  // namespace

PLMap f2_base_lift(const Window& window) {
  long lo = static_cast<long>(rational_floor(2 * window.left).get_si());
  long hi = static_cast<long>(rational_floor(2 * window.right).get_si()) + 1;
  return assemble_omega_lift(OmegaWord::periodic("+"), lo, hi, Rational(0));
}

WindowedAction f2_family(const OmegaWord& omega, const Window& window) {
  // Snap the cover outward to the fixed-point grids of the two generators.
  long g_lo = static_cast<long>(rational_floor(2 * window.left).get_si());
  long g_hi = static_cast<long>(rational_floor(2 * window.right).get_si()) + 1;
  PLMap g_omega = assemble_omega_lift(omega, g_lo, g_hi, Rational(0));

  long h_lo = static_cast<long>(rational_floor(2 * (window.left - rat(1, 4))).get_si());
  long h_hi = static_cast<long>(rational_floor(2 * (window.right - rat(1, 4))).get_si()) + 1;
  PLMap h = assemble_omega_lift(OmegaWord::periodic("+"), h_lo, h_hi, rat(1, 4));

  Representation rep(MarkedGroup({"g", "h"}), {std::move(g_omega), std::move(h)});
  return WindowedAction{std::move(rep), window, true};
}

Representation bs_affine(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bs_affine: need m, n >= 1");
  Word relator = Word::generator(0) * Word::generator(1, m) * Word::generator(0, -1) *
                 Word::generator(1, -n);
  MarkedGroup group({"a", "b"}, {relator});
  return Representation(group, {PLMap::affine(rat(n, m), rat(0)), PLMap::translation(rat(1))});
}

PLMap bs_default_endpoint(long m, long n) {
  std::vector<std::pair<Rational, Rational>> nodes{
      {rat(0), rat(0)}, {rat(m, 2), rat(n, 4)}, {rat(m), rat(n)}};
  AffinePiece left{rat(n, 2 * m), rat(0)};
  Rational right_slope = rat(3 * n, 2 * m);
  AffinePiece right{right_slope, rat(n) - right_slope * rat(m)};
  return PLMap::through_points(nodes, left, right);
}

Representation bs_path(long m, long n, const Rational& s, const PLMap& psi0, const PLMap& psi1,
                       long periods) {
  if (m < 1 || n < 1) throw std::invalid_argument("bs_path: need m, n >= 1");
  if (s < 0 || s > 1) throw std::invalid_argument("bs_path: s must lie in [0, 1]");
  if (periods < 2) throw std::invalid_argument("bs_path: need at least two periods");
  for (const PLMap* psi : {&psi0, &psi1}) {
    if ((*psi)(rat(0)) != 0 || (*psi)(rat(m)) != rat(n))
      throw EndpointIncompatibility("bs_path: endpoint map must fix 0 and send m to n");
  }

  // Pointwise convex combination on the fundamental window [0, m].
  std::vector<Rational> cut{rat(0)};
  for (const auto& b : psi0.breakpoints())
    if (b > 0 && b < rat(m)) cut.push_back(b);
  for (const auto& b : psi1.breakpoints())
    if (b > 0 && b < rat(m)) cut.push_back(b);
  cut.push_back(rat(m));
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  std::vector<std::pair<Rational, Rational>> base_nodes;
  for (const auto& x : cut)
    base_nodes.emplace_back(x, (1 - s) * psi0(x) + s * psi1(x));

  // Periodic extension phi(x + m) = phi(x) + n over [-periods*m, periods*m],
  // affine model beyond (it matches at the seams since the window endpoints
  // are integer multiples of m and n).
  std::vector<std::pair<Rational, Rational>> nodes;
  for (long j = -periods; j < periods; ++j)
    for (std::size_t i = 0; i + 1 < base_nodes.size(); ++i)
      nodes.emplace_back(base_nodes[i].first + rat(j * m), base_nodes[i].second + rat(j * n));
  nodes.emplace_back(rat(periods * m), rat(periods * n));
  AffinePiece affine_model{rat(n, m), rat(0)};
  PLMap a = PLMap::through_points(nodes, affine_model, affine_model);

  // The periodicity equation phi(a)(x+m) = phi(a)(x)+n can only fail where a
  // period seam meets the affine tails, which keeps the relator exactly the
  // identity on [-(periods-1)n, (periods-1)n].
  Word relator = Word::generator(0) * Word::generator(1, m) * Word::generator(0, -1) *
                 Word::generator(1, -n);
  MarkedGroup group({"a", "b"}, {relator});
  Rational guard = rat((periods - 1) * n);
  return Representation::window_checked(group, {std::move(a), PLMap::translation(rat(1))},
                                        Window(-guard, guard));
}

BrinNavasAction::BrinNavasAction(PLMap f, PLMap w0)
    : f_(std::move(f)), w0_(std::move(w0)), x_(0), y_(0), rep_(MarkedGroup({"f", "w0"}), {f_, w0_}) {
  if (w0_.is_identity()) throw FamilyPrecondition("brin_navas: w0 has empty support");

  // Support of w0 must be a single bounded interval (x, y).
  Rational pad = rat(1);
  Rational lo = w0_.breakpoints().front() - pad;
  Rational hi = w0_.breakpoints().back() + pad;
  FixedSet fs = fixed_set(w0_, Window(lo, hi));
  if (fs.complement.size() != 1)
    throw FamilyPrecondition("brin_navas: support of w0 is not a single interval");
  x_ = fs.complement[0].lo;
  y_ = fs.complement[0].hi;
  if (x_ == lo || y_ == hi)
    throw FamilyPrecondition("brin_navas: support of w0 is unbounded");

  FixedSet f_fix = fixed_set(f_, Window(x_, y_));
  if (f_fix.components.size() != 1 || f_fix.components[0].lo != f_fix.components[0].hi)
    throw FamilyPrecondition("brin_navas: f must fix exactly one point inside the support");
  const Rational& p = f_fix.components[0].lo;
  if (!(x_ < p && p < y_))
    throw FamilyPrecondition("brin_navas: fixed point of f not interior to the support");
  if (!(f_(x_) < x_))
    throw FamilyPrecondition("brin_navas: need f(x) < x at the left support endpoint, got f(" +
                             to_string(x_) + ") = " + to_string(f_(x_)));
  if (!(y_ < f_(y_)))
    throw FamilyPrecondition("brin_navas: need y < f(y) at the right support endpoint, got f(" +
                             to_string(y_) + ") = " + to_string(f_(y_)));
  PLMap f_inv = f_.inverse();
  if (w0_(f_inv(x_)) != f_inv(y_))
    throw FamilyPrecondition("brin_navas: w0(f^-1(x)) = f^-1(y) fails: w0(" + to_string(f_inv(x_)) +
                             ") = " + to_string(w0_(f_inv(x_))) + " != " + to_string(f_inv(y_)));

  // The defining wreath mechanism: supp(w1 w0 w1^-1) must miss supp(w0).
  PLMap w1 = w(1);
  PLMap conj = compose(w1, compose(w0_, w1.inverse()));
  Rational clo = std::min(x_, conj.breakpoints().front()) - pad;
  Rational chi = std::max(y_, conj.breakpoints().back()) + pad;
  FixedSet conj_fs = fixed_set(conj, Window(clo, chi));
  for (const auto& c : conj_fs.complement)
    if (c.lo < y_ && x_ < c.hi)
      throw FamilyPrecondition("brin_navas: conjugated support overlaps supp(w0)");
}

BrinNavasAction BrinNavasAction::standard() {
  std::vector<std::pair<Rational, Rational>> nodes{
      {rat(-1), rat(-1)}, {rat(-1, 2), rat(1, 2)}, {rat(1), rat(1)}};
  return BrinNavasAction(PLMap::affine(rat(2), rat(0)), PLMap::compactly_supported(nodes));
}

PLMap BrinNavasAction::w(long k) const {
  return compose(f_.pow(k), compose(w0_, f_.pow(-k)));
}

std::vector<std::pair<Rational, Rational>> dyadic_cell(const Rational& p, const Rational& q,
                                                       const Rational& r, const Rational& s) {
  if (!(p < q && r < s)) throw std::invalid_argument("dyadic_cell: degenerate cell");
  Rational alpha = q - p, beta = s - r;
  Rational ratio = beta / alpha;
  std::vector<std::pair<Rational, Rational>> nodes{{p, r}};
  if (!is_power_of_two(ratio)) {
    // Largest k with 2^k <= ratio; slopes 2^{k+1} then 2^k.
    long k = static_cast<long>(mpz_sizeinbase(ratio.get_num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(ratio.get_den().get_mpz_t(), 2));
    if (pow2(k) > ratio) --k;
    Rational t = beta / pow2(k) - alpha;  // in (0, alpha)
    nodes.emplace_back(p + t, r + pow2(k + 1) * t);
  }
  nodes.emplace_back(q, s);
  return nodes;
}

namespace {

PLMap build_f1() {
  std::vector<std::pair<Rational, Rational>> nodes;
  auto extend = [&nodes](std::vector<std::pair<Rational, Rational>> cell) {
    if (!nodes.empty()) cell.erase(cell.begin());  // endpoints shared between cells
    nodes.insert(nodes.end(), cell.begin(), cell.end());
  };
  extend(dyadic_cell(rat(-1, 4), rat(-1, 16), rat(-1, 4), rat(-1, 32)));
  extend(dyadic_cell(rat(-1, 16), rat(0), rat(-1, 32), rat(1, 32)));
  extend(dyadic_cell(rat(0), rat(1, 4), rat(1, 32), rat(1, 4)));
  return PLMap::compactly_supported(nodes);
}

PLMap extend_dyadic_sequence(const PLMap& fn, int n) {
  // Replace f_n on [-a, a], a = 4^-(n+1), by the finer profile with
  // f_{n+1}(-a/4) = -a/8 and f_{n+1}(0) = a/8.
  Rational a = pow2(-2 * (n + 1));
  Rational a_next = a / 4;
  if (fn(-a) != -a / 2)
    throw std::logic_error("dyadic_sequence: unexpected profile at the annulus boundary");
  std::vector<std::pair<Rational, Rational>> nodes;
  for (const auto& b : fn.breakpoints())
    if (b < -a) nodes.emplace_back(b, fn(b));
  nodes.emplace_back(-a, fn(-a));
  auto extend = [&nodes](std::vector<std::pair<Rational, Rational>> cell) {
    cell.erase(cell.begin());
    nodes.insert(nodes.end(), cell.begin(), cell.end());
  };
  extend(dyadic_cell(-a, -a_next, -a / 2, -a_next / 2));
  extend(dyadic_cell(-a_next, rat(0), -a_next / 2, a_next / 2));
  extend(dyadic_cell(rat(0), a, a_next / 2, fn(a)));
  for (const auto& b : fn.breakpoints())
    if (b > a) nodes.emplace_back(b, fn(b));
  return PLMap::compactly_supported(nodes);
}

}  // namespace

PLMap dyadic_sequence(int n) {
  if (n < 1) throw std::invalid_argument("dyadic_sequence: need n >= 1");
  static std::mutex mu;
  static std::vector<PLMap> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(build_f1());
  while (static_cast<int>(cache.size()) < n)
    cache.push_back(extend_dyadic_sequence(cache.back(), static_cast<int>(cache.size())));
  return cache[static_cast<std::size_t>(n - 1)];
}

}  // namespace lineact
