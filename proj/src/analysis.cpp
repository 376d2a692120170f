#include "lineact/analysis.hpp"

#include <algorithm>

namespace lineact {

StepMeasure::StepMeasure(std::vector<Rational> breakpoints, std::vector<Rational> densities)
    : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
  if (densities_.size() != breakpoints_.size() + 1)
    throw std::invalid_argument("step measure: density/breakpoint count mismatch");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("step measure: breakpoints not increasing");
  for (const auto& d : densities_)
    if (!(d > 0)) throw std::invalid_argument("step measure: densities must be positive");
}

const Rational& StepMeasure::density_at(const Rational& x) const {
  std::size_t i = static_cast<std::size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) - breakpoints_.begin());
  return densities_[i];
}

Rational StepMeasure::mass(const Rational& a, const Rational& b) const {
  if (b < a) throw std::invalid_argument("mass: interval reversed");
  Rational total(0);
  Rational lo = a;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] <= lo) continue;
    Rational hi = std::min(breakpoints_[i], b);
    if (hi <= lo) break;
    total += densities_[i] * (hi - lo);
    lo = hi;
  }
  if (lo < b) total += densities_.back() * (b - lo);
  return total;
}

Rational StepMeasure::signed_mass(const Rational& x, const Rational& wx) const {
  return x <= wx ? mass(x, wx) : -mass(wx, x);
}

namespace {

// Refined partition cells for checking density transport under g: the
// breakpoints of g together with preimages of the measure breakpoints.
std::vector<Rational> transport_cells(const PLMap& g, const StepMeasure& nu) {
  PLMap g_inv = g.inverse();
  std::vector<Rational> cuts(nu.breakpoints().begin(), nu.breakpoints().end());
  for (const auto& b : nu.breakpoints()) cuts.push_back(g_inv(b));
  for (const auto& b : g.breakpoints()) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Probe points, one per refined cell (including both unbounded ends).
std::vector<Rational> cell_probes(const std::vector<Rational>& cuts) {
  std::vector<Rational> probes;
  if (cuts.empty()) {
    probes.push_back(Rational(0));
    return probes;
  }
  probes.push_back(cuts.front() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) probes.push_back((cuts[i] + cuts[i + 1]) / 2);
  probes.push_back(cuts.back() + 1);
  return probes;
}

// Concrete unit-length interval witnessing a transport failure at probe x.
std::pair<Rational, Rational> witness_interval(const Rational& x) { return {x, x + rat(1, 4)}; }

}  // namespace

std::optional<MeasureNotInvariant> measure_invariance_violation(const Representation& rep,
                                                                const StepMeasure& nu) {
  for (int i = 0; i < rep.generator_count(); ++i) {
    const PLMap& g = rep.generator(i);
    auto cuts = transport_cells(g, nu);
    for (const auto& x : cell_probes(cuts)) {
      Rational lhs = nu.density_at(g(x)) * g.piece_at(x).slope;
      if (lhs != nu.density_at(x)) {
        auto [a, b] = witness_interval(x);
        return MeasureNotInvariant(rep.group().generator_names[static_cast<std::size_t>(i)], a, b);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Per-generator scaling constants for a projectively invariant measure.
std::vector<Rational> generator_kappas(const Representation& rep, const StepMeasure& nu) {
  std::vector<Rational> kappas;
  for (int i = 0; i < rep.generator_count(); ++i) {
    const PLMap& g = rep.generator(i);
    auto cuts = transport_cells(g, nu);
    auto probes = cell_probes(cuts);
    std::optional<Rational> kappa;
    for (const auto& x : probes) {
      Rational ratio = nu.density_at(g(x)) * g.piece_at(x).slope / nu.density_at(x);
      if (!kappa) {
        kappa = ratio;
      } else if (*kappa != ratio) {
        auto [a, b] = witness_interval(x);
        throw MeasureNotInvariant(rep.group().generator_names[static_cast<std::size_t>(i)], a, b);
      }
    }
    kappas.push_back(*kappa);
  }
  return kappas;
}

Rational word_kappa(const PLMap& image, const StepMeasure& nu,
                    const std::string& name_for_error) {
  auto cuts = transport_cells(image, nu);
  std::optional<Rational> kappa;
  for (const auto& x : cell_probes(cuts)) {
    Rational ratio = nu.density_at(image(x)) * image.piece_at(x).slope / nu.density_at(x);
    if (!kappa) {
      kappa = ratio;
    } else if (*kappa != ratio) {
      auto [a, b] = witness_interval(x);
      throw MeasureNotInvariant(name_for_error, a, b);
    }
  }
  return *kappa;
}

}  // namespace

Rational conrad_tau(const Representation& rep, const StepMeasure& nu, const Word& w) {
  if (auto violation = measure_invariance_violation(rep, nu)) throw *violation;
  Rational tau = nu.signed_mass(Rational(0), rep.apply(w, Rational(0)));
  // Independence of the basepoint, re-verified at three sample points.
  for (const Rational& x : {rat(17, 5), rat(-23, 7), rat(1, 2)}) {
    Rational other = nu.signed_mass(x, rep.apply(w, x));
    if (other != tau)
      throw std::logic_error("conrad_tau: value depends on the basepoint despite invariance");
  }
  return tau;
}

Rational scaling_cocycle(const Representation& rep, const StepMeasure& nu, const Word& w) {
  std::vector<Rational> kappas = generator_kappas(rep, nu);
  Rational product(1);
  for (const auto& s : w.syllables()) {
    Rational base = kappas[static_cast<std::size_t>(s.gen)];
    long reps = s.exp > 0 ? s.exp : -s.exp;
    for (long i = 0; i < reps; ++i) product *= s.exp > 0 ? base : 1 / base;
  }
  // Direct route: the image map scales nu by one constant.
  Rational direct = word_kappa(rep.evaluate(w), nu, w.str(rep.group().generator_names));
  if (direct != product)
    throw std::logic_error("scaling_cocycle: direct and multiplicative routes disagree");
  return product;
}

Rational affine_tau(const Representation& rep, const StepMeasure& nu, const Word& w) {
  generator_kappas(rep, nu);  // validates projective invariance
  return nu.signed_mass(Rational(0), rep.apply(w, Rational(0)));
}

SemiconjugacyWitness semiconjugacy_search(const Representation& rep1, const Representation& rep2,
                                          int depth, const Window& window,
                                          const Rational& basepoint1,
                                          const std::optional<Rational>& basepoint2) {
  if (rep1.group().generator_names != rep2.group().generator_names)
    throw std::invalid_argument("semiconjugacy_search: different marked groups");
  Rational p1 = basepoint1;
  Rational p2 = basepoint2.value_or(basepoint1);

  SemiconjugacyWitness out;
  out.depth = depth;

  struct Entry {
    Rational x, y;
    Word word;
  };
  std::vector<Entry> entries;
  auto push_if_windowed = [&](Rational x, Rational y, Word w) {
    if (x < window.left || x > window.right) return;
    if (y < window.left || y > window.right) return;
    entries.push_back(Entry{std::move(x), std::move(y), std::move(w)});
  };
  push_if_windowed(p1, p2, Word());

  // Violation check: sorted by x, the y's must be strictly increasing with
  // ties exactly matching ties.
  auto find_violation = [&]() -> std::optional<std::pair<Word, Word>> {
    std::vector<const Entry*> by_x;
    by_x.reserve(entries.size());
    for (const auto& e : entries) by_x.push_back(&e);
    std::stable_sort(by_x.begin(), by_x.end(), [](const Entry* a, const Entry* b) {
      if (a->x != b->x) return a->x < b->x;
      return a->y < b->y;
    });
    for (std::size_t i = 0; i + 1 < by_x.size(); ++i) {
      const Entry* a = by_x[i];
      const Entry* b = by_x[i + 1];
      bool ok = (a->x == b->x) ? (a->y == b->y) : (a->y < b->y);
      if (!ok) return std::make_pair(a->word, b->word);
    }
    return std::nullopt;
  };

  // Deepen level by level so violations surface at the smallest depth.
  std::vector<std::pair<std::vector<int>, std::pair<Rational, Rational>>> frontier{
      {{}, {p1, p2}}};
  int letters = letter_count(rep1.generator_count());
  for (int len = 1; len <= depth; ++len) {
    std::vector<std::pair<std::vector<int>, std::pair<Rational, Rational>>> next;
    for (const auto& [ls, pts] : frontier) {
      for (int l = 0; l < letters; ++l) {
        if (!ls.empty() && l == letter_inverse(ls.back())) continue;
        std::vector<int> nls = ls;
        nls.push_back(l);
        Rational x = rep1.apply_letter(l, pts.first);
        Rational y = rep2.apply_letter(l, pts.second);
        push_if_windowed(x, y, trail_to_word(nls));
        next.emplace_back(std::move(nls), std::make_pair(std::move(x), std::move(y)));
      }
    }
    frontier = std::move(next);
    if (auto v = find_violation()) {
      out.pass = false;
      out.violation = v;
      out.depth = len;
      return out;
    }
  }

  out.pass = true;
  std::vector<PairingEntry> table;
  for (const auto& e : entries) table.push_back(PairingEntry{e.x, e.y});
  std::sort(table.begin(), table.end(), [](const PairingEntry& a, const PairingEntry& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  table.erase(std::unique(table.begin(), table.end(),
                          [](const PairingEntry& a, const PairingEntry& b) {
                            return a.x == b.x && a.y == b.y;
                          }),
              table.end());
  out.pairing = std::move(table);
  return out;
}

CentralizingReport almost_centralizing_test(const Representation& rep,
                                            std::span<const PLMap> f_seq,
                                            std::span<const Word> words, const Window& window) {
  CentralizingReport report;
  PLMap id = PLMap::identity();
  for (std::size_t k = 0; k < f_seq.size(); ++k) {
    Representation moved = conjugate_rep(rep, f_seq[k]);
    report.rows.push_back(CentralizingRow{k, rep_distance(moved, rep, words, window),
                                          sup_distance(f_seq[k], id, window)});
  }

  for (std::size_t i = report.rows.size(); i-- > 0;) {
    if (report.rows[i].d != 0) break;
    report.d_zero_from = i;
  }

  if (report.rows.empty()) return report;
  bool all_d_zero_tail = report.d_zero_from.has_value();
  bool e_all_zero = true;
  for (const auto& r : report.rows) e_all_zero = e_all_zero && r.e == 0;
  if (all_d_zero_tail && e_all_zero) {
    report.verdict = CentralizingVerdict::AllTrivial;
    return report;
  }
  if (!all_d_zero_tail) {
    report.verdict = CentralizingVerdict::Inconclusive;
    return report;
  }
  std::size_t from = *report.d_zero_from;
  Rational e_first = report.rows[from].e;
  Rational e_last = report.rows.back().e;
  Rational e_min = e_first;
  for (std::size_t i = from; i < report.rows.size(); ++i) e_min = std::min(e_min, report.rows[i].e);
  if (e_min > 0 && e_last >= e_first) {
    report.verdict = CentralizingVerdict::NonSmoothnessWitness;
  } else if (e_last < e_first || e_last == 0) {
    report.verdict = CentralizingVerdict::ConsistentWithC;
  } else {
    report.verdict = CentralizingVerdict::Inconclusive;
  }
  return report;
}

}  // namespace lineact
