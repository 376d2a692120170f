#include "lineact/realization.hpp"

#include <algorithm>
#include <set>

namespace lineact {

std::optional<std::size_t> RealizationTable::index_of(const Word& w) const {
  auto idx = enumeration_.index_of(w);
  if (idx && *idx < words_.size()) return idx;
  return std::nullopt;
}

RealizationTable iota(const Preorder& p, const Enumeration& e, std::size_t n) {
  if (n < 1) throw std::invalid_argument("iota: need N >= 1");
  n = std::min(n, e.size());

  RealizationTable t;
  t.enumeration_ = e;
  t.words_.push_back(e.word(0));
  t.values_.push_back(Dyadic(0));

  // Indices of tabled entries sorted by value; ties (equivalent elements)
  // keep one representative, which is enough for the neighbor search.
  std::vector<std::size_t> by_value{0};

  for (std::size_t i = 1; i < n; ++i) {
    const Word& w = e.word(i);
    // Binary search for the first tabled class >= w.
    std::size_t lo = 0, hi = by_value.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (p.compare(t.words_[by_value[mid]], w) == Cmp::Less)
        lo = mid + 1;
      else
        hi = mid;
    }
    Dyadic value(0);
    bool is_new_class = true;
    if (lo == by_value.size()) {
      value = Dyadic::from_rational(t.values_[by_value.back()].to_rational() + 1);
    } else if (p.compare(t.words_[by_value[lo]], w) == Cmp::Equiv) {
      value = t.values_[by_value[lo]];
      is_new_class = false;
    } else if (lo == 0) {
      value = Dyadic::from_rational(t.values_[by_value.front()].to_rational() - 1);
    } else {
      // Consistency of the search frontier: the left neighbor must really
      // be below w. A failure here certifies an oracle inconsistency.
      if (p.compare(t.words_[by_value[lo - 1]], w) != Cmp::Less)
        throw OracleInconsistency("iota: neighbor search contradicts itself at index " +
                                  std::to_string(i));
      value = t.values_[by_value[lo - 1]].midpoint(t.values_[by_value[lo]]);
    }
    t.words_.push_back(w);
    t.values_.push_back(value);
    if (is_new_class) by_value.insert(by_value.begin() + static_cast<long>(lo), i);
  }

  // Global re-verification of order preservation.
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Cmp c = p.compare(t.words_[i], t.words_[j]);
      const Rational vi = t.values_[i].to_rational();
      const Rational vj = t.values_[j].to_rational();
      bool ok = (c == Cmp::Less && vi < vj) || (c == Cmp::Equiv && vi == vj) ||
                (c == Cmp::Greater && vi > vj);
      if (!ok)
        throw OracleInconsistency("iota: order preservation fails for pair (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
    }
  return t;
}

DichotomyReport check_dyadic_dichotomy(const RealizationTable& table, unsigned long max_height) {
  DichotomyReport report;
  std::set<Rational> tabled;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Rational x = table.value(i).to_rational();
    unsigned long n = table.value(i).height();
    for (unsigned long k = 0; k < std::min(n, max_height); ++k) {
      Rational l = left_neighbor(x, k);
      Rational r = right_neighbor(x, k);
      if (!tabled.count(l)) {
        report.pass = false;
        report.violations.push_back(DichotomyViolation{i, k, l});
      }
      if (!tabled.count(r)) {
        report.pass = false;
        report.violations.push_back(DichotomyViolation{i, k, r});
      }
    }
    tabled.insert(x);
    ++report.checked;
  }
  return report;
}

RealizedAction realize_generators(const RealizationTable& table,
                                  const std::vector<std::string>& generator_names) {
  if (table.size() < 2) throw InsufficientData("realize_generators: table too small");
  const Enumeration& e = table.enumeration();

  Rational span_lo = table.value(0).to_rational(), span_hi = span_lo;
  for (std::size_t i = 1; i < table.size(); ++i) {
    Rational v = table.value(i).to_rational();
    span_lo = std::min(span_lo, v);
    span_hi = std::max(span_hi, v);
  }
  if (!(span_lo < span_hi))
    throw InsufficientData("realize_generators: all tabled values coincide");

  std::vector<PLMap> images;
  for (std::size_t gen = 0; gen < generator_names.size(); ++gen) {
    Word s = Word::generator(static_cast<int>(gen));
    std::map<Rational, Rational> pairs;
    for (std::size_t i = 0; i < table.size(); ++i) {
      Word sg = e.multiply(s, table.word(i));
      auto j = table.index_of(sg);
      if (!j) continue;
      Rational x = table.value(i).to_rational();
      Rational y = table.value(*j).to_rational();
      auto [it, inserted] = pairs.emplace(x, y);
      if (!inserted && it->second != y)
        throw OracleInconsistency("realize_generators: conflicting pairs at x = " + to_string(x));
    }
    if (pairs.size() < 2)
      throw InsufficientData("realize_generators: generator '" + generator_names[gen] +
                             "' has fewer than two tabled pairs");
    std::vector<std::pair<Rational, Rational>> nodes(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      if (!(nodes[i].second < nodes[i + 1].second))
        throw OracleInconsistency("realize_generators: pairs are not strictly increasing");
    AffinePiece left{Rational(1), nodes.front().second - nodes.front().first};
    AffinePiece right{Rational(1), nodes.back().second - nodes.back().first};
    images.push_back(PLMap::through_points(nodes, left, right));
  }

  RealizedAction out{Representation(MarkedGroup(generator_names), std::move(images)),
                     Window(span_lo, span_hi), true};
  return out;
}

}  // namespace lineact
