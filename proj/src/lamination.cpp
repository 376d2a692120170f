#include "lineact/lamination.hpp"

#include <set>

namespace lineact {

bool crossed(const LeafInterval& i, const LeafInterval& j) {
  bool overlap = i.a < j.b && j.a < i.b;
  if (!overlap) return false;
  bool i_in_j = j.a <= i.a && i.b <= j.b;
  bool j_in_i = i.a <= j.a && j.b <= i.b;
  return !i_in_j && !j_in_i;
}

PrelaminationVerdict is_prelamination(std::span<const LeafInterval> leaves) {
  PrelaminationVerdict v;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (crossed(leaves[i], leaves[j])) {
        v.pass = false;
        v.first_crossing = std::make_pair(i, j);
        return v;
      }
  return v;
}

WanderingVerdict wandering_certificate(const Representation& rep, const LeafInterval& leaf,
                                       int max_len) {
  WanderingVerdict v;
  v.depth = max_len;
  // Scan words in length-lex order; the image of the leaf depends only on
  // the images of its endpoints, so identical endpoint states are pruned.
  using State = std::pair<Rational, Rational>;
  std::set<State> seen{{leaf.a, leaf.b}};
  std::vector<std::pair<std::vector<int>, State>> frontier{{{}, {leaf.a, leaf.b}}};
  int letters = letter_count(rep.generator_count());
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<std::vector<int>, State>> next;
    for (const auto& [ls, st] : frontier) {
      for (int l = 0; l < letters; ++l) {
        if (!ls.empty() && l == letter_inverse(ls.back())) continue;
        State ns{rep.apply_letter(l, st.first), rep.apply_letter(l, st.second)};
        if (!seen.insert(ns).second) continue;
        std::vector<int> nls = ls;
        nls.push_back(l);
        bool equal = ns.first == leaf.a && ns.second == leaf.b;
        bool disjoint = !(ns.first < leaf.b && leaf.a < ns.second);
        if (!equal && !disjoint) {
          v.pass = false;
          v.violation = trail_to_word(nls);
          return v;
        }
        next.emplace_back(std::move(nls), std::move(ns));
      }
    }
    frontier = std::move(next);
  }
  return v;
}

std::vector<ClosedComponent> intersect_components(std::span<const ClosedComponent> a,
                                                  std::span<const ClosedComponent> b) {
  std::vector<ClosedComponent> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Rational lo = std::max(a[i].lo, b[j].lo);
    Rational hi = std::min(a[i].hi, b[j].hi);
    if (!(hi < lo)) out.push_back(ClosedComponent{lo, hi});
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

IrreducibleVerdict irreducible_wandering_check(const Representation& rep, const LeafInterval& leaf,
                                               int max_len) {
  WanderingVerdict wander = wandering_certificate(rep, leaf, max_len);
  if (!wander.pass)
    throw std::invalid_argument("irreducible_wandering_check: leaf is not wandering at this depth");

  IrreducibleVerdict v;
  v.depth = max_len;

  // Collect the nonidentity stabilizing words found at this depth. No state
  // pruning here: distinct words with the same endpoint images may still
  // act differently inside the leaf.
  auto letter_words = enumerate_letter_words(rep.generator_count(), max_len);
  for (const auto& ls : letter_words) {
    Word w = letters_to_word(ls);
    if (rep.apply(w, leaf.a) == leaf.a && rep.apply(w, leaf.b) == leaf.b)
      v.stabilizers.push_back(w);
  }
  if (v.stabilizers.empty()) {
    v.status = IrreducibleStatus::NoStabilizers;
    return v;
  }

  Window inside(leaf.a, leaf.b);
  std::vector<ClosedComponent> common{{leaf.a, leaf.b}};
  for (const auto& w : v.stabilizers) {
    FixedSet fs = fixed_set(rep.evaluate(w), inside);
    common = intersect_components(common, fs.components);
    if (common.empty()) break;
  }
  // Stabilizers fix the leaf endpoints by definition; only fixed points in
  // the open interval obstruct irreducibility.
  std::vector<ClosedComponent> meets_open;
  for (const auto& c : common) {
    bool interior = c.lo < c.hi ? (c.hi > leaf.a && c.lo < leaf.b)
                                : (leaf.a < c.lo && c.lo < leaf.b);
    if (interior) meets_open.push_back(c);
  }
  if (meets_open.empty()) {
    v.status = IrreducibleStatus::Pass;
  } else {
    v.status = IrreducibleStatus::CommonFixedPoint;
    v.common_fixed = std::move(meets_open);
  }
  return v;
}

}  // namespace lineact
