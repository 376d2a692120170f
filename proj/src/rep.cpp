#include "lineact/rep.hpp"

#include <map>
#include <set>

namespace lineact {

Representation::Representation(MarkedGroup group, std::vector<PLMap> images)
    : Representation(std::move(group), std::move(images), std::nullopt) {}

Representation Representation::window_checked(MarkedGroup group, std::vector<PLMap> images,
                                              Window scope) {
  return Representation(std::move(group), std::move(images), scope);
}

Representation::Representation(MarkedGroup group, std::vector<PLMap> images,
                               std::optional<Window> scope)
    : group_(std::move(group)), images_(std::move(images)), relator_scope_(std::move(scope)) {
  if (images_.size() != static_cast<std::size_t>(group_.generator_count()))
    throw std::invalid_argument("representation: one PLMap per generator required");
  inverses_.reserve(images_.size());
  for (const auto& m : images_) inverses_.push_back(m.inverse());
  check_relators();
}

void Representation::check_relators() const {
  for (const auto& r : group_.relators) {
    PLMap image = evaluate(r);
    bool ok = relator_scope_ ? equal_on_window(image, PLMap::identity(), *relator_scope_)
                             : image.is_identity();
    if (!ok)
      throw RelatorViolation("relator " + r.str(group_.generator_names) +
                             " does not evaluate to the identity");
  }
}

PLMap Representation::evaluate(const Word& w) const {
  PLMap acc = PLMap::identity();
  for (const auto& s : w.syllables()) {
    if (s.gen < 0 || s.gen >= generator_count())
      throw std::out_of_range("word uses unknown generator index");
    acc = compose(acc, images_[static_cast<std::size_t>(s.gen)].pow(s.exp));
  }
  return acc;
}

Rational Representation::apply(const Word& w, const Rational& x) const {
  Rational v = x;
  const auto sylls = w.syllables();
  for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
    if (it->gen < 0 || it->gen >= generator_count())
      throw std::out_of_range("word uses unknown generator index");
    const PLMap& m = it->exp > 0 ? images_[static_cast<std::size_t>(it->gen)]
                                 : inverses_[static_cast<std::size_t>(it->gen)];
    long n = it->exp > 0 ? it->exp : -it->exp;
    for (long i = 0; i < n; ++i) v = m(v);
  }
  return v;
}

Rational Representation::apply_letter(int letter, const Rational& x) const {
  const PLMap& m = letter_exp(letter) > 0 ? images_[static_cast<std::size_t>(letter_gen(letter))]
                                          : inverses_[static_cast<std::size_t>(letter_gen(letter))];
  return m(x);
}

Representation conjugate_rep(const Representation& rep, const PLMap& f) {
  PLMap f_inv = f.inverse();
  std::vector<PLMap> images;
  images.reserve(static_cast<std::size_t>(rep.generator_count()));
  for (int i = 0; i < rep.generator_count(); ++i)
    images.push_back(compose(f, compose(rep.generator(i), f_inv)));
  if (rep.relator_scope()) {
    const Window& w = *rep.relator_scope();
    return Representation::window_checked(rep.group(), std::move(images), Window(f(w.left), f(w.right)));
  }
  return Representation(rep.group(), std::move(images));
}

std::vector<Rational> orbit(const Representation& rep, const Rational& x, int max_len) {
  std::set<Rational> seen{x};
  std::vector<Rational> frontier{x};
  int letters = letter_count(rep.generator_count());
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Rational> next;
    for (const auto& p : frontier) {
      for (int l = 0; l < letters; ++l) {
        Rational v = rep.apply_letter(l, p);
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Rational max_orbit_gap(std::span<const Rational> sorted_points, const Window& w) {
  Rational prev = w.left;
  Rational best(0);
  bool any = false;
  for (const auto& p : sorted_points) {
    if (p < w.left || p > w.right) continue;
    Rational gap = p - prev;
    if (gap > best) best = gap;
    prev = p;
    any = true;
  }
  Rational tail = w.right - prev;
  if (tail > best) best = tail;
  if (!any) return w.width();
  return best;
}

Rational rep_distance(const Representation& a, const Representation& b,
                      std::span<const Word> words, const Window& w) {
  if (a.group().generator_names != b.group().generator_names)
    throw std::invalid_argument("rep_distance: representations of different marked groups");
  Rational best(0);
  for (const auto& word : words) {
    Rational d = sup_distance(a.evaluate(word), b.evaluate(word), w);
    if (d > best) best = d;
  }
  return best;
}

std::optional<std::pair<Word, Word>> witness_irreducible(const Representation& rep, const Window& w,
                                                         int max_len) {
  // BFS over values of phi(word).0; continuations depend only on the value,
  // so states are deduplicated by value (first spelling in length-lex order
  // is kept, which makes the result deterministic).
  std::optional<Word> right, left;
  std::set<Rational> seen{Rational(0)};
  std::vector<std::pair<std::vector<int>, Rational>> frontier{{{}, Rational(0)}};
  int letters = letter_count(rep.generator_count());
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<std::vector<int>, Rational>> next;
    for (const auto& [ls, v] : frontier) {
      for (int l = 0; l < letters; ++l) {
        if (!ls.empty() && l == letter_inverse(ls.back())) continue;
        Rational nv = rep.apply_letter(l, v);
        if (!seen.insert(nv).second) continue;
        std::vector<int> nls = ls;
        nls.push_back(l);
        if (!right && nv > w.right) right = trail_to_word(nls);
        if (!left && nv < w.left) left = trail_to_word(nls);
        if (right && left) return std::make_pair(*right, *left);
        next.emplace_back(std::move(nls), std::move(nv));
      }
    }
    frontier = std::move(next);
  }
  if (right && left) return std::make_pair(*right, *left);
  return std::nullopt;
}

std::optional<Word> witness_proximal(const Representation& rep, const Window& source,
                                     const Window& target, int max_len) {
  using State = std::pair<Rational, Rational>;  // images of the source endpoints
  std::set<State> seen{{source.left, source.right}};
  std::vector<std::pair<std::vector<int>, State>> frontier{{{}, {source.left, source.right}}};
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
        if (target.left < ns.first && ns.second < target.right) return trail_to_word(nls);
        next.emplace_back(std::move(nls), std::move(ns));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace lineact
