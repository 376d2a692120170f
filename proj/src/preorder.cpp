#include "lineact/preorder.hpp"

#include <algorithm>
#include <set>

namespace lineact {

std::string cmp_symbol(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::Equiv: return "=";
    default: return ">";
  }
}

Enumeration::Normalizer Enumeration::free_normalizer() {
  return [](const Word& w) { return w; };
}

Enumeration::Normalizer Enumeration::abelian_normalizer() {
  return [](const Word& w) {
    std::map<int, long> exps;
    for (const auto& s : w.syllables()) exps[s.gen] += s.exp;
    std::vector<Syllable> sylls;
    for (const auto& [gen, exp] : exps)
      if (exp != 0) sylls.push_back(Syllable{gen, exp});
    return Word::from_syllables(std::move(sylls));
  };
}

void Enumeration::build_index() {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto [it, inserted] = index_.emplace(words_[i], i);
    if (!inserted) throw std::invalid_argument("enumeration: duplicate element");
  }
  if (words_.empty() || !words_[0].empty())
    throw std::invalid_argument("enumeration: g_0 must be the identity");
}

Enumeration Enumeration::free_ball(int num_gens, std::size_t count) {
  return normalized_ball(num_gens, count, free_normalizer());
}

Enumeration Enumeration::normalized_ball(int num_gens, std::size_t count, Normalizer norm) {
  Enumeration e;
  e.norm_ = std::move(norm);
  std::set<Word> seen;
  e.words_.push_back(Word());
  seen.insert(Word());
  for (int len = 1; e.words_.size() < count; ++len) {
    if (len > 4096) throw std::invalid_argument("enumeration: ball radius exploded");
    auto level = enumerate_letter_words(num_gens, len);
    bool progressed = false;
    for (const auto& letters : level) {
      if (static_cast<int>(letters.size()) != len) continue;
      Word w = e.norm_(letters_to_word(letters));
      if (seen.insert(w).second) {
        e.words_.push_back(w);
        progressed = true;
        if (e.words_.size() == count) break;
      }
    }
    if (!progressed)
      throw std::invalid_argument("enumeration: numbering stalled before reaching count");
  }
  e.build_index();
  return e;
}

Enumeration Enumeration::explicit_words(std::vector<Word> words, Normalizer norm) {
  Enumeration e;
  e.norm_ = std::move(norm);
  e.words_.reserve(words.size());
  for (auto& w : words) e.words_.push_back(e.norm_(w));
  e.build_index();
  return e;
}

std::optional<std::size_t> Enumeration::index_of(const Word& w) const {
  auto it = index_.find(norm_(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Preorder::Preorder(Oracle oracle, Enumeration::Normalizer norm)
    : oracle_(std::move(oracle)), norm_(std::move(norm)), cache_(std::make_shared<Cache>()) {}

Cmp Preorder::compare(const Word& a, const Word& b) const {
  Word na = norm_(a), nb = norm_(b);
  if (na == nb) return Cmp::Equiv;
  bool flipped = nb < na;
  if (flipped) std::swap(na, nb);
  std::pair<Word, Word> key{na, nb};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->memo.find(key);
    if (it != cache_->memo.end()) return flipped ? flip(it->second) : it->second;
  }
  Cmp c = oracle_(na, nb);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->memo.emplace(std::move(key), c);
  }
  return flipped ? flip(c) : c;
}

Preorder induced_preorder(const Representation& rep) {
  bool moves = false;
  for (int i = 0; i < rep.generator_count() && !moves; ++i)
    moves = rep.generator(i)(Rational(0)) != 0;
  if (!moves)
    throw TrivialPreorder("induced preorder is trivial: every generator fixes the basepoint 0");

  // Orbit values phi(w).0 are cached per word; comparisons are then exact
  // rational comparisons.
  struct ValueCache {
    std::mutex mu;
    std::map<Word, Rational> values;
  };
  auto cache = std::make_shared<ValueCache>();
  auto rep_copy = std::make_shared<Representation>(rep);
  auto value = [cache, rep_copy](const Word& w) {
    {
      std::lock_guard<std::mutex> lock(cache->mu);
      auto it = cache->values.find(w);
      if (it != cache->values.end()) return it->second;
    }
    Rational v = rep_copy->apply(w, Rational(0));
    std::lock_guard<std::mutex> lock(cache->mu);
    return cache->values.emplace(w, std::move(v)).first->second;
  };
  return Preorder([value](const Word& a, const Word& b) {
    Rational va = value(a), vb = value(b);
    if (va < vb) return Cmp::Less;
    if (vb < va) return Cmp::Greater;
    return Cmp::Equiv;
  });
}

AxiomCheck check_preorder_axioms(const Preorder& p, const Enumeration& e, std::size_t n,
                                 std::size_t sample_stride) {
  n = std::min(n, e.size());
  AxiomCheck out;
  auto fail = [&](std::string detail) {
    out.ok = false;
    out.detail = std::move(detail);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (p.compare(e.word(i), e.word(i)) != Cmp::Equiv)
      return fail("reflexivity fails at index " + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.compare(e.word(i), e.word(j)) != flip(p.compare(e.word(j), e.word(i))))
        return fail("verdict asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  // Transitivity and left-invariance on strided triples.
  for (std::size_t i = 0; i < n; i += sample_stride)
    for (std::size_t j = 0; j < n; j += sample_stride)
      for (std::size_t k = 0; k < n; k += sample_stride) {
        Cmp ij = p.compare(e.word(i), e.word(j));
        Cmp jk = p.compare(e.word(j), e.word(k));
        Cmp ik = p.compare(e.word(i), e.word(k));
        bool le_ij = ij != Cmp::Greater, le_jk = jk != Cmp::Greater, le_ik = ik != Cmp::Greater;
        if (le_ij && le_jk && !le_ik)
          return fail("transitivity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                      "," + std::to_string(k) + ")");
      }
  for (std::size_t k = 0; k < n; k += sample_stride)
    for (std::size_t i = 0; i < n; i += sample_stride)
      for (std::size_t j = 0; j < n; j += sample_stride) {
        Cmp ij = p.compare(e.word(i), e.word(j));
        Cmp kikj = p.compare(e.multiply(e.word(k), e.word(i)), e.multiply(e.word(k), e.word(j)));
        if (ij != kikj)
          return fail("left-invariance fails multiplying (" + std::to_string(i) + "," +
                      std::to_string(j) + ") by " + std::to_string(k));
      }
  return out;
}

ConvexityVerdict is_convex(const std::function<bool(const Word&)>& in_subgroup, const Preorder& p,
                           const Enumeration& e, std::size_t n) {
  n = std::min(n, e.size());
  ConvexityVerdict v;
  v.checked = n;
  if (!in_subgroup(Word()))
    throw std::invalid_argument("is_convex: subgroup oracle rejects the identity");
  Word id;
  for (std::size_t hi = 0; hi < n; ++hi) {
    const Word& h = e.word(hi);
    if (!in_subgroup(h)) continue;
    for (std::size_t gi = 0; gi < n; ++gi) {
      const Word& g = e.word(gi);
      if (in_subgroup(g)) continue;
      if (p.compare(id, g) != Cmp::Greater && p.compare(g, h) != Cmp::Greater) {
        v.pass = false;
        v.violation = std::make_pair(g, h);
        return v;
      }
    }
  }
  v.pass = true;
  return v;
}

Preorder minimal_model(const Preorder& p, const std::function<bool(const Word&)>& in_h_max,
                       const Enumeration& e, std::size_t check_prefix) {
  std::size_t n = std::min(check_prefix, e.size());
  bool all_in = true;
  for (std::size_t i = 0; i < n && all_in; ++i) all_in = in_h_max(e.word(i));
  if (all_in)
    throw NoMinimalModel("H_max covers the whole tested prefix: no minimal model at this truncation");

  auto base = p;
  auto inv = [](const Word& w) { return w.inverse(); };
  Preorder collapsed(
      [base, in_h_max, e, inv](const Word& a, const Word& b) {
        Word q = e.multiply(inv(a), b);
        if (in_h_max(q)) return Cmp::Equiv;
        return base.compare(a, b);
      });

  AxiomCheck check = check_preorder_axioms(collapsed, e, n);
  if (!check.ok) throw OracleInconsistency("minimal model fails re-check: " + check.detail);
  return collapsed;
}

std::vector<TranscriptEntry> make_transcript(const Preorder& p, const Enumeration& e,
                                             std::size_t n) {
  n = std::min(n, e.size());
  std::vector<TranscriptEntry> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back(TranscriptEntry{i, j, p.compare(e.word(i), e.word(j))});
  return out;
}

Preorder replay_preorder(std::vector<TranscriptEntry> transcript, const Enumeration& e) {
  auto table = std::make_shared<std::map<std::pair<std::size_t, std::size_t>, Cmp>>();
  for (const auto& t : transcript) (*table)[{t.i, t.j}] = t.verdict;
  Enumeration enum_copy = e;
  return Preorder([table, enum_copy](const Word& a, const Word& b) {
    auto ia = enum_copy.index_of(a);
    auto ib = enum_copy.index_of(b);
    if (!ia || !ib) throw OracleInconsistency("transcript replay: word outside the numbering");
    if (*ia == *ib) return Cmp::Equiv;
    std::pair<std::size_t, std::size_t> key{std::min(*ia, *ib), std::max(*ia, *ib)};
    auto it = table->find(key);
    if (it == table->end()) throw OracleInconsistency("transcript replay: pair not recorded");
    return *ia < *ib ? it->second : flip(it->second);
  });
}

}  // namespace lineact
