#include "lineact/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lineact {

Word Word::generator(int gen, long exp) {
  Word w;
  if (exp != 0) w.syllables_.push_back(Syllable{gen, exp});
  return w;
}

Word Word::from_syllables(std::vector<Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) {
    if (s.exp == 0) continue;
    if (!w.syllables_.empty() && w.syllables_.back().gen == s.gen) {
      w.syllables_.back().exp += s.exp;
      if (w.syllables_.back().exp == 0) w.syllables_.pop_back();
    } else {
      w.syllables_.push_back(s);
    }
  }
  return w;
}

long Word::length() const {
  long n = 0;
  for (const auto& s : syllables_) n += s.exp >= 0 ? s.exp : -s.exp;
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    rev.push_back(Syllable{it->gen, -it->exp});
  Word w;
  w.syllables_ = std::move(rev);
  return w;
}

Word Word::pow(long k) const {
  Word base = k >= 0 ? *this : inverse();
  long n = k >= 0 ? k : -k;
  Word acc;
  for (long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> all(a.syllables_);
  all.insert(all.end(), b.syllables_.begin(), b.syllables_.end());
  return Word::from_syllables(std::move(all));
}

std::string Word::str(std::span<const std::string> names) const {
  if (syllables_.empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first) out << ' ';
    first = false;
    out << names[static_cast<std::size_t>(s.gen)];
    if (s.exp != 1) out << '^' << s.exp;
  }
  return out.str();
}

Word Word::parse(const std::string& text, std::span<const std::string> names) {
  std::istringstream in(text);
  std::vector<Syllable> sylls;
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::string name = tok;
    long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        exp = std::stol(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word token '" + tok + "'");
      }
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + name + "'");
    sylls.push_back(Syllable{static_cast<int>(it - names.begin()), exp});
  }
  return from_syllables(std::move(sylls));
}

MarkedGroup::MarkedGroup(std::vector<std::string> names, std::vector<Word> rels)
    : generator_names(std::move(names)), relators(std::move(rels)) {
  std::set<std::string> distinct(generator_names.begin(), generator_names.end());
  if (distinct.size() != generator_names.size())
    throw std::invalid_argument("marked group: duplicate generator names");
  for (const auto& r : relators)
    for (const auto& s : r.syllables())
      if (s.gen < 0 || s.gen >= generator_count())
        throw std::invalid_argument("marked group: relator uses unknown generator");
}

Word letters_to_word(std::span<const int> letters) {
  std::vector<Syllable> sylls;
  sylls.reserve(letters.size());
  for (int l : letters) sylls.push_back(Syllable{letter_gen(l), letter_exp(l)});
  return Word::from_syllables(std::move(sylls));
}

Word trail_to_word(std::span<const int> trail) {
  std::vector<Syllable> sylls;
  sylls.reserve(trail.size());
  for (auto it = trail.rbegin(); it != trail.rend(); ++it)
    sylls.push_back(Syllable{letter_gen(*it), letter_exp(*it)});
  return Word::from_syllables(std::move(sylls));
}

std::vector<std::vector<int>> enumerate_letter_words(int num_gens, int max_len) {
  std::vector<std::vector<int>> out;
  int letters = letter_count(num_gens);
  if (max_len < 1 || letters == 0) return out;
  for (int l = 0; l < letters; ++l) out.push_back({l});
  std::size_t prev_begin = 0;
  for (int len = 2; len <= max_len; ++len) {
    std::size_t prev_end = out.size();
    for (std::size_t i = prev_begin; i < prev_end; ++i) {
      for (int l = 0; l < letters; ++l) {
        if (l == letter_inverse(out[i].back())) continue;
        std::vector<int> next = out[i];
        next.push_back(l);
        out.push_back(std::move(next));
      }
    }
    prev_begin = prev_end;
  }
  return out;
}

}  // namespace lineact
