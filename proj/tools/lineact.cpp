#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lineact/analysis.hpp"
#include "lineact/families.hpp"
#include "lineact/io.hpp"
#include "lineact/lamination.hpp"
#include "lineact/realization.hpp"
#include "lineact/suspension.hpp"
#include "lineact/svg.hpp"

using namespace lineact;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitInconclusive = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

Representation load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_representation(in);
}

Window parse_window(const std::vector<std::string>& pair) {
  return Window(parse_rational(pair.at(0)), parse_rational(pair.at(1)));
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
  return out;
}

// Preorder spec file:
//   preorder v1
//   generators <names...>
//   kind zn-lex | induced
//   numbering ball <N> | abelian-ball <N> | explicit <N>   (then N 'word ...' lines)
//   rep-file <path>                                        (induced only)
struct PreorderSpec {
  Preorder preorder;
  Enumeration enumeration;
  std::vector<std::string> names;
};

PreorderSpec load_preorder_spec(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "preorder v1")
    throw ParseError("expected 'preorder v1' header");

  std::vector<std::string> names;
  std::string kind, numbering;
  std::size_t numbering_count = 0;
  std::vector<Word> explicit_words;
  std::string rep_file;

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "generators") {
      std::string name;
      while (ls >> name) names.push_back(name);
    } else if (key == "kind") {
      ls >> kind;
    } else if (key == "numbering") {
      ls >> numbering >> numbering_count;
      if (numbering == "explicit") {
        for (std::size_t i = 0; i < numbering_count; ++i) {
          std::string wline;
          if (!std::getline(in, wline)) throw ParseError("missing explicit word line");
          std::istringstream ws(wline);
          std::string tag;
          ws >> tag;
          if (tag != "word") throw ParseError("expected 'word ...' line, got '" + wline + "'");
          std::string rest;
          std::getline(ws, rest);
          explicit_words.push_back(Word::parse(rest, names));
        }
      }
    } else if (key == "rep-file") {
      ls >> rep_file;
    } else {
      throw ParseError("unknown preorder spec line '" + line + "'");
    }
  }
  if (names.empty()) throw ParseError("preorder spec: no generators");
  if (kind.empty()) throw ParseError("preorder spec: missing kind");

  int num_gens = static_cast<int>(names.size());
  // Relator-aware multiplication where the kind implies one.
  Enumeration::Normalizer norm =
      kind == "zn-lex" ? Enumeration::abelian_normalizer() : Enumeration::free_normalizer();
  Enumeration e = [&] {
    if (numbering == "ball" || numbering.empty())
      return Enumeration::normalized_ball(num_gens, std::max(n, numbering_count), norm);
    if (numbering == "abelian-ball")
      return Enumeration::normalized_ball(num_gens, std::max(n, numbering_count),
                                          Enumeration::abelian_normalizer());
    if (numbering == "explicit")
      return Enumeration::explicit_words(std::move(explicit_words), norm);
    throw ParseError("unknown numbering '" + numbering + "'");
  }();

  if (kind == "zn-lex") {
    auto norm = Enumeration::abelian_normalizer();
    Preorder p(
        [norm, num_gens](const Word& a, const Word& b) {
          Word na = norm(a), nb = norm(b);
          for (int g = 0; g < num_gens; ++g) {
            long ea = 0, eb = 0;
            for (const auto& s : na.syllables())
              if (s.gen == g) ea = s.exp;
            for (const auto& s : nb.syllables())
              if (s.gen == g) eb = s.exp;
            if (ea < eb) return Cmp::Less;
            if (ea > eb) return Cmp::Greater;
          }
          return Cmp::Equiv;
        },
        norm);
    return PreorderSpec{std::move(p), std::move(e), std::move(names)};
  }
  if (kind == "induced") {
    if (rep_file.empty()) throw ParseError("preorder spec: kind induced needs rep-file");
    Representation rep = load_rep(rep_file);
    if (rep.group().generator_names != names)
      throw ParseError("preorder spec: generator names disagree with rep file");
    return PreorderSpec{induced_preorder(rep), std::move(e), std::move(names)};
  }
  throw ParseError("unknown preorder kind '" + kind + "'");
}

json rows_to_json(const RecurrenceReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"n", r.n}, {"t", r.t.get_str()}, {"distance", to_string(r.distance)}});
  json j{{"rows", rows}};
  if (report.threshold)
    j["threshold"] = *report.threshold;
  else
    j["threshold"] = nullptr;
  return j;
}

int run_realize(const std::string& spec_path, std::size_t n, const std::string& out_path,
                const std::string& svg_path) {
  PreorderSpec spec = load_preorder_spec(spec_path, n);
  RealizationTable table = iota(spec.preorder, spec.enumeration, n);
  std::ostringstream out;
  write_table(out, table, spec.names);
  spit(out_path, out.str());
  if (!svg_path.empty()) {
    PlotItem item{PlotItem::Kind::OrbitPoints, "iota values", PLMap::identity(), {}, {}, false};
    Rational lo = table.value(0).to_rational(), hi = lo;
    for (std::size_t i = 0; i < table.size(); ++i) {
      Rational v = table.value(i).to_rational();
      item.points.push_back(v);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    PlotSpec plot{Window(lo - 1, hi + 1), {std::move(item)}};
    spit(svg_path, render_svg(plot));
  }
  std::cout << "wrote " << table.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

int run_suspension_demo(const Window& window, int max_n, const std::string& out_path,
                        const std::string& svg_path, const std::string& format) {
  SuspensionGroup group = SuspensionGroup::standard();
  SuspensionPoint y = suspension_point(CantorPoint::from_digits("", "01"), rat(0));
  std::vector<Word> words;
  for (const char* text : {"f", "A", "B", "f A", "B f"}) words.push_back(group.parse(text));

  RecurrenceReport report = recurrence_experiment(group, y, words, window, max_n);

  std::ostringstream out;
  if (format == "json") {
    out << rows_to_json(report).dump(2) << "\n";
  } else {
    out << "suspension recurrence: base (01)^inf, window [" << to_string(window.left) << ", "
        << to_string(window.right) << "], words {f, A, B, fA, Bf}\n";
    out << "n\tt_n\tdistance\n";
    for (const auto& r : report.rows)
      out << r.n << '\t' << r.t.get_str() << '\t' << to_string(r.distance) << '\n';
    if (report.threshold)
      out << "threshold N0 = " << *report.threshold << " (distance exactly 0 from there on)\n";
    else
      out << "threshold not reached in range\n";
  }
  if (out_path.empty())
    std::cout << out.str();
  else
    spit(out_path, out.str());

  if (!svg_path.empty()) {
    PlotSpec plot{window, {}};
    for (std::size_t i = 0; i < words.size(); ++i) {
      PlotItem item{PlotItem::Kind::FunctionGraph, "rho_y(" + words[i].str(group.names()) + ")",
                    group.rho(y, words[i], window), {}, {}, false};
      plot.items.push_back(std::move(item));
    }
    spit(svg_path, render_svg(plot));
  }
  return kExitOk;
}

int run_plcheck(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-24, 24);
  std::uniform_int_distribution<long> den(1, 8);
  std::uniform_int_distribution<int> breaks(0, 4);
  auto random_map = [&]() {
    int k = breaks(rng);
    std::vector<Rational> bps;
    while (static_cast<int>(bps.size()) < k) {
      Rational b = rat(num(rng), den(rng));
      bool dup = false;
      for (const auto& x : bps) dup = dup || x == b;
      if (!dup) bps.push_back(b);
    }
    std::sort(bps.begin(), bps.end());
    std::vector<AffinePiece> pieces;
    pieces.push_back(AffinePiece{rat(den(rng), den(rng)), rat(num(rng), den(rng))});
    for (int i = 0; i < k; ++i) {
      Rational value = pieces.back().at(bps[static_cast<std::size_t>(i)]);
      Rational slope = rat(den(rng), den(rng));
      pieces.push_back(AffinePiece{slope, value - slope * bps[static_cast<std::size_t>(i)]});
    }
    return PLMap(std::move(bps), std::move(pieces));
  };
  for (int i = 0; i < count; ++i) {
    PLMap f = random_map(), g = random_map(), h = random_map();
    if (!compose(f, f.inverse()).is_identity()) return kExitInconsistent;
    if (compose(compose(f, g), h) != compose(f, compose(g, h))) return kExitInconsistent;
    if (f.inverse().inverse() != f) return kExitInconsistent;
  }
  std::cout << "plcheck PASS count=" << count << " seed=" << seed << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lineact: exact computation with group actions on the real line"};
  app.require_subcommand(1);
  std::function<int()> action;

  // --- realize ---------------------------------------------------------
  auto* realize = app.add_subcommand("realize", "dynamical realization of a preorder");
  {
    auto spec_path = std::make_shared<std::string>();
    auto n = std::make_shared<std::size_t>(50);
    auto out_path = std::make_shared<std::string>();
    auto svg_path = std::make_shared<std::string>();
    realize->add_option("--spec", *spec_path, "preorder spec file")->required();
    realize->add_option("--n", *n, "prefix size N");
    realize->add_option("--out", *out_path, "table output path")->required();
    realize->add_option("--svg", *svg_path, "optional SVG output");
    realize->callback([=, &action] {
      action = [=] { return run_realize(*spec_path, *n, *out_path, *svg_path); };
    });
  }

  // --- family ----------------------------------------------------------
  auto* family = app.add_subcommand("family", "concrete action families");
  family->require_subcommand(1);
  {
    auto* f2 = family->add_subcommand("f2", "free-group family from a sign word");
    auto omega = std::make_shared<std::string>("+");
    auto finite = std::make_shared<bool>(false);
    auto window = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-4", "4"});
    auto out_path = std::make_shared<std::string>();
    f2->add_option("--omega", *omega, "sign pattern, e.g. ++-")->required();
    f2->add_flag("--finite", *finite, "finite-support word (default periodic)");
    f2->add_option("--window", *window, "assembly window")->expected(2);
    f2->add_option("--out", *out_path, "rep output path")->required();
    f2->callback([=, &action] {
      action = [=] {
        OmegaWord w = *finite ? OmegaWord::finite(*omega) : OmegaWord::periodic(*omega);
        WindowedAction act = f2_family(w, parse_window(*window));
        std::ostringstream out;
        write_representation(out, act.rep);
        spit(*out_path, out.str());
        std::cout << "wrote f2 family rep (assembled on [" << to_string(act.window.left) << ", "
                  << to_string(act.window.right) << "], extrapolated outside)\n";
        return kExitOk;
      };
    });

    auto* bs = family->add_subcommand("bs", "Baumslag-Solitar actions");
    auto m = std::make_shared<long>(2);
    auto n = std::make_shared<long>(3);
    auto s = std::make_shared<std::string>("");
    auto bs_out = std::make_shared<std::string>();
    bs->add_option("--m", *m)->required();
    bs->add_option("--n", *n)->required();
    bs->add_option("--s", *s, "path parameter in [0,1]; omit for the affine model");
    bs->add_option("--out", *bs_out, "rep output path")->required();
    bs->callback([=, &action] {
      action = [=] {
        Representation rep = s->empty()
                                 ? bs_affine(*m, *n)
                                 : bs_path(*m, *n, parse_rational(*s), bs_default_endpoint(*m, *n),
                                           PLMap::affine(rat(*n, *m), rat(0)));
        std::ostringstream out;
        write_representation(out, rep);
        spit(*bs_out, out.str());
        std::cout << "wrote bs(" << *m << "," << *n << ") rep\n";
        return kExitOk;
      };
    });

    auto* bn = family->add_subcommand("brin-navas", "standard Brin-Navas instance");
    auto bn_out = std::make_shared<std::string>();
    bn->add_option("--out", *bn_out, "rep output path")->required();
    bn->callback([=, &action] {
      action = [=] {
        BrinNavasAction act = BrinNavasAction::standard();
        std::ostringstream out;
        write_representation(out, act.rep());
        spit(*bn_out, out.str());
        std::cout << "wrote brin-navas rep, supp w0 = (" << to_string(act.support_left()) << ", "
                  << to_string(act.support_right()) << ")\n";
        return kExitOk;
      };
    });

    auto* dyseq = family->add_subcommand("dyadic-seq", "pinned PL dyadic sequence map");
    auto seq_n = std::make_shared<int>(1);
    auto seq_out = std::make_shared<std::string>();
    dyseq->add_option("--n", *seq_n, "sequence index (1-based)")->required();
    dyseq->add_option("--out", *seq_out, "plmap output path")->required();
    dyseq->callback([=, &action] {
      action = [=] {
        std::ostringstream out;
        write_plmap(out, dyadic_sequence(*seq_n));
        spit(*seq_out, out.str());
        std::cout << "wrote dyadic sequence map n=" << *seq_n << "\n";
        return kExitOk;
      };
    });
  }

  // --- analyze ---------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "analytic procedures at finite scale");
  analyze->require_subcommand(1);
  {
    auto* plcheck = analyze->add_subcommand("plcheck", "randomized PL algebra self-check");
    auto seed = std::make_shared<std::uint64_t>(20250811);
    auto count = std::make_shared<int>(1000);
    plcheck->add_option("--seed", *seed, "RNG seed (fixed default)");
    plcheck->add_option("--count", *count, "number of random triples");
    plcheck->callback([=, &action] {
      action = [=] { return run_plcheck(*seed, *count); };
    });

    auto* semiconj = analyze->add_subcommand("semiconj", "pointed semiconjugacy search");
    auto rep1 = std::make_shared<std::string>();
    auto rep2 = std::make_shared<std::string>();
    auto depth = std::make_shared<int>(4);
    auto window = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-8", "8"});
    auto base1 = std::make_shared<std::string>("0");
    auto base2 = std::make_shared<std::string>("");
    semiconj->add_option("--rep1", *rep1)->required();
    semiconj->add_option("--rep2", *rep2)->required();
    semiconj->add_option("--depth", *depth);
    semiconj->add_option("--window", *window)->expected(2);
    semiconj->add_option("--basepoint1", *base1);
    semiconj->add_option("--basepoint2", *base2, "defaults to basepoint1");
    semiconj->callback([=, &action] {
      action = [=] {
        Representation r1 = load_rep(*rep1), r2 = load_rep(*rep2);
        std::optional<Rational> b2;
        if (!base2->empty()) b2 = parse_rational(*base2);
        SemiconjugacyWitness w =
            semiconjugacy_search(r1, r2, *depth, parse_window(*window), parse_rational(*base1), b2);
        if (w.pass) {
          std::cout << "PASS at depth " << w.depth << ": monotone pairing with " << w.pairing.size()
                    << " entries\n";
        } else {
          std::cout << "VIOLATION at depth " << w.depth << ": words "
                    << w.violation->first.str(r1.group().generator_names) << " | "
                    << w.violation->second.str(r1.group().generator_names) << "\n";
        }
        return kExitOk;
      };
    });

    auto* conrad = analyze->add_subcommand("conrad", "Conrad homomorphism value");
    auto crep = std::make_shared<std::string>();
    auto cword = std::make_shared<std::string>();
    auto cbreaks = std::make_shared<std::string>("");
    auto cdens = std::make_shared<std::string>("1");
    conrad->add_option("--rep", *crep)->required();
    conrad->add_option("--word", *cword)->required();
    conrad->add_option("--density-breaks", *cbreaks, "comma-separated breakpoints");
    conrad->add_option("--density-values", *cdens, "comma-separated positive densities");
    conrad->callback([=, &action] {
      action = [=] {
        Representation rep = load_rep(*crep);
        StepMeasure nu(cbreaks->empty() ? std::vector<Rational>{} : parse_rational_list(*cbreaks),
                       parse_rational_list(*cdens));
        Word w = Word::parse(*cword, rep.group().generator_names);
        std::cout << "tau(" << w.str(rep.group().generator_names)
                  << ") = " << to_string(conrad_tau(rep, nu, w)) << "\n";
        return kExitOk;
      };
    });

    auto* kappa = analyze->add_subcommand("kappa", "scaling cocycle value");
    auto krep = std::make_shared<std::string>();
    auto kword = std::make_shared<std::string>();
    kappa->add_option("--rep", *krep)->required();
    kappa->add_option("--word", *kword)->required();
    kappa->callback([=, &action] {
      action = [=] {
        Representation rep = load_rep(*krep);
        Word w = Word::parse(*kword, rep.group().generator_names);
        std::cout << "kappa(" << w.str(rep.group().generator_names)
                  << ") = " << to_string(scaling_cocycle(rep, StepMeasure::lebesgue(), w)) << "\n";
        return kExitOk;
      };
    });

    auto* wirr = analyze->add_subcommand("witness-irr", "irreducibility witness search");
    auto wrep = std::make_shared<std::string>();
    auto wwin = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-4", "4"});
    auto wlen = std::make_shared<int>(6);
    wirr->add_option("--rep", *wrep)->required();
    wirr->add_option("--window", *wwin)->expected(2);
    wirr->add_option("--max-len", *wlen);
    wirr->callback([=, &action] {
      action = [=] {
        Representation rep = load_rep(*wrep);
        auto found = witness_irreducible(rep, parse_window(*wwin), *wlen);
        if (!found) {
          std::cout << "inconclusive at depth " << *wlen << "\n";
          return kExitInconclusive;
        }
        std::cout << "witness: g = " << found->first.str(rep.group().generator_names)
                  << ", h = " << found->second.str(rep.group().generator_names) << "\n";
        return kExitOk;
      };
    });

    auto* wprox = analyze->add_subcommand("witness-prox", "proximality witness search");
    auto prep = std::make_shared<std::string>();
    auto psrc = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-1", "1"});
    auto ptgt = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-1", "1"});
    auto plen = std::make_shared<int>(6);
    wprox->add_option("--rep", *prep)->required();
    wprox->add_option("--source", *psrc)->expected(2);
    wprox->add_option("--target", *ptgt)->expected(2);
    wprox->add_option("--max-len", *plen);
    wprox->callback([=, &action] {
      action = [=] {
        Representation rep = load_rep(*prep);
        auto found = witness_proximal(rep, parse_window(*psrc), parse_window(*ptgt), *plen);
        if (!found) {
          std::cout << "inconclusive at depth " << *plen << "\n";
          return kExitInconclusive;
        }
        std::cout << "witness: g = " << found->str(rep.group().generator_names) << "\n";
        return kExitOk;
      };
    });

    auto* cent = analyze->add_subcommand("almost-cent", "almost-centralizing sequence test");
    auto arep = std::make_shared<std::string>();
    auto atrans = std::make_shared<std::string>();
    auto awords = std::make_shared<std::string>("a");
    auto awin = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-4", "4"});
    auto aformat = std::make_shared<std::string>("text");
    cent->add_option("--rep", *arep)->required();
    cent->add_option("--translations", *atrans, "comma-separated t_k for f_k = T_{t_k}")
        ->required();
    cent->add_option("--words", *awords, "comma-separated word set");
    cent->add_option("--window", *awin)->expected(2);
    cent->add_option("--format", *aformat)->check(CLI::IsMember({"text", "json"}));
    cent->callback([=, &action] {
      action = [=] {
        Representation rep = load_rep(*arep);
        std::vector<PLMap> seq;
        for (const auto& t : parse_rational_list(*atrans)) seq.push_back(PLMap::translation(t));
        std::vector<Word> words;
        std::istringstream ws(*awords);
        std::string tok;
        while (std::getline(ws, tok, ','))
          words.push_back(Word::parse(tok, rep.group().generator_names));
        CentralizingReport report =
            almost_centralizing_test(rep, seq, words, parse_window(*awin));
        if (*aformat == "json") {
          json rows = json::array();
          for (const auto& r : report.rows)
            rows.push_back(
                {{"k", r.k}, {"d", to_string(r.d)}, {"e", to_string(r.e)}});
          json j{{"rows", rows}};
          j["verdict"] = static_cast<int>(report.verdict);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "k\td_k\te_k\n";
          for (const auto& r : report.rows)
            std::cout << r.k << '\t' << to_string(r.d) << '\t' << to_string(r.e) << '\n';
          switch (report.verdict) {
            case CentralizingVerdict::AllTrivial: std::cout << "verdict: all trivial\n"; break;
            case CentralizingVerdict::ConsistentWithC:
              std::cout << "verdict: consistent with membership in C\n";
              break;
            case CentralizingVerdict::NonSmoothnessWitness:
              std::cout << "verdict: non-smoothness witness (d exactly 0 while e stays large)\n";
              break;
            default: std::cout << "verdict: inconclusive\n";
          }
        }
        return kExitOk;
      };
    });
  }

  // --- suspension ------------------------------------------------------
  auto* susp = app.add_subcommand("suspension", "odometer suspension computations");
  susp->require_subcommand(1);
  {
    auto* demo = susp->add_subcommand("demo", "recurrence experiment and rho graphs");
    auto window = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-3", "3"});
    auto max_n = std::make_shared<int>(8);
    auto out_path = std::make_shared<std::string>("");
    auto svg_path = std::make_shared<std::string>("");
    auto format = std::make_shared<std::string>("text");
    demo->add_option("--window", *window)->expected(2);
    demo->add_option("--max-n", *max_n)->check(CLI::PositiveNumber);
    demo->add_option("--out", *out_path, "report path (stdout if omitted)");
    demo->add_option("--svg", *svg_path, "optional SVG of the rho graphs");
    demo->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
    demo->callback([=, &action] {
      action = [=] {
        return run_suspension_demo(parse_window(*window), *max_n, *out_path, *svg_path, *format);
      };
    });

    auto* trace = susp->add_subcommand("trace", "chart trace of the tower element along a flow line");
    auto t_window = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"-3", "3"});
    auto t_base = std::make_shared<std::string>("01");
    trace->add_option("--window", *t_window)->expected(2);
    trace->add_option("--base-period", *t_base, "period digits of the base point");
    trace->callback([=, &action] {
      action = [=] {
        SuspensionPoint y = suspension_point(CantorPoint::from_digits("", *t_base), rat(0));
        Window w = parse_window(*t_window);
        long lo = static_cast<long>(rational_floor(w.left).get_si());
        long hi = static_cast<long>(rational_floor(w.right).get_si()) + 1;
        std::cout << "k\tcylinder\tlocal\n";
        for (const auto& row : chart_trace(y, lo, hi))
          std::cout << row.k << '\t' << row.cylinder << '\t' << "f_" << row.local_index << '\n';
        return kExitOk;
      };
    });
  }

  // --- plot ------------------------------------------------------------
  auto* plot = app.add_subcommand("plot", "deterministic SVG plots");
  {
    auto kind = std::make_shared<std::string>();
    auto plmap_path = std::make_shared<std::string>();
    auto omega = std::make_shared<std::string>("+");
    auto window = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"0", "1"});
    auto out_path = std::make_shared<std::string>();
    auto shade = std::make_shared<bool>(false);
    auto depth = std::make_shared<long>(4);
    plot->add_option("--kind", *kind, "graph | f2 | brin-navas-lamination")
        ->required()
        ->check(CLI::IsMember({"graph", "f2", "brin-navas-lamination"}));
    plot->add_option("--plmap", *plmap_path, "plmap record (kind graph)");
    plot->add_option("--omega", *omega, "sign pattern (kind f2)");
    plot->add_option("--window", *window)->expected(2);
    plot->add_flag("--shade-signs", *shade, "shade the sign regions of map - id");
    plot->add_option("--depth", *depth, "tower depth (kind brin-navas-lamination)");
    plot->add_option("--out", *out_path)->required();
    plot->callback([=, &action] {
      action = [=] {
        Window w = parse_window(*window);
        PlotSpec spec{w, {}};
        if (*kind == "graph") {
          PLMap map = plmap_path->empty() ? PLMap::identity() : plmap_from_string(slurp(*plmap_path));
          spec.items.push_back(
              PlotItem{PlotItem::Kind::FunctionGraph, "graph", std::move(map), {}, {}, *shade});
        } else if (*kind == "f2") {
          WindowedAction act = f2_family(OmegaWord::periodic(*omega), w);
          spec.items.push_back(PlotItem{PlotItem::Kind::FunctionGraph, "g_omega(" + *omega + ")",
                                        act.rep.generator(0), {}, {}, true});
        } else {
          BrinNavasAction act = BrinNavasAction::standard();
          PlotItem item{PlotItem::Kind::LeafArcs, "supp w_k, k <= " + std::to_string(*depth),
                        PLMap::identity(), {}, {}, false};
          for (long k = 0; k <= *depth; ++k) {
            PLMap wk = act.w(k);
            FixedSet fs = fixed_set(wk, w);
            for (const auto& comp : fs.complement)
              item.leaves.push_back(LeafInterval(comp.lo, comp.hi));
          }
          spec.items.push_back(std::move(item));
        }
        spit(*out_path, render_svg(spec));
        std::cout << "wrote " << *out_path << "\n";
        return kExitOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const OracleInconsistency& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const TrivialPreorder& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const RelatorViolation& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const MeasureNotInvariant& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
