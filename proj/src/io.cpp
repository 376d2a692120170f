#include "lineact/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace lineact {

namespace {

std::string expect_line(std::istream& in, const std::string& context) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("unexpected end of input while reading " + context);
  return line;
}

void expect_header(std::istream& in, const std::string& header) {
  std::string line = expect_line(in, header);
  if (line != header) throw ParseError("expected '" + header + "', got '" + line + "'");
}

Rational read_rational_token(std::istream& in, const std::string& context) {
  std::string tok;
  if (!(in >> tok)) throw ParseError("missing number while reading " + context);
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " while reading " + context);
  }
}

}  // namespace

void write_plmap(std::ostream& out, const PLMap& map) {
  out << "plmap v1\n";
  out << "breakpoints " << map.breakpoints().size();
  for (const auto& b : map.breakpoints()) out << ' ' << to_string(b);
  out << '\n';
  for (std::size_t i = 0; i < map.piece_count(); ++i)
    out << "piece " << to_string(map.piece(i).slope) << ' ' << to_string(map.piece(i).intercept)
        << '\n';
}

PLMap read_plmap(std::istream& in) {
  expect_header(in, "plmap v1");
  std::string line = expect_line(in, "plmap breakpoints");
  std::istringstream bp_line(line);
  std::string tag;
  std::size_t count = 0;
  if (!(bp_line >> tag >> count) || tag != "breakpoints")
    throw ParseError("bad plmap breakpoints line: '" + line + "'");
  std::vector<Rational> bps;
  bps.reserve(count);
  for (std::size_t i = 0; i < count; ++i) bps.push_back(read_rational_token(bp_line, "breakpoint"));
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i <= count; ++i) {
    std::istringstream piece_line(expect_line(in, "plmap piece"));
    if (!(piece_line >> tag) || tag != "piece") throw ParseError("bad plmap piece line");
    Rational slope = read_rational_token(piece_line, "slope");
    Rational intercept = read_rational_token(piece_line, "intercept");
    pieces.push_back(AffinePiece{std::move(slope), std::move(intercept)});
  }
  try {
    return PLMap(std::move(bps), std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid plmap record: ") + e.what());
  }
}

void write_representation(std::ostream& out, const Representation& rep) {
  out << "rep v1\n";
  out << "generators " << rep.group().generator_names.size();
  for (const auto& name : rep.group().generator_names) out << ' ' << name;
  out << '\n';
  out << "relators " << rep.group().relators.size() << '\n';
  for (const auto& r : rep.group().relators)
    out << "relator " << r.str(rep.group().generator_names) << '\n';
  if (rep.relator_scope())
    out << "scope " << to_string(rep.relator_scope()->left) << ' '
        << to_string(rep.relator_scope()->right) << '\n';
  else
    out << "scope none\n";
  for (int i = 0; i < rep.generator_count(); ++i) write_plmap(out, rep.generator(i));
}

Representation read_representation(std::istream& in) {
  expect_header(in, "rep v1");
  std::istringstream gen_line(expect_line(in, "generators"));
  std::string tag;
  std::size_t count = 0;
  if (!(gen_line >> tag >> count) || tag != "generators")
    throw ParseError("bad generators line");
  std::vector<std::string> names(count);
  for (auto& n : names)
    if (!(gen_line >> n)) throw ParseError("missing generator name");

  std::istringstream rel_line(expect_line(in, "relators"));
  std::size_t rel_count = 0;
  if (!(rel_line >> tag >> rel_count) || tag != "relators") throw ParseError("bad relators line");
  std::vector<Word> relators;
  for (std::size_t i = 0; i < rel_count; ++i) {
    std::string line = expect_line(in, "relator");
    if (line.rfind("relator ", 0) != 0) throw ParseError("bad relator line: '" + line + "'");
    try {
      relators.push_back(Word::parse(line.substr(8), names));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad relator word: ") + e.what());
    }
  }

  std::istringstream scope_line(expect_line(in, "scope"));
  if (!(scope_line >> tag) || tag != "scope") throw ParseError("bad scope line");
  std::string scope_tok;
  if (!(scope_line >> scope_tok)) throw ParseError("bad scope line");
  std::optional<Window> scope;
  if (scope_tok != "none") {
    Rational left = parse_rational(scope_tok);
    Rational right = read_rational_token(scope_line, "scope right");
    scope = Window(left, right);
  }

  std::vector<PLMap> maps;
  maps.reserve(count);
  for (std::size_t i = 0; i < count; ++i) maps.push_back(read_plmap(in));
  try {
    MarkedGroup group(std::move(names), std::move(relators));
    if (scope) return Representation::window_checked(std::move(group), std::move(maps), *scope);
    return Representation(std::move(group), std::move(maps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid representation record: ") + e.what());
  }
}

void write_table(std::ostream& out, const RealizationTable& table,
                 const std::vector<std::string>& generator_names) {
  out << "realization v1\n";
  out << "rows " << table.size() << '\n';
  for (std::size_t i = 0; i < table.size(); ++i)
    out << i << '\t' << table.word(i).str(generator_names) << '\t'
        << to_string(table.value(i).to_rational()) << '\n';
}

std::vector<TableRow> read_table(std::istream& in) {
  expect_header(in, "realization v1");
  std::istringstream rows_line(expect_line(in, "rows"));
  std::string tag;
  std::size_t count = 0;
  if (!(rows_line >> tag >> count) || tag != "rows") throw ParseError("bad rows line");
  std::vector<TableRow> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string line = expect_line(in, "table row");
    auto tab1 = line.find('\t');
    auto tab2 = line.find('\t', tab1 == std::string::npos ? tab1 : tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      throw ParseError("bad table row: '" + line + "'");
    TableRow row;
    row.index = static_cast<std::size_t>(std::stoull(line.substr(0, tab1)));
    row.word = line.substr(tab1 + 1, tab2 - tab1 - 1);
    row.value = parse_rational(line.substr(tab2 + 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_transcript(std::ostream& out, const std::vector<TranscriptEntry>& transcript) {
  out << "transcript v1\n";
  out << "entries " << transcript.size() << '\n';
  for (const auto& t : transcript)
    out << t.i << ' ' << t.j << ' ' << cmp_symbol(t.verdict) << '\n';
}

std::vector<TranscriptEntry> read_transcript(std::istream& in) {
  expect_header(in, "transcript v1");
  std::istringstream count_line(expect_line(in, "entries"));
  std::string tag;
  std::size_t count = 0;
  if (!(count_line >> tag >> count) || tag != "entries") throw ParseError("bad entries line");
  std::vector<TranscriptEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::istringstream row(expect_line(in, "transcript entry"));
    TranscriptEntry t;
    std::string sym;
    if (!(row >> t.i >> t.j >> sym)) throw ParseError("bad transcript entry");
    if (sym == "<")
      t.verdict = Cmp::Less;
    else if (sym == "=")
      t.verdict = Cmp::Equiv;
    else if (sym == ">")
      t.verdict = Cmp::Greater;
    else
      throw ParseError("bad transcript verdict '" + sym + "'");
    out.push_back(t);
  }
  return out;
}

std::string plmap_to_string(const PLMap& map) {
  std::ostringstream out;
  write_plmap(out, map);
  return out.str();
}

PLMap plmap_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_plmap(in);
}

}  // namespace lineact
