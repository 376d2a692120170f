#pragma once

#include <iosfwd>
#include <string>

#include "lineact/preorder.hpp"
#include "lineact/realization.hpp"
#include "lineact/rep.hpp"

namespace lineact {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// PLMap record: "plmap v1", a breakpoints line, one piece line per piece.
// All numbers are exact fractions and round-trip bit-exactly.
void write_plmap(std::ostream& out, const PLMap& map);
PLMap read_plmap(std::istream& in);

// Representation record: marked-group header + per-generator PLMap records.
void write_representation(std::ostream& out, const Representation& rep);
Representation read_representation(std::istream& in);

// Realization table export: tab-separated (index, word, value) rows.
void write_table(std::ostream& out, const RealizationTable& table,
                 const std::vector<std::string>& generator_names);

struct TableRow {
  std::size_t index;
  std::string word;
  Rational value;
};
std::vector<TableRow> read_table(std::istream& in);

// Preorder transcript: (i, j, verdict) triples over the numbering.
void write_transcript(std::ostream& out, const std::vector<TranscriptEntry>& transcript);
std::vector<TranscriptEntry> read_transcript(std::istream& in);

std::string plmap_to_string(const PLMap& map);
PLMap plmap_from_string(const std::string& text);

}  // namespace lineact
