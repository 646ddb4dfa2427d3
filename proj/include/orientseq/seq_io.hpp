#pragma once

#include <string>

#include "orientseq/ring_sequence.hpp"

namespace orientseq {

/// One sequence per file with the window length it is meant to be checked at.
struct SequenceFile {
  RingSequence seq;
  int n = 2;
};

enum class SeqFormat { text, json };

/// Canonical text form:
///   q=<int> n=<int> period=<int>\n
///   <comma-separated residues>\n
std::string write_sequence_text(const RingSequence& s, int n);

/// Canonical JSON form: {"q":..,"n":..,"period":..,"terms":[..]} plus newline.
std::string write_sequence_json(const RingSequence& s, int n);

std::string write_sequence(const RingSequence& s, int n, SeqFormat format);

/// Parses either format (auto-detected: JSON iff the first non-space byte is
/// '{'). Throws parse_error with 1-based line/column on malformed input.
SequenceFile read_sequence(const std::string& content);

SequenceFile read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const RingSequence& s, int n, SeqFormat format);

}  // namespace orientseq
