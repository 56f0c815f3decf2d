#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "recon/codes.hpp"
#include "recon/sequence.hpp"

namespace recon {

/// Plain-text key-value serialization of a code family spec. Keys: family,
/// n, q, residues, moduli, P, p, t. Lists are comma separated; lines starting
/// with '#' are comments.
std::string serialize_spec(const CodeFamilySpec& spec);
CodeFamilySpec parse_spec(const std::string& text);

void write_spec_file(const std::string& path, const CodeFamilySpec& spec);
CodeFamilySpec read_spec_file(const std::string& path);

/// Newline-delimited symbol strings with a `q=<int>` header line.
struct SequenceFile {
  int q = 2;
  std::vector<Sequence> sequences;
};

void write_sequences(std::ostream& out, int q, const std::vector<Sequence>& sequences);
void write_sequence_file(const std::string& path, int q, const std::vector<Sequence>& sequences);
SequenceFile parse_sequences(std::istream& in);
SequenceFile read_sequence_file(const std::string& path);

}  // namespace recon
