#include "recon/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace recon {

namespace {

std::string join(const std::vector<long long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<long long> split_ll(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

}  // namespace

std::string serialize_spec(const CodeFamilySpec& spec) {
  std::string out = "# reconcodes.codespec.v1\n";
  out += "family=" + std::string(to_string(spec.family)) + "\n";
  out += "n=" + std::to_string(spec.n) + "\n";
  out += "q=" + std::to_string(spec.q) + "\n";
  out += "residues=" + join(spec.residues) + "\n";
  out += "moduli=" + join(spec.moduli) + "\n";
  out += "P=" + std::to_string(spec.P) + "\n";
  out += "p=" + std::to_string(spec.p) + "\n";
  out += "t=" + std::to_string(spec.t) + "\n";
  return out;
}

CodeFamilySpec parse_spec(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad spec line: " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (const char* key : {"family", "n", "q"}) {
    if (!kv.count(key)) throw std::invalid_argument(std::string("spec missing key: ") + key);
  }
  CodeFamilySpec spec;
  auto family = family_from_string(kv["family"]);
  if (!family) throw std::invalid_argument("unknown family: " + kv["family"]);
  spec.family = *family;
  spec.n = std::stoi(kv["n"]);
  spec.q = std::stoi(kv["q"]);
  if (kv.count("residues")) spec.residues = split_ll(kv["residues"]);
  if (kv.count("moduli")) spec.moduli = split_ll(kv["moduli"]);
  if (kv.count("P")) spec.P = std::stoi(kv["P"]);
  if (kv.count("p")) spec.p = std::stoll(kv["p"]);
  if (kv.count("t")) spec.t = std::stoi(kv["t"]);
  validate_spec(spec);
  return spec;
}

void write_spec_file(const std::string& path, const CodeFamilySpec& spec) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_spec(spec);
}

CodeFamilySpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

void write_sequences(std::ostream& out, int q, const std::vector<Sequence>& sequences) {
  out << "q=" << q << "\n";
  for (const Sequence& s : sequences) out << s.to_string() << "\n";
}

void write_sequence_file(const std::string& path, int q, const std::vector<Sequence>& sequences) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_sequences(out, q, sequences);
}

SequenceFile parse_sequences(std::istream& in) {
  SequenceFile file;
  std::string line;
  bool have_q = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_q) {
      if (line.rfind("q=", 0) != 0) throw std::invalid_argument("expected q=<int> header line");
      file.q = std::stoi(line.substr(2));
      have_q = true;
      continue;
    }
    file.sequences.push_back(Sequence::from_digits(file.q, line));
  }
  if (!have_q) throw std::invalid_argument("missing q=<int> header line");
  return file;
}

SequenceFile read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return parse_sequences(in);
}

}  // namespace recon
