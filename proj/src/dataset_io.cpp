#include "lcslab/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "lcslab/error.hpp"

namespace lcslab {

namespace {

constexpr std::string_view kMagic = "#lcslab";
constexpr std::string_view kVersion = "v1";

template <typename T>
T parse_integer(std::string_view text, std::string_view key, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw FormatError("bad integer for " + std::string(key) + ": '" + std::string(text) + "'", line);
  return value;
}

std::vector<double> parse_probs(std::string_view text, std::size_t line) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw FormatError("bad probability '" + std::string(item) + "'", line);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_probs(const std::vector<double>& probs) {
  std::string out;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (i) out += ',';
    out += format_double(probs[i]);
  }
  return out;
}

void write_dataset(std::ostream& out, const SequenceDataset& dataset) {
  const auto& spec = dataset.spec;
  out << kMagic << ' ' << kVersion << " q=" << spec.alphabet.size() << " n=" << spec.seq_length
      << " count=" << spec.count << " seed=" << spec.master_seed
      << " probs=" << format_probs(spec.alphabet.probs()) << '\n';
  for (const auto& s : dataset.sequences) out << s.to_string() << '\n';
}

void write_dataset(const std::filesystem::path& path, const SequenceDataset& dataset) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_dataset(out, dataset);
}

SequenceDataset read_dataset(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty dataset file", 1);

  std::istringstream tokens(header);
  std::string magic, version;
  tokens >> magic >> version;
  if (magic != kMagic || version != kVersion) throw FormatError("missing '#lcslab v1' header", 1);
  std::map<std::string, std::string, std::less<>> fields;
  for (std::string tok; tokens >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("header token without '=': " + tok, 1);
    fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"q", "n", "count", "seed", "probs"})
    if (!fields.count(key)) throw FormatError(std::string("header lacks ") + key + "=", 1);

  const auto q = parse_integer<unsigned>(fields["q"], "q", 1);
  DatasetSpec spec;
  try {
    spec.alphabet = Alphabet::from_probs(parse_probs(fields["probs"], 1));
    spec.seq_length = parse_integer<std::size_t>(fields["n"], "n", 1);
    spec.count = parse_integer<std::size_t>(fields["count"], "count", 1);
    spec.master_seed = parse_integer<std::uint64_t>(fields["seed"], "seed", 1);
    spec.validate();
  } catch (const InvalidInput& e) {
    throw FormatError(e.what(), 1);
  }
  if (spec.alphabet.size() != q) throw FormatError("q does not match the number of probabilities", 1);

  SequenceDataset out{spec, {}};
  out.sequences.reserve(spec.count);
  std::string text;
  std::size_t line = 1;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    if (out.sequences.size() == spec.count)
      throw FormatError("more sequences than count=" + std::to_string(spec.count), line);
    if (text.size() != spec.seq_length)
      throw FormatError("sequence length " + std::to_string(text.size()) + " != n=" +
                            std::to_string(spec.seq_length),
                        line);
    try {
      out.sequences.push_back(Sequence::from_string(text, q));
    } catch (const InvalidInput& e) {
      throw FormatError(e.what(), line);
    }
  }
  if (out.sequences.size() != spec.count)
    throw FormatError("expected " + std::to_string(spec.count) + " sequences, found " +
                          std::to_string(out.sequences.size()),
                      line);
  return out;
}

SequenceDataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string(), 0);
  return read_dataset(in);
}

}  // namespace lcslab
