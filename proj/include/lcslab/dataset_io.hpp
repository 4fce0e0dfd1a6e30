#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcslab/seqgen.hpp"

namespace lcslab {

/// Text dataset format, one sequence per line after a header:
///
///   #lcslab v1 q=2 n=5 count=3 seed=7 probs=0.5,0.5
///   01101
///   ...
///
/// Symbols use the 0-9 a-z A-Z + / table. Probabilities are written in
/// shortest round-trip form so a re-read spec compares equal.
void write_dataset(std::ostream& out, const SequenceDataset& dataset);
void write_dataset(const std::filesystem::path& path, const SequenceDataset& dataset);

/// Throws FormatError naming the offending line.
SequenceDataset read_dataset(std::istream& in);
SequenceDataset read_dataset(const std::filesystem::path& path);

/// Shortest decimal text that reads back as exactly `x`.
std::string format_double(double x);

/// Comma-joined format_double of each entry.
std::string format_probs(const std::vector<double>& probs);

}  // namespace lcslab
