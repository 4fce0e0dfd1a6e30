#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lcslab/exact_enum.hpp"
#include "lcslab/heuristic_bench.hpp"
#include "lcslab/mc_estimator.hpp"
#include "lcslab/seqgen.hpp"
#include "lcslab/sweep.hpp"

namespace lcslab {

using Json = nlohmann::ordered_json;

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

// ExactResult: n,k,q,mean,gamma,variance,histogram ("len:count;...")
std::string exact_csv_header();
std::string exact_csv_row(const ExactResult& r, int places = 12);
Json to_json(const ExactResult& r, int places = 12);
/// "len count" lines for plotting the length distribution.
std::string exact_histogram_dat(const ExactResult& r);

// EstimateRecord. Timing is not serialized, so identical configs give
// byte-identical lines; wall time goes to the run manifest.
std::string estimate_csv_header();
std::string estimate_csv_row(const EstimateRecord& r);
Json to_json(const EstimateRecord& r);

/// Parameter column first, then the estimate columns; alphabet sweeps add
/// scaled_gamma (gamma_hat * sqrt(q)).
std::string sweep_csv(const SweepCurve& curve);
/// Two columns: parameter value and gamma_hat.
std::string sweep_dat(const SweepCurve& curve);

std::string heuristic_csv_header(const std::vector<Algorithm>& algorithms);
std::string heuristic_csv_row(const HeuristicReport& r);
Json to_json(const HeuristicReport& r);
std::string summary_csv(const std::vector<AlgorithmSummary>& summary);

Json to_json(const CoverageReport& r);
Json to_json(const CompositionReport& r);

}  // namespace lcslab
