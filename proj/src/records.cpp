#include "lcslab/records.hpp"

#include <cmath>
#include <sstream>

#include "lcslab/dataset_io.hpp"

namespace lcslab {

namespace {

std::string num(double x) { return format_double(x); }

Json json_number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

std::string_view mode_name(SamplingMode m) { return m == SamplingMode::kRandom ? "random" : "exhaustive"; }

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string exact_csv_header() { return "n,k,q,mean,gamma,variance,histogram"; }

std::string exact_csv_row(const ExactResult& r, int places) {
  std::ostringstream os;
  os << r.n << ',' << r.k << ',' << r.q << ',' << r.mean_decimal(places) << ',' << r.gamma_decimal(places) << ','
     << r.variance_decimal(places) << ',';
  bool first = true;
  for (std::size_t l = 0; l < r.histogram.size(); ++l) {
    if (r.histogram[l] == 0) continue;
    os << (first ? "" : ";") << l << ':' << to_string(r.histogram[l]);
    first = false;
  }
  return os.str();
}

Json to_json(const ExactResult& r, int places) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["q"] = r.q;
  j["mean"] = r.mean_decimal(places);
  j["gamma"] = r.gamma_decimal(places);
  j["variance"] = r.variance_decimal(places);
  j["variance_convention"] = "population";
  j["symmetry_reduced"] = r.symmetry_reduced;
  j["evaluated_tuples"] = r.evaluated_tuples;
  j["total_tuples"] = to_string(r.total());
  Json hist = Json::array();
  for (std::size_t l = 0; l < r.histogram.size(); ++l)
    if (r.histogram[l] != 0) hist.push_back(Json::array({l, to_string(r.histogram[l])}));
  j["histogram"] = std::move(hist);
  j["delta_concentration"] = delta_concentration(r);
  return j;
}

std::string exact_histogram_dat(const ExactResult& r) {
  std::ostringstream os;
  os << "# length count probability (n=" << r.n << " k=" << r.k << " q=" << r.q << ")\n";
  const ExactCount total = r.total();
  for (std::size_t l = 0; l < r.histogram.size(); ++l)
    os << l << ' ' << to_string(r.histogram[l]) << ' '
       << num(static_cast<double>(static_cast<long double>(r.histogram[l]) / static_cast<long double>(total)))
       << '\n';
  return os.str();
}

std::string estimate_csv_header() {
  return "n,k,q,probs,trials,seed,mean,gamma,variance,mean_ci_lo,mean_ci_hi,var_ci_lo,var_ci_hi";
}

std::string estimate_csv_row(const EstimateRecord& r) {
  const auto& c = r.config;
  std::ostringstream os;
  os << c.n << ',' << c.k << ',' << c.alphabet.size() << ',' << csv_field(format_probs(c.alphabet.probs())) << ','
     << c.trials << ',' << c.master_seed << ',' << num(r.mean_length) << ',' << num(r.gamma_hat) << ','
     << num(r.sample_variance) << ',' << num(r.mean_ci.lo) << ',' << num(r.mean_ci.hi) << ',' << num(r.variance_ci.lo)
     << ',' << num(r.variance_ci.hi);
  return os.str();
}

Json to_json(const EstimateRecord& r) {
  const auto& c = r.config;
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["q"] = c.alphabet.size();
  j["probs"] = c.alphabet.probs();
  j["trials"] = c.trials;
  j["group_size"] = c.group_size;
  j["seed"] = c.master_seed;
  j["mode"] = mode_name(c.mode);
  j["confidence_level"] = c.confidence_level;
  j["mean"] = r.mean_length;
  j["gamma"] = r.gamma_hat;
  j["variance"] = r.sample_variance;
  j["variance_convention"] = c.group_size == 0 ? "unbiased" : "mean_of_group_unbiased";
  j["mean_ci"] = {r.mean_ci.lo, r.mean_ci.hi};
  j["variance_ci"] = {r.variance_ci.lo, r.variance_ci.hi};
  j["skewness"] = r.skewness;
  Json hist = Json::array();
  for (std::size_t l = 0; l < r.histogram.size(); ++l)
    if (r.histogram[l] != 0) hist.push_back(Json::array({l, r.histogram[l]}));
  j["histogram"] = std::move(hist);
  return j;
}

std::string sweep_csv(const SweepCurve& curve) {
  const bool scaled = curve.parameter_name == "q";
  std::ostringstream os;
  os << curve.parameter_name << ',' << estimate_csv_header() << (scaled ? ",scaled_gamma" : "") << '\n';
  for (const auto& p : curve.points) {
    os << num(p.value) << ',' << estimate_csv_row(p.record);
    if (scaled) os << ',' << num(scaled_gamma(p));
    os << '\n';
  }
  return os.str();
}

std::string sweep_dat(const SweepCurve& curve) {
  std::ostringstream os;
  os << "# " << curve.parameter_name << " gamma_hat\n";
  for (const auto& p : curve.points) os << num(p.value) << ' ' << num(p.record.gamma_hat) << '\n';
  return os.str();
}

std::string heuristic_csv_header(const std::vector<Algorithm>& algorithms) {
  std::string h = "dataset_id,k,n,q,reference_kind,reference_length";
  for (Algorithm a : algorithms) {
    const std::string name(algorithm_name(a));
    h += "," + name + "_length," + name + "_ratio";
  }
  return h;
}

std::string heuristic_csv_row(const HeuristicReport& r) {
  std::ostringstream os;
  os << csv_field(r.dataset_id) << ',' << r.k << ',' << r.n << ',' << r.q << ',' << reference_name(r.reference_kind)
     << ',' << r.reference_length;
  for (std::size_t i = 0; i < r.outcomes.size(); ++i) os << ',' << r.outcomes[i].length << ',' << num(r.ratios[i]);
  return os.str();
}

Json to_json(const HeuristicReport& r) {
  Json j;
  j["dataset_id"] = r.dataset_id;
  j["k"] = r.k;
  j["n"] = r.n;
  j["q"] = r.q;
  j["reference_kind"] = reference_name(r.reference_kind);
  j["reference_length"] = r.reference_length;
  j["reference_loosened"] = r.reference_loosened;
  Json outcomes = Json::array();
  for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
    const auto& o = r.outcomes[i];
    Json e;
    e["algorithm"] = o.algorithm;
    e["length"] = o.length;
    e["valid"] = o.valid;
    e["ratio"] = json_number(r.ratios[i]);
    e["ratio_infinite"] = std::isinf(r.ratios[i]);
    e["result"] = o.result.to_string();
    outcomes.push_back(std::move(e));
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

std::string summary_csv(const std::vector<AlgorithmSummary>& summary) {
  std::ostringstream os;
  os << "algorithm,groups,valid,infinite,mean_ratio,ratio_variance,mean_length\n";
  for (const auto& s : summary)
    os << s.algorithm << ',' << s.groups << ',' << s.valid_count << ',' << s.infinite_count << ','
       << num(s.mean_ratio) << ',' << num(s.ratio_variance) << ',' << num(s.mean_length) << '\n';
  return os.str();
}

Json to_json(const CoverageReport& r) {
  Json j;
  j["distinct_count"] = r.distinct_count;
  j["duplicate_count"] = r.duplicate_count;
  j["total_possible"] = r.total_possible;
  j["total_saturated"] = r.total_saturated;
  j["coverage_fraction"] = r.coverage_fraction;
  j["relative_coverage"] = r.relative_coverage;
  j["high_coverage"] = r.high_coverage;
  j["high_coverage_threshold"] = kHighCoverageThreshold;
  j["high_coverage_threshold_note"] = "local convention, not a published threshold";
  return j;
}

Json to_json(const CompositionReport& r) {
  Json j;
  j["global_freq"] = r.global_freq;
  j["chi2_global"] = json_number(r.chi2_global);
  j["degrees_of_freedom"] = r.degrees_of_freedom;
  j["chi2_critical_999"] = r.chi2_critical_999;
  j["chi2_positions"] = Json::array();
  for (double x : r.chi2_positions) j["chi2_positions"].push_back(json_number(x));
  j["per_position_freq"] = r.per_position_freq;
  return j;
}

}  // namespace lcslab
