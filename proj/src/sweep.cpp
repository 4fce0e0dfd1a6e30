#include "lcslab/sweep.hpp"

#include <cmath>
#include <sstream>

#include "lcslab/error.hpp"

namespace lcslab {

std::uint64_t sweep_point_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return derive_key(master_seed, {static_cast<std::uint64_t>(StreamDomain::kSweep), index});
}

namespace {

template <typename T>
void require_increasing(std::span<const T> values, const char* what) {
  if (values.empty()) throw InvalidInput(std::string(what) + ": empty grid");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1])) throw InvalidInput(std::string(what) + ": grid must be strictly increasing");
}

}  // namespace

SweepCurve sweep_p(const ExperimentConfig& base, std::span<const double> p_grid, int workers) {
  require_increasing(p_grid, "sweep_p");
  for (double p : p_grid)
    if (!(p > 0.0 && p <= 0.5)) throw InvalidInput("sweep_p: p must be in (0, 0.5], got " + std::to_string(p));
  SweepCurve curve{"p", {}};
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    ExperimentConfig config = base;
    config.alphabet = Alphabet::from_probs({1.0 - p_grid[i], p_grid[i]});
    config.master_seed = sweep_point_seed(base.master_seed, i);
    curve.points.push_back({p_grid[i], run_experiment(config, workers)});
  }
  return curve;
}

SweepCurve sweep_alphabet(const ExperimentConfig& base, std::span<const unsigned> q_list, int workers) {
  require_increasing(q_list, "sweep_alphabet");
  SweepCurve curve{"q", {}};
  for (std::size_t i = 0; i < q_list.size(); ++i) {
    ExperimentConfig config = base;
    config.alphabet = Alphabet::uniform(q_list[i]);
    config.master_seed = sweep_point_seed(base.master_seed, i);
    curve.points.push_back({static_cast<double>(q_list[i]), run_experiment(config, workers)});
  }
  return curve;
}

double scaled_gamma(const SweepPoint& point) {
  return point.record.gamma_hat * std::sqrt(static_cast<double>(point.record.config.alphabet.size()));
}

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidInput("bad grid value '" + s + "' in '" + text + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw InvalidInput("grid must be start:stop:step, got '" + text + "'");
    const double start = number(parts[0]), stop = number(parts[1]), step = number(parts[2]);
    if (!(step > 0.0) || stop < start) throw InvalidInput("grid needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) {
      // round to 12 decimals so 0.05 * 3 prints as 0.15
      const double v = start + step * static_cast<double>(i);
      out.push_back(std::round(v * 1e12) / 1e12);
    }
    return out;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(number(part));
  return out;
}

}  // namespace lcslab
