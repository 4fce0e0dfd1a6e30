#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "lcslab/dataset_io.hpp"
#include "lcslab/error.hpp"
#include "lcslab/seqgen.hpp"
#include "oracles.hpp"

using namespace lcslab;
using oracle::seq;

namespace {
DatasetSpec make_spec(unsigned q, std::size_t n, std::size_t count, std::uint64_t seed) {
  DatasetSpec s;
  s.alphabet = Alphabet::uniform(q);
  s.seq_length = n;
  s.count = count;
  s.master_seed = seed;
  return s;
}

SequenceDataset literal(std::vector<const char*> lines) {
  SequenceDataset d;
  d.spec.seq_length = std::string(lines[0]).size();
  d.spec.count = lines.size();
  for (auto l : lines) d.sequences.push_back(seq(l));
  return d;
}
}  // namespace

TEST_CASE("rng streams") {
  CHECK(derive_key(1, {2, 3}) == derive_key(1, {2, 3}));
  CHECK(derive_key(1, {2, 3}) != derive_key(1, {3, 2}));
  CHECK(derive_key(1, {0}) != derive_key(1, {0, 0}));
  CounterRng a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
  CounterRng c(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet::uniform(1), InvalidInput);
  CHECK_THROWS_AS(Alphabet::uniform(65), InvalidInput);
  CHECK_THROWS_AS(Alphabet::from_probs({0.5, 0.6}), InvalidInput);
  CHECK_THROWS_AS(Alphabet::from_probs({1.2, -0.2}), InvalidInput);
  CHECK(Alphabet::uniform(4).is_uniform());
  CHECK_FALSE(Alphabet::from_probs({0.9, 0.1}).is_uniform());
}

TEST_CASE("generate examples") {
  const auto spec = make_spec(2, 5, 3, 42);
  const auto a = generate(spec), b = generate(spec);
  CHECK(a.sequences == b.sequences);
  CHECK(a.sequences.size() == 3);
  for (const auto& s : a.sequences) CHECK(s.size() == 5);

  DatasetSpec degenerate = make_spec(2, 4, 20, 9);
  degenerate.alphabet = Alphabet::from_probs({1.0, 0.0});
  for (const auto& s : generate(degenerate).sequences) CHECK(s.to_string() == "0000");

  DatasetSpec other = degenerate;
  other.alphabet = Alphabet::from_probs({0.0, 1.0});
  for (const auto& s : generate(other).sequences) CHECK(s.to_string() == "1111");
}

TEST_CASE("generate: workers, serial reference and stream independence") {
  auto spec = make_spec(7, 200, 50, 3);
  const auto ref = serial::generate(spec);
  for (int w : {1, 2, 5}) CHECK(generate(spec, w).sequences == ref.sequences);
  spec.count = 51;
  const auto longer = generate(spec);
  for (std::size_t i = 0; i < 50; ++i) CHECK(longer.sequences[i] == ref.sequences[i]);
  spec.master_seed = 4;
  CHECK(generate(spec).sequences[0] != ref.sequences[0]);
}

TEST_CASE("distributional sanity of uniform draws") {
  int ok = 0;
  const unsigned q = 4;
  const std::size_t n = 100, count = 100;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = generate(make_spec(q, n, count, seed));
    std::vector<double> freq(q);
    for (const auto& s : d.sequences)
      for (std::size_t i = 0; i < n; ++i) freq[s[i]] += 1.0 / static_cast<double>(n * count);
    const double bound = 5 * std::sqrt((1.0 / q) * (1 - 1.0 / q) / static_cast<double>(n * count));
    bool good = true;
    for (double f : freq) good = good && std::abs(f - 1.0 / q) < bound;
    ok += good;
  }
  CHECK(ok >= 99);
}

TEST_CASE("enumerate_all examples") {
  const auto two = enumerate_all(2, 2);
  REQUIRE(two.size() == 4);
  CHECK(two[0].to_string() == "00");
  CHECK(two[1].to_string() == "01");
  CHECK(two[2].to_string() == "10");
  CHECK(two[3].to_string() == "11");
  const auto three = enumerate_all(3, 1);
  REQUIRE(three.size() == 3);
  CHECK(three[2].to_string() == "2");
  std::size_t count = 0;
  for (SequenceEnumerator e(2, 10); e; ++e) ++count;
  CHECK(count == 1024);
  CHECK_THROWS_AS(enumerate_all(2, 20, 1000), ResourceError);
  CHECK(sequence_from_index(5, 2, 4).to_string() == "0101");
}

TEST_CASE("coverage examples") {
  const auto same = coverage(literal({"0101", "0101", "0101", "0101"}));
  CHECK(same.distinct_count == 1);
  CHECK(same.duplicate_count == 3);
  const auto all = coverage(literal({"00", "01", "10", "11"}));
  CHECK(all.coverage_fraction == 1.0);
  CHECK(all.high_coverage);

  const auto d = generate(make_spec(2, 4, 8, 77));
  std::set<std::string> distinct;
  for (const auto& s : d.sequences) distinct.insert(s.to_string());
  const auto c = coverage(d);
  CHECK(c.distinct_count == distinct.size());
  CHECK(c.distinct_count + c.duplicate_count == 8);
  CHECK(c.coverage_fraction == doctest::Approx(static_cast<double>(distinct.size()) / 16));

  const auto huge = coverage(generate(make_spec(2, 100, 4, 1)));
  CHECK(huge.total_saturated);
  CHECK(huge.coverage_fraction == 0.0);
}

TEST_CASE("composition examples") {
  const auto c = composition(literal({"01", "10"}));
  CHECK(c.global_freq == std::vector<double>{0.5, 0.5});
  CHECK(c.chi2_global == 0.0);
  const auto z = composition(literal({"00", "00"}));
  CHECK(z.global_freq == std::vector<double>{1.0, 0.0});
  for (const auto& row : composition(generate(make_spec(5, 30, 40, 2))).per_position_freq) {
    double sum = 0;
    for (double f : row) sum += f;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("chi-square of uniform binary data stays under the 99.9% quantile") {
  int below = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = composition(generate(make_spec(2, 10, 10000, 1000 + seed)));
    below += c.chi2_global < c.chi2_critical_999;
  }
  CHECK(below >= 99);
}

TEST_CASE("pearson chi2 with a zero-probability symbol") {
  CHECK(std::isinf(pearson_chi2({3, 1}, {1.0, 0.0})));
  CHECK(pearson_chi2({4, 0}, {1.0, 0.0}) == 0.0);
}

TEST_CASE("dataset file round trip") {
  DatasetSpec spec = make_spec(3, 6, 5, 99);
  spec.alphabet = Alphabet::from_probs({0.2, 0.3, 0.5});
  const auto d = generate(spec);
  std::stringstream ss;
  write_dataset(ss, d);
  CHECK(ss.str().rfind("#lcslab v1 q=3 n=6 count=5 seed=99 probs=0.2,0.3,0.5\n", 0) == 0);
  const auto back = read_dataset(ss);
  CHECK(back.sequences == d.sequences);
  CHECK(back.spec.alphabet == d.spec.alphabet);
  CHECK(back.spec.master_seed == 99);

  DatasetSpec big = make_spec(64, 50, 3, 1);
  std::stringstream s64;
  write_dataset(s64, generate(big));
  CHECK(read_dataset(s64).sequences == generate(big).sequences);
}

namespace {
std::size_t format_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_dataset(in);
  } catch (const FormatError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("dataset parser rejects malformed files with line numbers") {
  const std::string header = "#lcslab v1 q=2 n=3 count=2 seed=1 probs=0.5,0.5\n";
  CHECK(format_error_line("hello\n010\n") == 1);
  CHECK(format_error_line("#lcslab v1 q=2 n=3 count=2 seed=1\n010\n011\n") == 1);
  CHECK(format_error_line("#lcslab v1 q=3 n=3 count=2 seed=1 probs=0.5,0.5\n010\n011\n") == 1);
  CHECK(format_error_line(header + "010\n012\n") == 3);
  CHECK(format_error_line(header + "010\n01\n") == 3);
  CHECK(format_error_line(header + "010\n") == 2);
  CHECK(format_error_line(header + "010\n011\n111\n") == 4);
  CHECK(format_error_line(header + "010\r\n\n011\n") == 0);
  CHECK_THROWS_AS(read_dataset(std::filesystem::path("/nonexistent/file.txt")), std::exception);
}

TEST_CASE("format_double round trips") {
  for (double x : {0.1, 1.0 / 3, 1e-300, 12345.678, 0.0}) CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(0.5) == "0.5");
}
