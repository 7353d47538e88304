#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "qbool/fourier.hpp"
#include "qbool/learning.hpp"

using namespace qbool;
using qbool::test::two_term;

TEST_SUITE_BEGIN("learning");

TEST_CASE("bell sampling on point masses") {
  OracleHandle oracle(DenseOperator(2, pauli_matrix(PauliString::parse("XY")), true), 1);
  for (int i = 0; i < 20; ++i) CHECK(oracle.bell_sample() == PauliString::parse("XY"));
  CHECK(oracle.query_count() == 20);

  OracleHandle id(DenseOperator::identity(2), 2);
  CHECK(id.bell_sample() == PauliString::parse("II"));
  CHECK(id.identify_stabilizer() == PauliString::parse("II"));
  CHECK(id.query_count() == 2);
}

TEST_CASE("bell sampling matches the squared coefficients") {
  OracleHandle oracle(two_term(0.6), 3);
  const int draws = 20000;
  int xx = 0;
  for (int i = 0; i < draws; ++i)
    if (oracle.bell_sample() == PauliString::parse("XX")) ++xx;
  const double frac = static_cast<double>(xx) / draws;
  CHECK(std::abs(frac - 0.36) <= 4.0 * std::sqrt(0.36 * 0.64 / draws));
}

TEST_CASE("empirical bell distribution is close in total variation") {
  Rng rng(89);
  for (int rep = 0; rep < 3; ++rep) {
    const DenseOperator f = random_boolean(3, rng);
    const Spectrum spec = fourier_transform(f);
    OracleHandle oracle(f, derive_seed(101, rep));
    const int draws = 100000;
    std::map<PauliString, long> counts;
    for (int i = 0; i < draws; ++i) ++counts[oracle.bell_sample()];
    double tv = 0;
    for (const auto& [s, c] : spec) {
      const auto it = counts.find(s);
      const double emp = it == counts.end() ? 0.0 : static_cast<double>(it->second) / draws;
      tv += std::abs(emp - std::norm(c));
    }
    CHECK(tv / 2.0 <= 0.02);
  }
}

TEST_CASE("robust identification") {
  OracleHandle z(DenseOperator(1, pauli_matrix(PauliString::parse("Z")), true), 5);
  const auto s = z.robust_identify(0.3, 0.01);
  REQUIRE(s.has_value());
  CHECK(*s == PauliString::parse("Z"));
  // ceil(ln(1/delta) / (2 eps^2)) draws
  CHECK(z.query_count() == static_cast<long long>(std::ceil(std::log(100.0) / 0.18)));

  // planted heavy coefficient identified in nearly all runs
  const double heavy = 0.99;
  const double rest = std::sqrt(1.0 - heavy * heavy);
  DenseOperator zi(2, pauli_matrix(PauliString::parse("ZI")), true);
  DenseOperator xz(2, pauli_matrix(PauliString::parse("XZ")), true);
  const DenseOperator f = anticommuting_combination({heavy, rest}, {zi, xz});
  int hits = 0;
  const int runs = 200;
  for (int r = 0; r < runs; ++r) {
    OracleHandle oracle(f, derive_seed(300, r));
    const auto got = oracle.robust_identify(0.3, 0.01);
    if (got && *got == PauliString::parse("ZI")) ++hits;
  }
  CHECK(hits >= runs * 99 / 100);
}

TEST_CASE("coefficient estimation") {
  OracleHandle z(DenseOperator(1, pauli_matrix(PauliString::parse("Z")), true), 7);
  CHECK(z.estimate_coefficient(PauliString::parse("Z"), 0.1, 0.01) == doctest::Approx(1.0));

  OracleHandle id(DenseOperator::identity(1), 8);
  const double off = id.estimate_coefficient(PauliString::parse("X"), 0.05, 0.01);
  CHECK(std::abs(off) <= 0.05);

  // concentration at the declared radius
  int good = 0;
  const int runs = 200;
  for (int r = 0; r < runs; ++r) {
    OracleHandle oracle(two_term(0.6), derive_seed(400, r));
    const double est = oracle.estimate_coefficient(PauliString::parse("YI"), 0.05, 0.01);
    if (std::abs(est - 0.8) <= 0.05) ++good;
  }
  CHECK(good >= runs * 99 / 100);

  // two oracle uses per coin flip
  OracleHandle acc(two_term(0.6), 9);
  acc.estimate_coefficient(PauliString::parse("XX"), 0.1, 0.05);
  const long long m = static_cast<long long>(std::ceil(2.0 * std::log(2.0 / 0.05) / 0.01));
  CHECK(acc.query_count() == 2 * m);
}

TEST_CASE("weight estimation") {
  const DenseOperator zz(2, pauli_matrix(PauliString::parse("ZZ")), true);
  OracleHandle oracle(zz, 10);
  CHECK(oracle.true_weight(IndicatorString::prefix(2, {3})) == doctest::Approx(1.0));
  CHECK(oracle.true_weight(IndicatorString::prefix(2, {1})) == doctest::Approx(0.0));

  const WeightEstimate full = oracle.estimate_weight(IndicatorString::prefix(2, {3}), 0.3, 0.01);
  CHECK(full.value == doctest::Approx(1.0).epsilon(0.05));
  CHECK(full.radius == doctest::Approx(0.0225));

  // generic indicator (fixed positions not a prefix) falls back to a scan
  OracleHandle tt(two_term(0.6), 11);
  const IndicatorString second(2, {{1, std::uint8_t{1}}});
  CHECK(tt.true_weight(second) == doctest::Approx(0.36));

  int good = 0;
  const int runs = 200;
  for (int r = 0; r < runs; ++r) {
    OracleHandle o(two_term(0.6), derive_seed(500, r));
    const WeightEstimate w = o.estimate_weight(IndicatorString::prefix(2, {1}), 0.3, 0.01);
    if (std::abs(w.value - 0.36) <= w.radius) ++good;
  }
  CHECK(good >= runs * 99 / 100);

  // four oracle uses per coin flip
  OracleHandle acc(zz, 12);
  const WeightEstimate w = acc.estimate_weight(IndicatorString::prefix(2, {3}), 0.3, 0.05);
  CHECK(acc.query_count() == w.queries_used);
  const long long m =
      static_cast<long long>(std::ceil(2.0 * std::log(2.0 / 0.05) / (0.0225 * 0.0225)));
  CHECK(w.queries_used == 4 * m);
}

TEST_CASE("large-coefficient search on point masses") {
  OracleHandle oracle(DenseOperator(3, pauli_matrix(PauliString::parse("XYZ")), true), 13);
  const GlResult res = goldreich_levin(oracle, 0.5, 0.05);
  REQUIRE(res.coefficients.size() == 1);
  CHECK(res.coefficients.front().first == PauliString::parse("XYZ"));
  CHECK(std::abs(std::abs(res.coefficients.front().second) - 1.0) <= 0.2);
}

TEST_CASE("search lists both heavy terms of the two-term example") {
  int both = 0;
  const int runs = 40;
  for (int r = 0; r < runs; ++r) {
    OracleHandle oracle(two_term(0.6), derive_seed(600, r));
    const GlResult res = goldreich_levin(oracle, 0.5, 0.05);
    bool xx = false, yi = false;
    for (const auto& [s, c] : res.coefficients) {
      xx |= s == PauliString::parse("XX");
      yi |= s == PauliString::parse("YI");
    }
    both += xx && yi && res.coefficients.size() == 2;
  }
  CHECK(both >= runs * 95 / 100);
}

TEST_CASE("exact mode equals the threshold rule") {
  Rng rng(97);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const AnticommutingSample sample = random_anticommuting_boolean(n, 2 * n, rng);
    OracleHandle oracle(sample.op, derive_seed(700, rep), /*exact=*/true);
    const double gamma = 0.3;
    const GlResult res = goldreich_levin(oracle, gamma, 0.05);
    const auto expect = test::exact_large_coefficients(oracle.spectrum(), gamma);
    REQUIRE(res.coefficients.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
      CHECK(res.coefficients[i].first == expect[i]);
      CHECK(res.coefficients[i].second ==
            doctest::Approx(oracle.spectrum().real_coefficient(expect[i])));
    }
  }
}

TEST_CASE("list stays under the cap and estimations under the budget") {
  Rng rng(103);
  for (int rep = 0; rep < 5; ++rep) {
    const DenseOperator f = random_boolean(3, rng);
    OracleHandle oracle(f, derive_seed(800, rep));
    const double gamma = 0.4;
    const GlResult res = goldreich_levin(oracle, gamma, 0.05);
    CHECK(res.max_list_size <= static_cast<std::size_t>(4.0 / (gamma * gamma)));
    CHECK_FALSE(res.cap_enforced);
    CHECK(res.estimations <= static_cast<long long>(16.0 * f.n / (gamma * gamma)));
  }
}

TEST_SUITE_END();
