#include <doctest.h>

#include <cmath>

#include "alphacc/error.hpp"
#include "alphacc/losses.hpp"
#include "alphacc/rng.hpp"
#include "alphacc/scorer.hpp"

using namespace alphacc;
using Mat = Matrix<double>;

namespace {

Mat unit_rows(Eigen::Index n, Eigen::Index d, Rng& rng) {
  Mat m(n, d);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(-1, 1);
  m.rowwise().normalize();
  return m;
}

Mat rows(std::initializer_list<std::initializer_list<double>> values) {
  Mat m(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : values) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

double next_up(double x) { return std::nextafter(x, 1e300); }
double next_down(double x) { return std::nextafter(x, -1e300); }

}  // namespace

TEST_SUITE("scorer") {
  TEST_CASE("token distance") {
    ColumnVector<double> u(3), v(3);
    u << 1, 0, 0;
    v << 0, 1, 0;
    CHECK(token_distance<double>(u, u) == 0.0);
    CHECK(token_distance<double>(u, v) == doctest::Approx(1.41421356).epsilon(1e-8));
    CHECK(token_distance<double>(u, -u) == 2.0);
  }

  TEST_CASE("late interaction examples") {
    const Mat p1 = rows({{1, 0}});
    const Mat p2 = rows({{0, 1}, {1, 0}});
    CHECK(late_interaction<double>(p1, p1, true) == 0.0);
    CHECK(late_interaction<double>(p1, p2, false) == 0.0);
    CHECK(late_interaction<double>(p2, p1, false) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
    CHECK(late_interaction<double>(p1, p2, true) == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-15));
    CHECK(late_interaction<double>(p1, p2, true) == doctest::Approx(0.35355).epsilon(1e-5));
  }

  TEST_CASE("late interaction matches the brute-force oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const Mat a = unit_rows(static_cast<Eigen::Index>(1 + rng.below(12)), 8, rng);
      const Mat b = unit_rows(static_cast<Eigen::Index>(1 + rng.below(12)), 8, rng);
      for (bool sym : {false, true}) {
        CHECK(std::abs(late_interaction<double>(a, b, sym) - late_interaction_reference(a, b, sym)) < 1e-12);
      }
      CHECK(late_interaction<double>(a, b, true) == late_interaction<double>(b, a, true));
      CHECK(late_interaction<double>(a, b, true) >= 0.0);
      CHECK(late_interaction<double>(a, b, true) <= 2.0);
    }
  }

  TEST_CASE("late interaction gradient") {
    Rng rng(19);
    Mat a = unit_rows(5, 4, rng), b = unit_rows(3, 4, rng);
    Mat da, db;
    late_interaction<double>(a, b, true, &da, &db);
    const double h = 1e-6;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const double saved = a.data()[i];
      a.data()[i] = saved + h;
      const double up = late_interaction<double>(a, b, true);
      a.data()[i] = saved - h;
      const double down = late_interaction<double>(a, b, true);
      a.data()[i] = saved;
      CHECK(da.data()[i] == doctest::Approx((up - down) / (2 * h)).epsilon(1e-6));
    }
    CHECK(db.rows() == 3);
  }

  TEST_CASE("fragment-level measures") {
    const Mat a = rows({{1, 0}, {0, 1}});
    CHECK(fragment_cosine<double>(a, a) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fragment_euclidean<double>(a, a) == 0.0);
    CHECK(fragment_cosine<double>(a, -a) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(fragment_euclidean<double>(a, -a) == doctest::Approx(2.0).epsilon(1e-15));
    // pooled (1,1)/sqrt2 vs (1,0)
    CHECK(fragment_cosine<double>(a, rows({{1, 0}})) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(fragment_euclidean<double>(a, rows({{1, 0}})) ==
          doctest::Approx(std::sqrt(2 - std::sqrt(2.0))).epsilon(1e-14));
  }

  TEST_CASE("similarity dispatch and polarity") {
    const Mat a = rows({{1, 0}}), b = rows({{0, 1}});
    SimilarityConfig cfg;
    CHECK(similarity<double>(cfg, a, b) == late_interaction<double>(a, b, true));
    cfg.measure = Measure::Cosine;
    CHECK(similarity<double>(cfg, a, b) == 0.0);
    CHECK(polarity_of(Measure::Cosine) == Polarity::SimilarityLike);
    CHECK(polarity_of(Measure::Euclidean) == Polarity::DistanceLike);
    CHECK(polarity_of(Measure::LateInteraction) == Polarity::DistanceLike);
    CHECK(parse_measure("late_interaction") == Measure::LateInteraction);
    CHECK_FALSE(parse_measure("dot").has_value());
  }

  TEST_CASE("threshold rule") {
    CHECK(classify({0.0, Polarity::DistanceLike}, 1.0));
    CHECK_FALSE(classify({2.0, Polarity::DistanceLike}, 1.0));
    CHECK(classify({0.9, Polarity::SimilarityLike}, 0.5));
    CHECK_FALSE(classify({0.2, Polarity::SimilarityLike}, 0.5));
    CHECK_FALSE(classify({1.0, Polarity::DistanceLike}, 1.0));
  }

  TEST_CASE("margin loss values") {
    const Score s04{0.4, Polarity::DistanceLike};
    CHECK(margin_loss(s04, 1, 0.5) == 0.0);
    const double pos = margin_loss(Score{0.8, Polarity::DistanceLike}, 1, 0.5);
    const double neg = margin_loss(Score{1.2, Polarity::DistanceLike}, -1, 0.5);
    // the IEEE evaluation of 0.5 - (1 - 0.8) lands one ulp above the literal 0.3
    CHECK(pos == 0.5 - (1.0 - 0.8));
    CHECK(neg == 0.5 + (1.0 - 1.2));
    CHECK((pos == 0.3 || pos == next_up(0.3) || pos == next_down(0.3)));
    CHECK((neg == 0.3 || neg == next_up(0.3) || neg == next_down(0.3)));
    CHECK(margin_loss(Score{1.6, Polarity::DistanceLike}, -1, 0.5) == 0.0);
    CHECK_THROWS_AS(margin_loss(Score{0.5, Polarity::SimilarityLike}, 1, 0.5), ConfigError);
    CHECK_THROWS_AS(margin_loss(Score{0.5, Polarity::DistanceLike}, 1, 0.0), ConfigError);
  }

  TEST_CASE("margin loss derivative") {
    CHECK(margin_loss<double>(0.8, 1, 0.5).dscore == 1.0);
    CHECK(margin_loss<double>(1.2, -1, 0.5).dscore == -1.0);
    CHECK(margin_loss<double>(0.4, 1, 0.5).dscore == 0.0);
  }

  TEST_CASE("bce loss values") {
    CHECK(bce_loss(Score{0.3, Polarity::DistanceLike}, 1, 0.0, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(bce_loss(Score{0.3, Polarity::DistanceLike}, -1, 0.0, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(bce_loss(Score{1.0, Polarity::DistanceLike}, 1, 7.5, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(bce_loss(Score{0.5, Polarity::DistanceLike}, 1, 4.0, 0.0) == doctest::Approx(0.1269).epsilon(1e-3));
    CHECK(bce_loss(Score{0.5, Polarity::DistanceLike}, 1, 4.0, 0.0) ==
          doctest::Approx(std::log1p(std::exp(-2.0))).epsilon(1e-14));

    const auto r = bce_loss<double>(0.5, 1, 4.0, 0.0);
    const double p = 1 / (1 + std::exp(-2.0));
    CHECK(r.dscore == doctest::Approx(-4.0 * (p - 1)).epsilon(1e-14));
    CHECK(r.dweight == doctest::Approx(0.5 * (p - 1)).epsilon(1e-14));
    CHECK(r.dbias == doctest::Approx(p - 1).epsilon(1e-14));
    CHECK(std::isfinite(bce_loss(Score{-100.0, Polarity::DistanceLike}, -1, 4.0, 0.0)));
  }
}
