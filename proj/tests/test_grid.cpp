#include <gtest/gtest.h>

#include <thread>

#include "kurepa/errors.hpp"
#include "kurepa/grid.hpp"
#include "kurepa/kurepa.hpp"

using kurepa::Complex;
using kurepa::grid::GridSpec;

TEST(GridSpec, Validation) {
  GridSpec ok{0.0, 1.0, 3, -1.0, 1.0, 2};
  EXPECT_NO_THROW(ok.validate());
  EXPECT_EQ(ok.size(), 6);
  EXPECT_THROW((GridSpec{1.0, 0.0, 2, 0.0, 0.0, 1}.validate()), kurepa::DomainError);
  EXPECT_THROW((GridSpec{0.0, 1.0, 0, 0.0, 0.0, 1}.validate()), kurepa::DomainError);
  EXPECT_THROW((GridSpec{0.0, 1.0, 2, 1.0, 0.0, 1}.validate()), kurepa::DomainError);
  EXPECT_THROW((GridSpec{0.0, 1.0, 10'000, 0.0, 1.0, 10'000}.validate()), kurepa::DomainError);
  EXPECT_THROW((GridSpec{0.0, std::numeric_limits<double>::infinity(), 2, 0.0, 0.0, 1}.validate()),
               kurepa::DomainError);
}

TEST(GridSpec, RowMajorWithExactEndpoints) {
  const GridSpec spec{1.0, 3.0, 3, -1.0, 1.0, 3};
  EXPECT_EQ(spec.point(0), Complex(1.0, -1.0));
  EXPECT_EQ(spec.point(1), Complex(2.0, -1.0));
  EXPECT_EQ(spec.point(2), Complex(3.0, -1.0));
  EXPECT_EQ(spec.point(3), Complex(1.0, 0.0));
  EXPECT_EQ(spec.point(8), Complex(3.0, 1.0));
  const GridSpec odd{0.1, 0.7, 7, 0.0, 0.3, 4};
  EXPECT_EQ(odd.point(6).real(), 0.7);
  EXPECT_EQ(odd.point(27).imag(), 0.3);
}

TEST(GridSpec, SingleStepSamplesMinimum) {
  const GridSpec spec{2.0, 5.0, 1, -3.0, 4.0, 1};
  EXPECT_EQ(spec.size(), 1);
  EXPECT_EQ(spec.point(0), Complex(2.0, -3.0));
}

TEST(MapPoints, OrderIndependentOfThreadCount) {
  const GridSpec spec{0.5, 6.0, 12, -2.0, 2.0, 9};
  const std::function<Complex(Complex)> eval = [](Complex z) { return kurepa::K(z).value; };
  const auto serial = kurepa::grid::map_points<Complex>(spec, 1, eval);
  ASSERT_EQ(serial.size(), static_cast<std::size_t>(spec.size()));
  for (unsigned threads : {2u, 5u, 0u}) {
    const auto parallel = kurepa::grid::map_points<Complex>(spec, threads, eval);
    EXPECT_EQ(serial, parallel) << threads;
  }
  for (std::int64_t k = 0; k < spec.size(); ++k)
    EXPECT_EQ(serial[static_cast<std::size_t>(k)], kurepa::K(spec.point(k)).value);
}

TEST(MapPoints, InvalidSpecThrowsBeforeWork) {
  int calls = 0;
  const std::function<int(Complex)> count = [&](Complex) { return ++calls; };
  EXPECT_THROW(kurepa::grid::map_points<int>(GridSpec{0.0, 1.0, 0, 0.0, 0.0, 1}, 2, count),
               kurepa::DomainError);
  EXPECT_EQ(calls, 0);
}
