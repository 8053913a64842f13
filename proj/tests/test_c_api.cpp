#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "kurepa/kurepa.h"

namespace {

struct ContextDeleter {
  void operator()(kurepa_context* ctx) const { kurepa_context_destroy(ctx); }
};
using Context = std::unique_ptr<kurepa_context, ContextDeleter>;

Context make() { return Context(kurepa_context_create()); }

std::string message(const kurepa_context* ctx) {
  std::string msg(kurepa_last_error(ctx, nullptr, 0), '\0');
  kurepa_last_error(ctx, msg.data(), msg.size() + 1);
  return msg;
}

}  // namespace

TEST(CApi, VersionAndStrings) {
  EXPECT_EQ(kurepa_abi_version(), KUREPA_ABI_VERSION);
  EXPECT_STREQ(kurepa_method_string(KUREPA_METHOD_QUADRATURE), "quadrature");
  EXPECT_STREQ(kurepa_method_string(KUREPA_METHOD_TAYLOR_PATCH), "taylor_patch");
  EXPECT_NE(std::strlen(kurepa_status_string(KUREPA_ERR_POLE)), 0u);
}

TEST(CApi, EvalSmallInteger) {
  auto ctx = make();
  ASSERT_TRUE(ctx);
  kurepa_result r{};
  ASSERT_EQ(kurepa_eval(ctx.get(), 1, {3.0, 0.0}, &r), KUREPA_OK);
  EXPECT_NEAR(r.value.re, 4.0, 1e-9);
  EXPECT_NEAR(r.value.im, 0.0, 1e-12);
  EXPECT_EQ(r.method, KUREPA_METHOD_QUADRATURE);
  EXPECT_EQ(r.warnings, 0u);
  ASSERT_EQ(kurepa_eval(ctx.get(), 2, {1.0, 0.0}, &r), KUREPA_OK);
  EXPECT_NEAR(r.value.re, 1.0, 1e-9);
}

TEST(CApi, PoleStatusCarriesLocation) {
  auto ctx = make();
  kurepa_result r{};
  EXPECT_EQ(kurepa_eval(ctx.get(), 1, {-1.0, 0.0}, &r), KUREPA_ERR_POLE);
  EXPECT_EQ(kurepa_last_pole_location(ctx.get()), -1);
  EXPECT_FALSE(message(ctx.get()).empty());
  EXPECT_EQ(kurepa_eval(ctx.get(), 3, {-5.0, 1e-5}, &r), KUREPA_ERR_NEAR_POLE);
  EXPECT_EQ(kurepa_last_pole_location(ctx.get()), -5);
  EXPECT_EQ(kurepa_eval(ctx.get(), 1, {2.0, 0.0}, &r), KUREPA_OK);
  EXPECT_TRUE(message(ctx.get()).empty());
}

TEST(CApi, WarningsAreBitFlags) {
  auto ctx = make();
  kurepa_result r{};
  ASSERT_EQ(kurepa_eval(ctx.get(), 1, {-3.05, 0.0}, &r), KUREPA_OK);
  EXPECT_TRUE(r.warnings & KUREPA_WARN_NEAR_POLE);
  ASSERT_EQ(kurepa_eval(ctx.get(), 1, {150.0, 0.0}, &r), KUREPA_OK);
  EXPECT_TRUE(r.warnings & KUREPA_WARN_LARGE_SHIFT);
  EXPECT_EQ(r.method, KUREPA_METHOD_RECURRENCE_SHIFT);
}

TEST(CApi, InvalidArguments) {
  auto ctx = make();
  kurepa_result r{};
  EXPECT_EQ(kurepa_eval(nullptr, 1, {1.0, 0.0}, &r), KUREPA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kurepa_eval(ctx.get(), 1, {1.0, 0.0}, nullptr), KUREPA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kurepa_eval(ctx.get(), 0, {1.0, 0.0}, &r), KUREPA_ERR_DOMAIN);
  EXPECT_EQ(kurepa_context_set_near_pole_radius(ctx.get(), 0.5), KUREPA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kurepa_context_set_rel_tol(ctx.get(), 0.0), KUREPA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kurepa_context_set_method(ctx.get(), static_cast<kurepa_method>(99)),
            KUREPA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(kurepa_context_set_quadrature(ctx.get(), 1e-10, 1e-12, 0.0, 1),
            KUREPA_ERR_INVALID_ARGUMENT);
  // Rejected settings leave the context usable with its previous config.
  ASSERT_EQ(kurepa_eval(ctx.get(), 1, {3.0, 0.0}, &r), KUREPA_OK);
  EXPECT_NEAR(r.value.re, 4.0, 1e-9);
}

TEST(CApi, MethodSelection) {
  auto ctx = make();
  ASSERT_EQ(kurepa_context_set_method(ctx.get(), KUREPA_METHOD_CLOSED_FORM), KUREPA_OK);
  kurepa_result r{};
  ASSERT_EQ(kurepa_eval(ctx.get(), 1, {5.0, 0.0}, &r), KUREPA_OK);
  EXPECT_EQ(r.method, KUREPA_METHOD_CLOSED_FORM);
  EXPECT_NEAR(r.value.re, 34.0, 1e-9);
  ASSERT_EQ(kurepa_context_set_quadrature(ctx.get(), 1e-11, 1e-13, 0.0, 500), KUREPA_OK);
  ASSERT_EQ(kurepa_context_set_method(ctx.get(), KUREPA_METHOD_QUADRATURE), KUREPA_OK);
  EXPECT_EQ(kurepa_eval(ctx.get(), 1, {-0.5, 0.0}, &r), KUREPA_ERR_DOMAIN);
}

TEST(CApi, ClosedFormResidueAndRecurrence) {
  auto ctx = make();
  kurepa_complex v{};
  ASSERT_EQ(kurepa_closed_form(ctx.get(), 1, {0.0, 0.0}, &v), KUREPA_OK);
  EXPECT_NEAR(v.re, 0.0, 1e-12);
  ASSERT_EQ(kurepa_residue_numeric(ctx.get(), 1, -3, 0.01, &v), KUREPA_OK);
  EXPECT_NEAR(v.re, -0.5, 1e-5);
  EXPECT_EQ(kurepa_residue_numeric(ctx.get(), 1, -2, 0.01, &v), KUREPA_ERR_DOMAIN);
  double residual = 1.0;
  ASSERT_EQ(kurepa_recurrence_residual(ctx.get(), 2, {0.5, 2.0}, &residual), KUREPA_OK);
  EXPECT_LE(residual, 1e-8);
}

TEST(CApi, SpecialFunctions) {
  kurepa_complex v{};
  ASSERT_EQ(kurepa_gamma({5.0, 0.0}, &v), KUREPA_OK);
  EXPECT_NEAR(v.re, 24.0, 1e-12);
  EXPECT_EQ(kurepa_gamma({-2.0, 0.0}, &v), KUREPA_ERR_POLE);
  ASSERT_EQ(kurepa_ln_gamma({10.0, 0.0}, &v), KUREPA_OK);
  EXPECT_NEAR(v.re, std::log(362880.0), 1e-12);
  ASSERT_EQ(kurepa_upper_gamma_at_minus_one({1.0, 0.0}, &v), KUREPA_OK);
  EXPECT_NEAR(v.re, std::exp(1.0), 1e-12);
  EXPECT_NEAR(kurepa_ei_one(), 1.8951178163559368, 1e-15);
}

TEST(CApi, LeftFactorialBufferProtocol) {
  size_t required = 0;
  EXPECT_EQ(kurepa_left_factorial(20, nullptr, 0, &required), KUREPA_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(required, 19u);
  std::vector<char> small(5);
  EXPECT_EQ(kurepa_left_factorial(20, small.data(), small.size(), nullptr),
            KUREPA_ERR_INVALID_ARGUMENT);
  std::vector<char> buf(required);
  ASSERT_EQ(kurepa_left_factorial(20, buf.data(), buf.size(), nullptr), KUREPA_OK);
  EXPECT_STREQ(buf.data(), "128425485935180314");
  char zero[2];
  ASSERT_EQ(kurepa_left_factorial(0, zero, sizeof zero, nullptr), KUREPA_OK);
  EXPECT_STREQ(zero, "0");
}

TEST(CApi, PoleCatalog) {
  kurepa_pole_list* list = nullptr;
  ASSERT_EQ(kurepa_pole_catalog(1, 4, &list), KUREPA_OK);
  ASSERT_EQ(kurepa_pole_list_size(list), 3u);
  kurepa_pole p{};
  ASSERT_EQ(kurepa_pole_list_get(list, 1, &p), KUREPA_OK);
  EXPECT_EQ(p.location, -3);
  EXPECT_EQ(p.order, 1);
  EXPECT_STREQ(p.residue_num, "-1");
  EXPECT_STREQ(p.residue_den, "2");
  EXPECT_EQ(p.residue_float, -0.5);
  EXPECT_EQ(kurepa_pole_list_get(list, 3, &p), KUREPA_ERR_INVALID_ARGUMENT);
  kurepa_pole_list_destroy(list);
  EXPECT_EQ(kurepa_pole_catalog(1, 0, &list), KUREPA_ERR_DOMAIN);
  EXPECT_EQ(list, nullptr);
  EXPECT_EQ(kurepa_pole_catalog(0, 4, &list), KUREPA_ERR_DOMAIN);
}

TEST(CApi, GridOrderStatusesAndThreads) {
  auto ctx = make();
  const kurepa_grid_spec spec{-3.0, 3.0, 7, -1.0, 1.0, 3};
  size_t n = 0;
  ASSERT_EQ(kurepa_grid_size(&spec, &n), KUREPA_OK);
  ASSERT_EQ(n, 21u);
  std::vector<kurepa_grid_point> one(n), many(n);
  ASSERT_EQ(kurepa_eval_grid(ctx.get(), 1, &spec, 1, one.data(), n), KUREPA_OK);
  ASSERT_EQ(kurepa_eval_grid(ctx.get(), 1, &spec, 4, many.data(), n), KUREPA_OK);
  for (size_t k = 0; k < n; ++k) {
    EXPECT_EQ(one[k].z.re, -3.0 + static_cast<double>(k % 7));
    EXPECT_EQ(one[k].z.im, -1.0 + static_cast<double>(k / 7));
    EXPECT_EQ(one[k].status, many[k].status);
    EXPECT_EQ(one[k].result.value.re, many[k].result.value.re);
    EXPECT_EQ(one[k].result.value.im, many[k].result.value.im);
  }
  // Middle row is the real axis: -3 and -1 are poles, -2 is removable.
  EXPECT_EQ(one[7].status, KUREPA_ERR_POLE);
  EXPECT_EQ(one[8].status, KUREPA_OK);
  EXPECT_NEAR(one[8].result.value.re, 1.0, 1e-9);
  EXPECT_EQ(one[9].status, KUREPA_ERR_POLE);
  EXPECT_EQ(one[10].status, KUREPA_OK);

  std::vector<kurepa_grid_point> short_buffer(n - 1);
  EXPECT_EQ(kurepa_eval_grid(ctx.get(), 1, &spec, 1, short_buffer.data(), n - 1),
            KUREPA_ERR_DOMAIN);
  const kurepa_grid_spec bad{1.0, 0.0, 2, 0.0, 0.0, 1};
  EXPECT_NE(kurepa_grid_size(&bad, &n), KUREPA_OK);
}

TEST(CApi, VerifySuite) {
  kurepa_report_list* list = nullptr;
  ASSERT_EQ(kurepa_verify_run(0, &list), KUREPA_OK);
  const size_t n = kurepa_report_list_size(list);
  EXPECT_GE(n, 12u);
  for (size_t k = 0; k < n; ++k) {
    kurepa_check_report r{};
    ASSERT_EQ(kurepa_report_list_get(list, k, &r), KUREPA_OK);
    EXPECT_TRUE(r.passed) << r.name;
    EXPECT_GT(r.samples, 0);
  }
  kurepa_report_list_destroy(list);
}

TEST(CApi, IndependentContextsAcrossThreads) {
  std::vector<double> values(8);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 8; ++t)
      pool.emplace_back([t, &values] {
        auto ctx = make();
        kurepa_result r{};
        if (kurepa_eval(ctx.get(), 1, {static_cast<double>(t + 1), 0.0}, &r) == KUREPA_OK)
          values[static_cast<size_t>(t)] = r.value.re;
      });
  }
  const double expected[] = {1, 2, 4, 10, 34, 154, 874, 5914};
  for (int t = 0; t < 8; ++t) EXPECT_NEAR(values[t], expected[t], 1e-9 * expected[t]);
}
