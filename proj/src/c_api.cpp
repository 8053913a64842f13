#include "kurepa/kurepa.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "kurepa/grid.hpp"
#include "kurepa/kurepa.hpp"
#include "kurepa/special_functions.hpp"
#include "kurepa/verify.hpp"

struct kurepa_context {
  kurepa::EvalConfig config;
  std::string last_error;
  std::int64_t last_pole = 0;
};

struct kurepa_pole_list {
  struct Entry {
    kurepa::PoleInfo info;
    std::string num;
    std::string den;
  };
  std::vector<Entry> entries;
};

struct kurepa_report_list {
  std::vector<kurepa::verify::CheckReport> reports;
};

namespace {

using kurepa::Complex;

Complex to_cpp(kurepa_complex z) { return {z.re, z.im}; }
kurepa_complex to_c(Complex z) { return {z.real(), z.imag()}; }

kurepa_method to_c(kurepa::Method m) {
  switch (m) {
    case kurepa::Method::automatic: return KUREPA_METHOD_AUTO;
    case kurepa::Method::quadrature: return KUREPA_METHOD_QUADRATURE;
    case kurepa::Method::closed_form: return KUREPA_METHOD_CLOSED_FORM;
    case kurepa::Method::recurrence_shift: return KUREPA_METHOD_RECURRENCE_SHIFT;
    case kurepa::Method::taylor_patch: return KUREPA_METHOD_TAYLOR_PATCH;
  }
  return KUREPA_METHOD_AUTO;
}

bool to_cpp(kurepa_method m, kurepa::Method& out) {
  switch (m) {
    case KUREPA_METHOD_AUTO: out = kurepa::Method::automatic; return true;
    case KUREPA_METHOD_QUADRATURE: out = kurepa::Method::quadrature; return true;
    case KUREPA_METHOD_CLOSED_FORM: out = kurepa::Method::closed_form; return true;
    case KUREPA_METHOD_RECURRENCE_SHIFT: out = kurepa::Method::recurrence_shift; return true;
    case KUREPA_METHOD_TAYLOR_PATCH: out = kurepa::Method::taylor_patch; return true;
  }
  return false;
}

kurepa_result to_c(const kurepa::KurepaResult& r) {
  kurepa_result out{};
  out.value = to_c(r.value);
  out.method = to_c(r.method);
  out.est_abs_error = r.est_abs_error;
  for (auto w : r.warnings) {
    switch (w) {
      case kurepa::Warning::near_pole: out.warnings |= KUREPA_WARN_NEAR_POLE; break;
      case kurepa::Warning::large_shift: out.warnings |= KUREPA_WARN_LARGE_SHIFT; break;
      case kurepa::Warning::cancellation: out.warnings |= KUREPA_WARN_CANCELLATION; break;
    }
  }
  return out;
}

struct ErrorSink {
  std::string message;
  std::int64_t pole = 0;
};

// Runs `body`, mapping engine exceptions onto status codes.
template <typename F>
kurepa_status guarded(ErrorSink& sink, F&& body) {
  try {
    body();
    sink.message.clear();
    return KUREPA_OK;
  } catch (const kurepa::PoleError& e) {
    sink.message = e.what();
    sink.pole = e.location();
    return KUREPA_ERR_POLE;
  } catch (const kurepa::NearPoleError& e) {
    sink.message = e.what();
    sink.pole = e.location();
    return KUREPA_ERR_NEAR_POLE;
  } catch (const kurepa::ConvergenceError& e) {
    sink.message = e.what();
    return KUREPA_ERR_CONVERGENCE;
  } catch (const kurepa::DomainError& e) {
    sink.message = e.what();
    return KUREPA_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    sink.message = "out of memory";
    return KUREPA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    sink.message = e.what();
    return KUREPA_ERR_INTERNAL;
  } catch (...) {
    sink.message = "unknown error";
    return KUREPA_ERR_INTERNAL;
  }
}

template <typename F>
kurepa_status guarded(kurepa_context* ctx, F&& body) {
  ErrorSink sink;
  const kurepa_status status = guarded(sink, std::forward<F>(body));
  ctx->last_error = std::move(sink.message);
  if (status == KUREPA_ERR_POLE || status == KUREPA_ERR_NEAR_POLE) ctx->last_pole = sink.pole;
  return status;
}

template <typename F>
kurepa_status guarded_free(F&& body) {
  ErrorSink sink;
  return guarded(sink, std::forward<F>(body));
}

kurepa_status set_config(kurepa_context* ctx, const kurepa::EvalConfig& candidate) {
  const kurepa_status status = guarded(ctx, [&] {
    candidate.validate();
    ctx->config = candidate;
  });
  return status == KUREPA_ERR_DOMAIN ? KUREPA_ERR_INVALID_ARGUMENT : status;
}

}  // namespace

extern "C" {

KUREPA_API uint32_t kurepa_abi_version(void) { return KUREPA_ABI_VERSION; }

KUREPA_API const char* kurepa_status_string(kurepa_status status) {
  switch (status) {
    case KUREPA_OK: return "ok";
    case KUREPA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KUREPA_ERR_DOMAIN: return "domain error";
    case KUREPA_ERR_POLE: return "pole";
    case KUREPA_ERR_NEAR_POLE: return "near pole";
    case KUREPA_ERR_CONVERGENCE: return "convergence failure";
    case KUREPA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

KUREPA_API const char* kurepa_method_string(kurepa_method method) {
  kurepa::Method m;
  if (!to_cpp(method, m)) return "unknown";
  return kurepa::to_string(m).data();
}

KUREPA_API kurepa_context* kurepa_context_create(void) {
  return new (std::nothrow) kurepa_context();
}

KUREPA_API void kurepa_context_destroy(kurepa_context* ctx) { delete ctx; }

KUREPA_API kurepa_status kurepa_context_set_method(kurepa_context* ctx, kurepa_method method) {
  if (!ctx) return KUREPA_ERR_INVALID_ARGUMENT;
  kurepa::EvalConfig cfg = ctx->config;
  if (!to_cpp(method, cfg.method)) {
    ctx->last_error = "unknown method";
    return KUREPA_ERR_INVALID_ARGUMENT;
  }
  return set_config(ctx, cfg);
}

KUREPA_API kurepa_status kurepa_context_set_rel_tol(kurepa_context* ctx, double rel_tol) {
  if (!ctx) return KUREPA_ERR_INVALID_ARGUMENT;
  kurepa::EvalConfig cfg = ctx->config;
  cfg.rel_tol = rel_tol;
  return set_config(ctx, cfg);
}

KUREPA_API kurepa_status kurepa_context_set_near_pole_radius(kurepa_context* ctx, double radius) {
  if (!ctx) return KUREPA_ERR_INVALID_ARGUMENT;
  kurepa::EvalConfig cfg = ctx->config;
  cfg.near_pole_radius = radius;
  return set_config(ctx, cfg);
}

KUREPA_API kurepa_status kurepa_context_set_quadrature(kurepa_context* ctx, double rel_tol,
                                                       double abs_tol, double tail_cutoff,
                                                       int max_subdivisions) {
  if (!ctx) return KUREPA_ERR_INVALID_ARGUMENT;
  kurepa::EvalConfig cfg = ctx->config;
  cfg.quad.rel_tol = rel_tol;
  cfg.quad.abs_tol = abs_tol;
  cfg.quad.tail_cutoff = tail_cutoff > 0.0 ? std::optional<double>(tail_cutoff) : std::nullopt;
  cfg.quad.max_subdivisions = max_subdivisions;
  return set_config(ctx, cfg);
}

KUREPA_API size_t kurepa_last_error(const kurepa_context* ctx, char* buffer, size_t buffer_size) {
  if (!ctx) return 0;
  const std::string& msg = ctx->last_error;
  if (buffer && buffer_size > 0) {
    const size_t n = std::min(msg.size(), buffer_size - 1);
    std::memcpy(buffer, msg.data(), n);
    buffer[n] = '\0';
  }
  return msg.size();
}

KUREPA_API int64_t kurepa_last_pole_location(const kurepa_context* ctx) {
  return ctx ? ctx->last_pole : 0;
}

KUREPA_API kurepa_status kurepa_eval(kurepa_context* ctx, long i, kurepa_complex z,
                                     kurepa_result* out) {
  if (!ctx || !out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    *out = to_c(kurepa::Ki(kurepa::FamilyIndex(i), to_cpp(z), ctx->config));
  });
}

KUREPA_API kurepa_status kurepa_closed_form(kurepa_context* ctx, long i, kurepa_complex z,
                                            kurepa_complex* out) {
  if (!ctx || !out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    *out = to_c(kurepa::closed_form_Ki(kurepa::FamilyIndex(i), to_cpp(z),
                                       ctx->config.near_pole_radius));
  });
}

KUREPA_API kurepa_status kurepa_residue_numeric(kurepa_context* ctx, long i, int64_t location,
                                                double radius, kurepa_complex* out) {
  if (!ctx || !out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    *out = to_c(kurepa::residue_numeric(kurepa::FamilyIndex(i), location, radius, ctx->config));
  });
}

KUREPA_API kurepa_status kurepa_recurrence_residual(kurepa_context* ctx, long i,
                                                    kurepa_complex z, double* out) {
  if (!ctx || !out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    *out = kurepa::recurrence_residual(kurepa::FamilyIndex(i), to_cpp(z), ctx->config);
  });
}

KUREPA_API kurepa_status kurepa_gamma(kurepa_complex z, kurepa_complex* out) {
  if (!out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded_free([&] { *out = to_c(kurepa::sf::gamma(to_cpp(z))); });
}

KUREPA_API kurepa_status kurepa_ln_gamma(kurepa_complex z, kurepa_complex* out) {
  if (!out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded_free([&] { *out = to_c(kurepa::sf::ln_gamma(to_cpp(z))); });
}

KUREPA_API kurepa_status kurepa_upper_gamma_at_minus_one(kurepa_complex a, kurepa_complex* out) {
  if (!out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded_free([&] { *out = to_c(kurepa::sf::upper_gamma_at_minus_one(to_cpp(a))); });
}

KUREPA_API double kurepa_ei_one(void) { return kurepa::sf::ei_one(); }

KUREPA_API kurepa_status kurepa_left_factorial(uint64_t n, char* buffer, size_t buffer_size,
                                               size_t* required) {
  std::string digits;
  const kurepa_status status =
      guarded_free([&] { digits = kurepa::left_factorial(static_cast<unsigned long>(n)).str(); });
  if (status != KUREPA_OK) return status;
  if (required) *required = digits.size() + 1;
  if (!buffer || buffer_size < digits.size() + 1) return KUREPA_ERR_INVALID_ARGUMENT;
  std::memcpy(buffer, digits.c_str(), digits.size() + 1);
  return KUREPA_OK;
}

KUREPA_API kurepa_status kurepa_pole_catalog(long i, int64_t limit, kurepa_pole_list** out) {
  if (!out) return KUREPA_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded_free([&] {
    auto list = std::make_unique<kurepa_pole_list>();
    for (auto& p : kurepa::pole_catalog(kurepa::FamilyIndex(i), limit)) {
      std::string num = p.residue_exact.num().str();
      std::string den = p.residue_exact.den().str();
      list->entries.push_back({std::move(p), std::move(num), std::move(den)});
    }
    *out = list.release();
  });
}

KUREPA_API size_t kurepa_pole_list_size(const kurepa_pole_list* list) {
  return list ? list->entries.size() : 0;
}

KUREPA_API kurepa_status kurepa_pole_list_get(const kurepa_pole_list* list, size_t index,
                                              kurepa_pole* out) {
  if (!list || !out || index >= list->entries.size()) return KUREPA_ERR_INVALID_ARGUMENT;
  const auto& e = list->entries[index];
  *out = kurepa_pole{e.info.location, e.info.order, e.num.c_str(), e.den.c_str(),
                     e.info.residue_float};
  return KUREPA_OK;
}

KUREPA_API void kurepa_pole_list_destroy(kurepa_pole_list* list) { delete list; }

KUREPA_API kurepa_status kurepa_grid_size(const kurepa_grid_spec* spec, size_t* out) {
  if (!spec || !out) return KUREPA_ERR_INVALID_ARGUMENT;
  return guarded_free([&] {
    const kurepa::grid::GridSpec g{spec->re_min, spec->re_max, spec->re_steps,
                                   spec->im_min, spec->im_max, spec->im_steps};
    g.validate();
    *out = static_cast<size_t>(g.size());
  });
}

KUREPA_API kurepa_status kurepa_eval_grid(kurepa_context* ctx, long i,
                                          const kurepa_grid_spec* spec, unsigned threads,
                                          kurepa_grid_point* out, size_t out_len) {
  if (!ctx || !spec || !out) return KUREPA_ERR_INVALID_ARGUMENT;
  const kurepa::grid::GridSpec g{spec->re_min, spec->re_max, spec->re_steps,
                                 spec->im_min, spec->im_max, spec->im_steps};
  return guarded(ctx, [&] {
    g.validate();
    if (out_len < static_cast<size_t>(g.size()))
      throw kurepa::DomainError("grid output buffer too small");
    const kurepa::FamilyIndex idx(i);
    const kurepa::EvalConfig cfg = ctx->config;
    std::function<kurepa_grid_point(Complex)> evaluate = [&](Complex z) {
      kurepa_grid_point p{};
      p.z = to_c(z);
      ErrorSink sink;
      p.status = guarded(sink, [&] { p.result = to_c(kurepa::Ki(idx, z, cfg)); });
      return p;
    };
    const auto points = kurepa::grid::map_points(g, threads, evaluate);
    std::copy(points.begin(), points.end(), out);
  });
}

KUREPA_API kurepa_status kurepa_verify_run(uint64_t seed, kurepa_report_list** out) {
  if (!out) return KUREPA_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded_free([&] {
    auto list = std::make_unique<kurepa_report_list>();
    list->reports = kurepa::verify::run_all(seed);
    *out = list.release();
  });
}

KUREPA_API size_t kurepa_report_list_size(const kurepa_report_list* list) {
  return list ? list->reports.size() : 0;
}

KUREPA_API kurepa_status kurepa_report_list_get(const kurepa_report_list* list, size_t index,
                                                kurepa_check_report* out) {
  if (!list || !out || index >= list->reports.size()) return KUREPA_ERR_INVALID_ARGUMENT;
  const auto& r = list->reports[index];
  *out = kurepa_check_report{r.name.c_str(), r.samples, r.max_residual, r.tolerance,
                             r.passed ? 1 : 0};
  return KUREPA_OK;
}

KUREPA_API void kurepa_report_list_destroy(kurepa_report_list* list) { delete list; }

}  // extern "C"
