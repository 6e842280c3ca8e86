#ifndef BROCARD_SAMPLING_HPP_
#define BROCARD_SAMPLING_HPP_

#include <exception>
#include <optional>
#include <vector>

#include "brocard/locus.hpp"

namespace brocard {

/// Uniform grid t_k = t0 + (k + phase) * period / n, k = 0..n-1.
std::vector<double> uniform_grid(std::size_t n, double phase = 0.0, double period = 2.0 * kPi,
                                 double t0 = 0.0);

namespace detail {

template <typename F>
std::optional<Point> eval_or_skip(F& f, double t) {
  try {
    return f(t);
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

inline LocusSamples assemble(const std::vector<double>& ts,
                             const std::vector<std::optional<Point>>& vals, double period) {
  LocusSamples out;
  out.period = period;
  out.samples.reserve(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (vals[k]) {
      out.samples.push_back({ts[k], *vals[k]});
    } else {
      out.skipped_t.push_back(ts[k]);
    }
  }
  return out;
}

}  // namespace detail

/// Serial reference sampler. `f(t)` returns the tracked point; a
/// DegenerateInput thrown by `f` marks t as skipped.
template <typename F>
LocusSamples sample_serial(const std::vector<double>& ts, F f, double period = 2.0 * kPi) {
  std::vector<std::optional<Point>> vals(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) vals[k] = detail::eval_or_skip(f, ts[k]);
  return detail::assemble(ts, vals, period);
}

/// OpenMP sampler; output is identical to sample_serial (t-ordered). Any
/// exception other than DegenerateInput is rethrown after the loop.
template <typename F>
LocusSamples sample_parallel(const std::vector<double>& ts, F f, double period = 2.0 * kPi) {
  std::vector<std::optional<Point>> vals(ts.size());
  std::exception_ptr failure;
  const auto n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    try {
      vals[static_cast<std::size_t>(k)] = detail::eval_or_skip(f, ts[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical(brocard_sampling_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return detail::assemble(ts, vals, period);
}

/// Generic per-index map with the same serial/parallel split; used for
/// sweeps that produce more than one point per parameter.
template <typename T, typename F>
std::vector<T> map_parallel(const std::vector<double>& ts, F f) {
  std::vector<T> out(ts.size());
  std::exception_ptr failure;
  const auto n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = f(ts[static_cast<std::size_t>(k)]);
    } catch (...) {
#pragma omp critical(brocard_map_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <typename T, typename F>
std::vector<T> map_serial(const std::vector<double>& ts, F f) {
  std::vector<T> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(f(t));
  return out;
}

}  // namespace brocard

#endif
