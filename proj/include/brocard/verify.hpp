#ifndef BROCARD_VERIFY_HPP_
#define BROCARD_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "brocard/report.hpp"

namespace brocard {

struct VerifyOptions {
  /// Restrict to one claim group; empty runs all.
  std::string only;
  /// Inellipse semi-axes for the porism and observations groups
  /// (default 1, 0.8).
  std::optional<double> a;
  std::optional<double> b;
};

/// Claim groups in report order: prop1, prop2, prop3, prop4, prop5, remarks,
/// prop6, conservation, appendix, porism, observations, equilateral. Group k
/// carries acceptance criterion k.
const std::vector<std::string>& verification_groups();

/// Runs the deterministic verification suite. Throws OutOfRange for an
/// unknown group name.
VerificationReport run_verification(const VerifyOptions& opts = {});

}  // namespace brocard

#endif
