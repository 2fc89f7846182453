#ifndef PARADELTA_VERIFY_HPP
#define PARADELTA_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>

#include "paradelta/dynatomic.hpp"

namespace paradelta {

enum class Suite { Identities, Regions, Constants, All };

std::optional<Suite> parse_suite(const std::string& name);

struct CheckResult {
  bool ok = false;
  std::string name;
  std::string detail;  // empty on success
};

struct VerifyOptions {
  int kmax = 50;        // census range 2..kmax
  int gamma_kmax = 10;  // bijection and cross-check range
  int product_nmax = 6;
};

using CheckSink = std::function<void(const CheckResult&)>;

/// Runs the suite, reporting each check as it finishes. Exceptions thrown
/// inside a check are reported as failures of that check. Returns true when
/// every check passed.
bool run_verify(Suite suite, Tower& tower, const VerifyOptions& options, const CheckSink& sink);

}  // namespace paradelta

#endif  // PARADELTA_VERIFY_HPP
