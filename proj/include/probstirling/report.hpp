#pragma once

#include <string>
#include <utility>
#include <vector>

#include "probstirling/rational.hpp"

namespace probstirling {

using ReportParams = std::vector<std::pair<std::string, std::string>>;

/// Three evaluations of one identity. pass holds iff all three agree exactly;
/// all three values are kept so a failure shows which side diverged.
struct IdentityReport {
  std::string identity;
  ReportParams params;
  Rational lhs;
  Rational middle;
  Rational rhs;
  bool pass = false;
};

inline IdentityReport make_report(std::string identity, ReportParams params, Rational lhs,
                                  Rational middle, Rational rhs) {
  const bool pass = lhs == middle && middle == rhs;
  return {std::move(identity), std::move(params), std::move(lhs), std::move(middle), std::move(rhs),
          pass};
}

}  // namespace probstirling
