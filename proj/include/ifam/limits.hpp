#pragma once

#include <stdexcept>

namespace ifam {

/// Largest ground set accepted by the enumerators.
inline constexpr int kMaxEnumerationN = 13;
/// Largest uniformity accepted by the generator search.
inline constexpr int kMaxGeneratorK = 4;
/// Largest number of k-subsets the brute-force oracle will handle.
inline constexpr long long kMaxOracleVertices = 64;

/// A request beyond the desk-scale caps above.
class ScaleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ifam
