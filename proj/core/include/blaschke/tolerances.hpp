#pragma once

#include <cstddef>

namespace blaschke {

// Single knob for all disk-membership and unimodularity checks.
inline constexpr double kBoundaryTol = 1e-12;

// Threshold for declaring a Maclaurin coefficient nonzero.
inline constexpr double kSeriesTol = 1e-11;

// Accepted |B(xi) - a| after Newton refinement of a preimage.
inline constexpr double kRootResidualTol = 1e-9;

// Refined roots with |z| >= 1 - kRootEscapeMargin are treated as breakdowns.
inline constexpr double kRootEscapeMargin = 1e-10;

// Pseudo-hyperbolic radius used to cluster refined roots into multiplicities.
inline constexpr double kClusterTol = 1e-7;

// Pseudo-hyperbolic threshold for declaring two multiset points identical.
inline constexpr double kMatchTol = 1e-6;

// Exclusion radius around F(0) for level-set targets.
inline constexpr double kCoincidenceTol = 1e-8;

// Default certificate tolerance (finite path).
inline constexpr double kCertTol = 1e-7;

// Dense polynomial root finding is refused beyond this degree.
inline constexpr std::size_t kPreimageDegreeCap = 128;

// Running Blaschke sum above this cap flags a non-Blaschke explicit list.
inline constexpr double kBlaschkeSumCap = 100.0;

}  // namespace blaschke
