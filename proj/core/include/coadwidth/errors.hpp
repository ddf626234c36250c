#pragma once

#include <stdexcept>
#include <string>

namespace coadwidth {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: unknown type letter, rank out of
// range, dimension mismatch, a vector that is not a root, a parabolic
// containment violation, and the like.
struct invalid_input_error : error {
  using error::error;
};

// The zero weight: the orbit is a single point and carries no width data.
struct degenerate_orbit_error : error {
  using error::error;
};

// A condition the theory guarantees failed to hold (for instance a fixed
// point set without a unique Bruhat maximum). Always a bug, never a tie
// to break silently.
struct internal_inconsistency_error : error {
  using error::error;
};

// Refusal to materialize a Weyl group past the enumeration cap.
struct enumeration_guard_error : error {
  using error::error;
};

}  // namespace coadwidth
