#pragma once

#include <stdexcept>

namespace catwva {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Projection out of range, or mixed integer/half-integer character.
struct InvalidAngularMomentum : Error {
  using Error::Error;
};

/// Spherical-harmonic order with |Q| > K.
struct InvalidOrder : Error {
  using Error::Error;
};

/// Two Dicke vectors of different spin were combined.
struct SpinMismatch : Error {
  using Error::Error;
};

/// A state that must be normalized is not.
struct NotNormalized : Error {
  using Error::Error;
};

/// Post-selection projected onto the zero vector.
struct ZeroPostselection : Error {
  using Error::Error;
};

/// Grid node counts too small to integrate the harmonic content exactly.
struct GridTooCoarse : Error {
  using Error::Error;
};

/// No interior local maximum inside the scan window.
struct NoPeak : Error {
  using Error::Error;
};

/// Weak value requested at orthogonal pre/post selection.
struct DivergentWeakValue : Error {
  using Error::Error;
};

/// Post-selection outcome is deterministic; no Bernoulli information.
struct DegenerateBernoulli : Error {
  using Error::Error;
};

}  // namespace catwva
