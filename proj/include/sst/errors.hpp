#pragma once

#include <stdexcept>
#include <string>

namespace sst {

// Base class for all library-thrown conditions that are not plain
// argument-validation failures (those use std::invalid_argument).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k <= 0 or below the 1e-12 tolerance where the plane-wave basis degenerates.
class InvalidWavenumberError : public Error {
 public:
  using Error::Error;
};

// |M22| underflowed: reflection/transmission amplitudes diverge at this k.
// Carries the measured |M22| so scans can record the row explicitly.
class AtSingularityError : public Error {
 public:
  AtSingularityError(const std::string& what, double m22_abs)
      : Error(what), m22_abs_(m22_abs) {}
  double m22_abs() const { return m22_abs_; }

 private:
  double m22_abs_;
};

// r outside the admissible window: cos(2r) < 1/2 or cos(r) >= 0.
class WindowDomainError : public Error {
 public:
  using Error::Error;
};

// Bracketed root refinement found no sign change.
class NoRootError : public Error {
 public:
  using Error::Error;
};

// Iterative search exhausted its iteration budget without meeting tolerance.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

// Newton iterate left the k > 0 domain.
class LeftDomainError : public Error {
 public:
  using Error::Error;
};

// The two initial conditions handed to the numeric transfer-matrix
// reconstruction are (nearly) linearly dependent.
class DegenerateBasisError : public Error {
 public:
  using Error::Error;
};

// TE mode is evanescent at the requested frequency.
class BelowCutoffError : public Error {
 public:
  using Error::Error;
};

// Requested singularity design admits no propagating mode geometry.
class NoPropagatingModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace sst
