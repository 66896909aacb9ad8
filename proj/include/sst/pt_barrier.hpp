#pragma once

// Closed forms for the PT-symmetric imaginary barrier
//
//   v(x) = +i z  on (-a, 0),   -i z  on (0, a),   0 otherwise,
//
// with a > 0, z real nonzero. With y = z/k^2 and w = sqrt(1 - i y):
//
//   M22(k) = e^{2iak} [f1(k) - i f2(k)] / sqrt(1 + y^2),
//   f1(k)  = sqrt(1 + y^2) |cos(a k w)|^2 - |sin(a k w)|^2,
//   f2(k)  = Re[ sqrt(1 + i y) (2 - i y) sin(a k w) cos(a k w*) ],
//
// so spectral singularities are the common real zeros f1 = f2 = 0. The
// (q, r) variables split 2 a k w = r - i q into the real pair used by the
// singularity solver; numerically cos(2 a k w) = cos r cosh q + i sin r sinh q.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sst/scattering.hpp"

namespace sst {

struct BarrierParams {
  double a;  // half-width, > 0
  double z;  // strength, real and nonzero

  BarrierParams(double a_, double z_) : a(a_), z(z_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("BarrierParams: half-width must be positive and finite");
    }
    if (z == 0.0 || !std::isfinite(z)) {
      throw std::invalid_argument("BarrierParams: strength must be nonzero and finite");
    }
  }
};

// y = z/k^2, w = sqrt(1 - i y) (principal branch), and the real pair (q, r)
// with 2 a k w = r - i q; sign(q) = sign(y), r > 0.
struct ReducedVars {
  double y;
  Complex w;
  double q;
  double r;
};

inline PiecewisePotential barrier_profile(const BarrierParams& p) {
  return PiecewisePotential(-p.a, {{p.a, Complex(0.0, p.z)}, {p.a, Complex(0.0, -p.z)}});
}

namespace detail {

inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

inline Complex f1_complex(const BarrierParams& p, double k) {
  const double y = p.z / (k * k);
  const Complex akw = p.a * k * std::sqrt(Complex(1.0, -y));
  const Complex c = std::cos(akw);
  const Complex s = std::sin(akw);
  return std::sqrt(1.0 + y * y) * c * std::conj(c) - s * std::conj(s);
}

inline Complex f2_complex(const BarrierParams& p, double k) {
  const double y = p.z / (k * k);
  const Complex akw = p.a * k * std::sqrt(Complex(1.0, -y));
  return std::sqrt(Complex(1.0, y)) * Complex(2.0, -y) * std::sin(akw) * std::cos(std::conj(akw));
}

}  // namespace detail

// f1 and f2 are real; the defining complex expressions carry only a roundoff
// imaginary residue (checked in tests).
inline double f1(const BarrierParams& p, double k) {
  detail::require_wavenumber(k);
  return detail::f1_complex(p, k).real();
}

inline double f2(const BarrierParams& p, double k) {
  detail::require_wavenumber(k);
  return detail::f2_complex(p, k).real();
}

inline Complex m22_closed_form(const BarrierParams& p, double k) {
  detail::require_wavenumber(k);
  const double y = p.z / (k * k);
  const Complex phase = std::exp(Complex(0.0, 2.0 * p.a * k));
  return phase * Complex(f1(p, k), -f2(p, k)) / std::sqrt(1.0 + y * y);
}

inline ReducedVars reduced_vars(const BarrierParams& p, double k) {
  detail::require_wavenumber(k);
  const double y = p.z / (k * k);
  const double root = std::sqrt(y * y + 1.0);
  ReducedVars rv;
  rv.y = y;
  rv.w = std::sqrt(Complex(1.0, -y));
  rv.q = p.a * k * std::sqrt(2.0 * (root - 1.0)) * detail::sgn(y);
  rv.r = p.a * k * std::sqrt(2.0 * (root + 1.0));
  return rv;
}

}  // namespace sst
