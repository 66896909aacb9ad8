#pragma once

// Transfer matrices and scattering amplitudes for 1-D piecewise-constant
// complex potentials, units hbar = 2m = 1:
//
//   -phi'' + v(x) phi = k^2 phi,   v compactly supported, k > 0.
//
// Outside the support, solutions are A e^{ikx} + B e^{-ikx}. The transfer
// matrix M(k) maps the left coefficient pair to the right one,
// (A+, B+) = M (A-, B-), and det M = 1. Transmission and reflection
// amplitudes follow from its entries:
//
//   t = 1/M22 (same from either side),  r_left = -M21/M22,  r_right = M12/M22,
//
// and the S-matrix eigenvalues are s± = (1 ± sqrt(1 - M11 M22))/M22.
// A real zero of M22 is a spectral singularity: all four amplitudes diverge.
//
// Internally each layer is crossed in the (phi, phi') basis, where the
// propagator depends on kappa_j^2 = k^2 - v_j only, so the branch of
// kappa_j = sqrt(k^2 - v_j) never enters.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sst/errors.hpp"
#include "sst/potential.hpp"

namespace sst {

inline constexpr double k_wavenumber_tolerance = 1e-12;
inline constexpr double k_singularity_underflow = 1e-300;

// 2x2 complex matrix, row-major entries.
struct Mat2 {
  Complex m11{1.0}, m12{0.0}, m21{0.0}, m22{0.0};
  Complex det() const { return m11 * m22 - m12 * m21; }
  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

// Value and derivative of a solution at one position.
struct LocalSolution {
  Complex phi{0.0}, dphi{0.0};
};

// Propagators act on (phi, phi').
inline LocalSolution operator*(const Mat2& m, const LocalSolution& s) {
  return {m.m11 * s.phi + m.m12 * s.dphi, m.m21 * s.phi + m.m22 * s.dphi};
}

// Amplitudes (A, B) of A e^{ikx} + B e^{-ikx} in a zero-potential region.
struct CoefficientPair {
  Complex a{0.0}, b{0.0};
};

inline CoefficientPair operator*(const Mat2& m, const CoefficientPair& c) {
  return {m.m11 * c.a + m.m12 * c.b, m.m21 * c.a + m.m22 * c.b};
}

struct TransferMatrix {
  Complex m11, m12, m21, m22;
  double k;
  Complex det() const { return m11 * m22 - m12 * m21; }
  Mat2 mat() const { return {m11, m12, m21, m22}; }
};

struct ScatteringAmplitudes {
  double k;
  Complex t;  // transmission amplitude; identical for left and right incidence
  Complex r_left, r_right;
  Complex s_plus, s_minus;  // S-matrix eigenvalues
};

namespace detail {

// sin(x)/x, series below |x| = 1e-4 to dodge cancellation.
inline Complex sinc(Complex x) {
  if (std::abs(x) < 1e-4) {
    const Complex x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// (phi, phi') propagator across one constant layer, parametrized by kappa
// explicitly so tests can flip the square-root branch. All entries are even
// in kappa: cos(kappa w), w sinc(kappa w) and -kappa^2 w sinc(kappa w).
inline Mat2 layer_matrix_with_kappa(double width, Complex v, double k, Complex kappa) {
  const Complex x = kappa * width;
  const Complex c = std::cos(x);
  const Complex ws = width * sinc(x);
  return {c, ws, -(k * k - v) * ws, c};
}

inline void require_wavenumber(double k) {
  if (!std::isfinite(k) || !(k > k_wavenumber_tolerance)) {
    throw InvalidWavenumberError("wavenumber must be positive (> 1e-12), got " + std::to_string(k));
  }
}

}  // namespace detail

// Propagator of (phi, phi') across one constant layer of the given width.
// Entire in k^2 - v; the kappa = 0 crossing is handled by the sinc limit.
inline Mat2 layer_matrix(double width, Complex v, double k) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::invalid_argument("layer_matrix: width must be positive and finite");
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || !std::isfinite(k)) {
    throw std::invalid_argument("layer_matrix: non-finite input");
  }
  return detail::layer_matrix_with_kappa(width, v, k, std::sqrt(Complex(k * k) - v));
}

// State of A e^{ikx} + B e^{-ikx} at position x.
inline LocalSolution from_coefficients(const CoefficientPair& c, double x, double k) {
  const Complex ik(0.0, k);
  const Complex ep = std::exp(ik * x);
  const Complex em = 1.0 / ep;
  return {c.a * ep + c.b * em, ik * (c.a * ep - c.b * em)};
}

// Inverse of from_coefficients at position x (requires k > 0).
inline CoefficientPair to_coefficients(const LocalSolution& s, double x, double k) {
  const Complex ik(0.0, k);
  const Complex ep = std::exp(ik * x);
  const Complex ratio = s.dphi / ik;
  return {0.5 * (s.phi + ratio) / ep, 0.5 * (s.phi - ratio) * ep};
}

// Transfer matrix of the potential at wavenumber k: composes the layer
// propagators across the support, then converts (phi, phi') back to
// plane-wave coefficients at both edges. det M = 1 up to roundoff.
inline TransferMatrix transfer_matrix(const PiecewisePotential& p, double k) {
  detail::require_wavenumber(k);
  Mat2 prop = Mat2::identity();
  for (const Layer& layer : p.layers()) {
    prop = detail::layer_matrix_with_kappa(layer.width, layer.value, k,
                                           std::sqrt(Complex(k * k) - layer.value)) *
           prop;
  }
  const double xl = p.left_edge();
  const double xr = p.right_edge();
  const CoefficientPair col1 = to_coefficients(prop * from_coefficients({1.0, 0.0}, xl, k), xr, k);
  const CoefficientPair col2 = to_coefficients(prop * from_coefficients({0.0, 1.0}, xl, k), xr, k);
  return {col1.a, col2.a, col1.b, col2.b, k};
}

// Amplitudes from the transfer matrix. Throws AtSingularityError when |M22|
// underflows, so scans can flag diverged rows instead of emitting Inf.
inline ScatteringAmplitudes amplitudes(const TransferMatrix& m) {
  const double m22_abs = std::abs(m.m22);
  if (m22_abs < k_singularity_underflow) {
    throw AtSingularityError("amplitudes diverge: |M22| = " + std::to_string(m22_abs), m22_abs);
  }
  const Complex t = 1.0 / m.m22;
  const Complex root = std::sqrt(1.0 - m.m11 * m.m22);
  return {m.k, t, -m.m21 / m.m22, m.m12 / m.m22, (1.0 + root) / m.m22, (1.0 - root) / m.m22};
}

// Plane-wave coefficients of the two Jost solutions. psi_{k+} -> e^{ikx} on
// the right, psi_{k-} -> e^{-ikx} on the left; the opposite-side pairs
// follow from M and det M = 1.
struct JostCoefficients {
  CoefficientPair plus_left, plus_right;    // psi_{k+}
  CoefficientPair minus_left, minus_right;  // psi_{k-}
};

inline JostCoefficients jost_coefficients(const TransferMatrix& m) {
  JostCoefficients jc;
  jc.plus_right = {1.0, 0.0};
  jc.plus_left = {m.m22, -m.m21};
  jc.minus_left = {0.0, 1.0};
  jc.minus_right = {m.m12, m.m22};
  return jc;
}

// Wronskian psi_{k+} psi'_{k-} - psi_{k-} psi'_{k+}: position-independent and
// equal to -2ik M22, so it vanishes exactly at a spectral singularity.
// (Evaluate at x -> -inf with the pairs above: the e^{+-2ikx} cross terms
// cancel and -2ik M22 remains.)
inline Complex wronskian(const TransferMatrix& m) {
  return Complex(0.0, -2.0 * m.k) * m.m22;
}

// Solution determined by its left asymptotic coefficients, evaluated at x.
// Inside the support the state is pushed through (partial) layers; beyond
// the right edge it crosses a zero-potential stretch.
inline LocalSolution solution_at(const PiecewisePotential& p, double k,
                                 const CoefficientPair& left, double x) {
  detail::require_wavenumber(k);
  if (!std::isfinite(x)) throw std::invalid_argument("solution_at: non-finite position");
  if (x <= p.left_edge()) return from_coefficients(left, x, k);

  LocalSolution s = from_coefficients(left, p.left_edge(), k);
  double pos = p.left_edge();
  for (const Layer& layer : p.layers()) {
    if (x >= pos + layer.width) {
      s = layer_matrix(layer.width, layer.value, k) * s;
      pos += layer.width;
    } else {
      return layer_matrix(x - pos, layer.value, k) * s;
    }
  }
  if (x > pos) s = layer_matrix(x - pos, Complex(0.0), k) * s;
  return s;
}

// One row of a k-grid amplitude scan. |M22| is kept for every row; rows at a
// spectral singularity carry diverged = true and no amplitude values.
struct AmplitudeRow {
  double k;
  bool diverged;
  Complex t;
  double t2, rl2, rr2;
  double m22_abs;
};

inline std::vector<AmplitudeRow> scan_amplitudes(const PiecewisePotential& p, double k_min,
                                                 double k_max, int points) {
  if (!(k_min > 0.0) || !(k_max > k_min) || points < 2) {
    throw std::invalid_argument("scan_amplitudes: need 0 < k_min < k_max and points >= 2");
  }
  std::vector<AmplitudeRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    // endpoint-exact uniform grid
    const double k = (k_min * (points - 1 - i) + k_max * i) / (points - 1);
    const TransferMatrix m = transfer_matrix(p, k);
    AmplitudeRow row{};
    row.k = k;
    row.m22_abs = std::abs(m.m22);
    try {
      const ScatteringAmplitudes amp = amplitudes(m);
      row.diverged = false;
      row.t = amp.t;
      row.t2 = std::norm(amp.t);
      row.rl2 = std::norm(amp.r_left);
      row.rr2 = std::norm(amp.r_right);
    } catch (const AtSingularityError&) {
      row.diverged = true;
      row.t = Complex(0.0);
      row.t2 = row.rl2 = row.rr2 = 0.0;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sst
