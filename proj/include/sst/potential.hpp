#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sst {

using Complex = std::complex<double>;

struct Layer {
  double width;   // > 0
  Complex value;  // constant potential value on the layer
};

// Piecewise-constant complex potential of compact support: identically zero
// outside [left_edge, right_edge]. Layers are contiguous from the left edge.
// Immutable after construction.
class PiecewisePotential {
 public:
  PiecewisePotential(double left_edge, std::vector<Layer> layers)
      : left_edge_(left_edge), layers_(std::move(layers)) {
    if (!std::isfinite(left_edge_)) {
      throw std::invalid_argument("PiecewisePotential: left edge must be finite");
    }
    double x = left_edge_;
    for (const Layer& layer : layers_) {
      if (!(layer.width > 0.0) || !std::isfinite(layer.width)) {
        throw std::invalid_argument("PiecewisePotential: layer widths must be positive and finite");
      }
      if (!std::isfinite(layer.value.real()) || !std::isfinite(layer.value.imag())) {
        throw std::invalid_argument("PiecewisePotential: layer values must be finite");
      }
      x += layer.width;
    }
    right_edge_ = x;
  }

  double left_edge() const { return left_edge_; }
  double right_edge() const { return right_edge_; }
  double support() const { return right_edge_ - left_edge_; }
  const std::vector<Layer>& layers() const { return layers_; }
  bool empty() const { return layers_.empty(); }

  // v(x). Layers are half-open [x_j, x_{j+1}); zero outside the support.
  Complex value_at(double x) const {
    if (x < left_edge_ || x >= right_edge_) return Complex(0.0, 0.0);
    double pos = left_edge_;
    for (const Layer& layer : layers_) {
      pos += layer.width;
      if (x < pos) return layer.value;
    }
    return layers_.back().value;  // x == right_edge_ excluded above; guards roundoff
  }

  // All interface positions, both edges included.
  std::vector<double> interfaces() const {
    std::vector<double> xs;
    xs.reserve(layers_.size() + 1);
    double pos = left_edge_;
    xs.push_back(pos);
    for (const Layer& layer : layers_) {
      pos += layer.width;
      xs.push_back(pos);
    }
    return xs;
  }

 private:
  double left_edge_;
  std::vector<Layer> layers_;
  double right_edge_;
};

}  // namespace sst
