// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dpseg/rng.hpp"

namespace dpseg {

// Dense row-major tensor of doubles. The whole numeric stack runs in
// 64-bit; file containers quantize to float32 only where the on-disk
// format asks for it.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> shape);
  Tensor(std::vector<std::int64_t> shape, std::vector<double> values);

  static Tensor zeros(std::vector<std::int64_t> shape) {
    return Tensor(std::move(shape));
  }
  static Tensor full(std::vector<std::int64_t> shape, double value);
  static Tensor randn(std::vector<std::int64_t> shape, Rng& rng,
                      double stddev = 1.0);

  const std::vector<std::int64_t>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  double operator[](std::int64_t i) const { return data_[static_cast<size_t>(i)]; }
  double& operator[](std::int64_t i) { return data_[static_cast<size_t>(i)]; }

  // Multi-index access; convenience for tests and cold paths.
  double at(std::initializer_list<std::int64_t> idx) const;
  double& at(std::initializer_list<std::int64_t> idx);

  std::int64_t flat_index(std::initializer_list<std::int64_t> idx) const;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  std::string shape_str() const;

  void fill(double value);
  bool all_finite() const;

  // Reinterprets the buffer under a new shape with identical element count.
  Tensor reshaped(std::vector<std::int64_t> new_shape) const;

 private:
  std::vector<std::int64_t> shape_;
  std::vector<double> data_;
};

std::int64_t shape_product(const std::vector<std::int64_t>& shape);

// Integer label map with its own width/height, kept apart from the float
// tensors so class ids never round-trip through doubles.
struct LabelGrid {
  int h = 0;
  int w = 0;
  std::vector<std::int32_t> v;

  LabelGrid() = default;
  LabelGrid(int height, int width)
      : h(height), w(width), v(static_cast<size_t>(height) * width, 0) {}

  std::int32_t at(int y, int x) const {
    return v[static_cast<size_t>(y) * w + x];
  }
  std::int32_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
  std::int64_t size() const { return static_cast<std::int64_t>(v.size()); }
};

}  // namespace dpseg
