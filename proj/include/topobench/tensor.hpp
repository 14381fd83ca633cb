// Copyright 2026 The topobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPOBENCH_TENSOR_HPP
#define TOPOBENCH_TENSOR_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace topobench {

/// Largest dense tensor to_dense will materialize.
inline constexpr std::size_t kMaxDenseEntries = 1'000'000;

/// Row-major dense tensor of any order (order 0 is a scalar).
class DenseTensor {
 public:
  DenseTensor() : data_(1, 0.0) {}
  explicit DenseTensor(std::vector<std::size_t> shape, double fill = 0.0);
  DenseTensor(std::vector<std::size_t> shape, std::vector<double> data);

  static DenseTensor scalar(double value) { return DenseTensor({}, {value}); }
  static DenseTensor vector(std::span<const double> values);
  static DenseTensor matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  static DenseTensor identity(std::size_t n);

  std::size_t order() const { return shape_.size(); }
  std::span<const std::size_t> shape() const { return shape_; }
  std::size_t dim(std::size_t mode) const { return shape_.at(mode); }
  std::size_t size() const { return data_.size(); }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  std::size_t offset(std::span<const std::size_t> index) const;
  double at(std::span<const std::size_t> index) const { return data_[offset(index)]; }
  double& at(std::span<const std::size_t> index) { return data_[offset(index)]; }
  double at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }

  /// Row `r` of an order-2 tensor.
  std::span<const double> row(std::size_t r) const;

  /// Axis i of the result is axis axes[i] of this tensor.
  DenseTensor permuted(std::span<const std::size_t> axes) const;

  /// This tensor outer a vector: shape gains one trailing mode.
  DenseTensor outer(std::span<const double> v) const;

  DenseTensor& operator+=(const DenseTensor& other);

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// Largest absolute entry difference; throws on shape mismatch.
double max_abs_diff(const DenseTensor& a, const DenseTensor& b);

/// (T x_k W)[.., j_k, ..] = sum_{i_k} T[.., i_k, ..] W[i_k, j_k].
/// Throws ValidationError unless W is a matrix with dim(k) rows.
DenseTensor dense_mode_product(const DenseTensor& t, std::size_t mode, const DenseTensor& w);

enum class ModeKind { kTopology, kLabel };

struct ModeInfo {
  ModeKind kind = ModeKind::kTopology;
  std::size_t dim = 0;
  /// Topology modes with equal space share node ids (and shuffles).
  int space = 0;
  /// For label modes: the topology modes that determine the label.
  std::vector<std::size_t> depends_on;

  friend bool operator==(const ModeInfo&, const ModeInfo&) = default;
};

/// Coordinate-format sparse tensor: an index table (one row of mode
/// indices per entry) plus one weight per row. Rows are kept sorted and
/// unique; each label mode holds a single entry once all other modes are
/// fixed.
class SparseTensor {
 public:
  SparseTensor() = default;
  /// `indices` is row-major, modes.size() columns. Validates and sorts.
  SparseTensor(std::vector<ModeInfo> modes, std::vector<std::size_t> indices,
               std::vector<double> weights);

  std::size_t order() const { return modes_.size(); }
  std::size_t nnz() const { return weights_.size(); }
  const std::vector<ModeInfo>& modes() const { return modes_; }
  const ModeInfo& mode(std::size_t m) const { return modes_.at(m); }
  std::span<const std::size_t> row(std::size_t r) const {
    return std::span<const std::size_t>(indices_).subspan(r * order(), order());
  }
  std::span<const std::size_t> indices() const { return indices_; }
  std::span<const double> weights() const { return weights_; }

  friend bool operator==(const SparseTensor&, const SparseTensor&) = default;

 private:
  std::vector<ModeInfo> modes_;
  std::vector<std::size_t> indices_;
  std::vector<double> weights_;
};

DenseTensor to_dense(const SparseTensor& t);

/// Non-zero entries of `dense` as a sparse tensor with the given modes.
SparseTensor sparse_from_dense(const DenseTensor& dense, std::vector<ModeInfo> modes);

/// A set of dense subtensors held by one index row.
using ValueSet = std::vector<DenseTensor>;

/// Mixed representation: a coordinate index table over the remaining sparse
/// modes whose rows each carry a set of dense subtensors.
///
/// Rows are sorted and unique. All value sets share one signature (element
/// count and shapes).
class MixedTensor {
 public:
  /// Every row starts with the single scalar {weight}.
  static MixedTensor from_sparse(const SparseTensor& t);

  MixedTensor(std::vector<std::size_t> sparse_modes, std::vector<std::size_t> sparse_dims,
              std::vector<std::size_t> indices, std::vector<ValueSet> values);

  std::size_t num_sparse_modes() const { return sparse_modes_.size(); }
  std::size_t num_rows() const { return values_.size(); }
  /// Original mode ids of the remaining sparse columns, in column order.
  std::span<const std::size_t> sparse_modes() const { return sparse_modes_; }
  std::span<const std::size_t> sparse_dims() const { return sparse_dims_; }
  std::span<const std::size_t> row(std::size_t r) const {
    return std::span<const std::size_t>(indices_).subspan(r * num_sparse_modes(),
                                                          num_sparse_modes());
  }
  const ValueSet& values(std::size_t r) const { return values_.at(r); }
  /// Shapes of the value-set elements (identical for every row).
  std::vector<std::vector<std::size_t>> signature() const;

  /// Same tensor with its sparse columns arranged as `mode_order`
  /// (a permutation of sparse_modes()).
  MixedTensor reordered(std::span<const std::size_t> mode_order) const;

  /// Densifies a tensor whose value sets hold exactly one subtensor:
  /// shape = sparse dims followed by the subtensor shape.
  DenseTensor to_dense() const;

  friend bool operator==(const MixedTensor&, const MixedTensor&) = default;

 private:
  std::vector<std::size_t> sparse_modes_;
  std::vector<std::size_t> sparse_dims_;
  std::vector<std::size_t> indices_;
  std::vector<ValueSet> values_;
};

/// Mode product over the last sparse mode: rows are grouped by their
/// remaining indices and each group sums V_i (x) W[last index of row i],
/// element-wise over the value set. One sparse mode becomes dense.
MixedTensor mode_product_mixed(const MixedTensor& mt, const DenseTensor& w);

/// Label embedding of the last sparse mode: requires every group to be a
/// singleton; drops the column and appends the vector W[label] to the
/// row's value set.
MixedTensor label_embed(const MixedTensor& mt, const DenseTensor& w);

/// Appends W[index] to each row's value set while keeping the (single)
/// remaining sparse mode as the row key.
MixedTensor embed_last_mode_in_place(const MixedTensor& mt, const DenseTensor& w);

/// Concatenation of the row-major flattening of every set element, in
/// insertion order.
std::vector<double> flatten(const ValueSet& values);

}  // namespace topobench

#endif  // TOPOBENCH_TENSOR_HPP
