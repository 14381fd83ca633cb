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

#include "topobench/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "topobench/errors.hpp"

namespace topobench {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

std::string shape_text(std::span<const std::size_t> shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) s += (i ? "x" : "") + std::to_string(shape[i]);
  return s + "]";
}

// Advances a row-major multi-index; returns false after the last one.
bool next_index(std::vector<std::size_t>& index, std::span<const std::size_t> shape) {
  for (std::size_t m = index.size(); m-- > 0;) {
    if (++index[m] < shape[m]) return true;
    index[m] = 0;
  }
  return false;
}

void check_matrix(const DenseTensor& w, std::size_t rows, const std::string& what) {
  if (w.order() != 2) throw ValidationError(what + ": weight must be a matrix");
  if (w.dim(0) != rows) {
    throw ValidationError(what + ": weight has " + std::to_string(w.dim(0)) +
                          " rows, mode dimension is " + std::to_string(rows));
  }
}

// Sorts `rows` (row-major, `width` columns) lexicographically, carrying the
// payload along. Returns the permutation applied.
std::vector<std::size_t> sorted_row_order(std::span<const std::size_t> rows, std::size_t width,
                                          std::size_t count) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(rows.begin() + a * width, rows.begin() + (a + 1) * width,
                                        rows.begin() + b * width, rows.begin() + (b + 1) * width);
  });
  return order;
}

bool rows_equal(std::span<const std::size_t> rows, std::size_t width, std::size_t a,
                std::size_t b, std::size_t compare_width) {
  return std::equal(rows.begin() + a * width, rows.begin() + a * width + compare_width,
                    rows.begin() + b * width);
}

}  // namespace

DenseTensor::DenseTensor(std::vector<std::size_t> shape, double fill)
    : shape_(std::move(shape)), data_(product(shape_), fill) {}

DenseTensor::DenseTensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != product(shape_)) {
    throw ValidationError("data length " + std::to_string(data_.size()) + " does not fit shape " +
                          shape_text(shape_));
  }
}

DenseTensor DenseTensor::vector(std::span<const double> values) {
  return DenseTensor({values.size()}, std::vector<double>(values.begin(), values.end()));
}

DenseTensor DenseTensor::matrix(std::size_t rows, std::size_t cols, std::vector<double> data) {
  return DenseTensor({rows, cols}, std::move(data));
}

DenseTensor DenseTensor::identity(std::size_t n) {
  DenseTensor t({n, n});
  for (std::size_t i = 0; i < n; ++i) t.data_[i * n + i] = 1.0;
  return t;
}

std::size_t DenseTensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw ValidationError("index order does not match tensor");
  std::size_t off = 0;
  for (std::size_t m = 0; m < index.size(); ++m) {
    if (index[m] >= shape_[m]) throw ValidationError("index out of range");
    off = off * shape_[m] + index[m];
  }
  return off;
}

std::span<const double> DenseTensor::row(std::size_t r) const {
  if (order() != 2 || r >= shape_[0]) throw ValidationError("row access needs a matrix row");
  return std::span<const double>(data_).subspan(r * shape_[1], shape_[1]);
}

DenseTensor DenseTensor::permuted(std::span<const std::size_t> axes) const {
  if (axes.size() != order()) throw ValidationError("axis permutation has wrong length");
  std::vector<std::size_t> check(axes.begin(), axes.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) throw ValidationError("not an axis permutation");
  }
  std::vector<std::size_t> out_shape(order());
  for (std::size_t i = 0; i < order(); ++i) out_shape[i] = shape_[axes[i]];
  DenseTensor out(out_shape);
  if (out.size() == 0) return out;
  std::vector<std::size_t> out_index(order(), 0);
  std::vector<std::size_t> in_index(order(), 0);
  std::size_t pos = 0;
  do {
    for (std::size_t i = 0; i < order(); ++i) in_index[axes[i]] = out_index[i];
    out.data_[pos++] = at(in_index);
  } while (next_index(out_index, out_shape));
  return out;
}

DenseTensor DenseTensor::outer(std::span<const double> v) const {
  std::vector<std::size_t> out_shape = shape_;
  out_shape.push_back(v.size());
  DenseTensor out(out_shape);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out.data_[i * v.size() + j] = data_[i] * v[j];
  }
  return out;
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& other) {
  if (shape_ != other.shape_) throw ValidationError("shape mismatch in tensor sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  if (!std::ranges::equal(a.shape(), b.shape())) {
    throw ValidationError("shape mismatch: " + shape_text(a.shape()) + " vs " +
                          shape_text(b.shape()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

DenseTensor dense_mode_product(const DenseTensor& t, std::size_t mode, const DenseTensor& w) {
  if (mode >= t.order()) throw ValidationError("mode " + std::to_string(mode) + " out of range");
  check_matrix(w, t.dim(mode), "mode product");
  const std::size_t rows = w.dim(0);
  const std::size_t cols = w.dim(1);
  const std::size_t outer_count = product(t.shape().subspan(0, mode));
  const std::size_t inner_count = product(t.shape().subspan(mode + 1));
  std::vector<std::size_t> out_shape(t.shape().begin(), t.shape().end());
  out_shape[mode] = cols;
  DenseTensor out(out_shape);
  auto src = t.data();
  auto dst = out.data();
  auto wd = w.data();
  for (std::size_t a = 0; a < outer_count; ++a) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const double wij = wd[i * cols + j];
        if (wij == 0.0) continue;
        for (std::size_t c = 0; c < inner_count; ++c) {
          dst[(a * cols + j) * inner_count + c] += src[(a * rows + i) * inner_count + c] * wij;
        }
      }
    }
  }
  return out;
}

SparseTensor::SparseTensor(std::vector<ModeInfo> modes, std::vector<std::size_t> indices,
                           std::vector<double> weights)
    : modes_(std::move(modes)) {
  const std::size_t width = modes_.size();
  if (width == 0) throw ValidationError("sparse tensor needs at least one mode");
  if (indices.size() != weights.size() * width) {
    throw ValidationError("index table does not match weight count");
  }
  for (std::size_t m = 0; m < width; ++m) {
    const ModeInfo& info = modes_[m];
    for (std::size_t dep : info.depends_on) {
      if (info.kind != ModeKind::kLabel) {
        throw ValidationError("mode " + std::to_string(m) + ": only label modes have dependencies");
      }
      if (dep >= width || modes_[dep].kind != ModeKind::kTopology) {
        throw ValidationError("mode " + std::to_string(m) +
                              ": label dependencies must name topology modes");
      }
    }
  }
  const std::size_t count = weights.size();
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t m = 0; m < width; ++m) {
      if (indices[r * width + m] >= modes_[m].dim) {
        throw ValidationError("row " + std::to_string(r) + ": index " +
                              std::to_string(indices[r * width + m]) + " exceeds dimension of mode " +
                              std::to_string(m));
      }
    }
  }
  const auto order = sorted_row_order(indices, width, count);
  indices_.reserve(indices.size());
  weights_.reserve(count);
  for (std::size_t r : order) {
    indices_.insert(indices_.end(), indices.begin() + r * width, indices.begin() + (r + 1) * width);
    weights_.push_back(weights[r]);
  }
  for (std::size_t r = 1; r < count; ++r) {
    if (rows_equal(indices_, width, r - 1, r, width)) {
      throw ValidationError("duplicate index row in sparse tensor");
    }
  }
  // Label modes: at most one row once every other mode is fixed.
  for (std::size_t m = 0; m < width; ++m) {
    if (modes_[m].kind != ModeKind::kLabel) continue;
    std::vector<std::size_t> rest;
    rest.reserve(count * (width - 1));
    for (std::size_t r = 0; r < count; ++r) {
      for (std::size_t c = 0; c < width; ++c) {
        if (c != m) rest.push_back(indices_[r * width + c]);
      }
    }
    const auto rest_order = sorted_row_order(rest, width - 1, count);
    for (std::size_t k = 1; k < count; ++k) {
      if (rows_equal(rest, width - 1, rest_order[k - 1], rest_order[k], width - 1)) {
        throw ValidationError("label mode " + std::to_string(m) +
                              " has several entries for one setting of the other modes");
      }
    }
  }
}

DenseTensor to_dense(const SparseTensor& t) {
  std::vector<std::size_t> shape;
  for (const ModeInfo& m : t.modes()) shape.push_back(m.dim);
  if (product(shape) > kMaxDenseEntries) {
    throw ValidationError("dense tensor of shape " + shape_text(shape) + " exceeds the size guard");
  }
  DenseTensor out(shape);
  for (std::size_t r = 0; r < t.nnz(); ++r) out.at(t.row(r)) = t.weights()[r];
  return out;
}

SparseTensor sparse_from_dense(const DenseTensor& dense, std::vector<ModeInfo> modes) {
  if (modes.size() != dense.order()) throw ValidationError("mode list does not match tensor order");
  for (std::size_t m = 0; m < modes.size(); ++m) {
    if (modes[m].dim != dense.dim(m)) throw ValidationError("mode dimension mismatch");
  }
  std::vector<std::size_t> indices;
  std::vector<double> weights;
  if (dense.size() > 0) {
    std::vector<std::size_t> index(dense.order(), 0);
    std::size_t pos = 0;
    do {
      const double v = dense.data()[pos++];
      if (v != 0.0) {
        indices.insert(indices.end(), index.begin(), index.end());
        weights.push_back(v);
      }
    } while (next_index(index, dense.shape()));
  }
  return SparseTensor(std::move(modes), std::move(indices), std::move(weights));
}

MixedTensor MixedTensor::from_sparse(const SparseTensor& t) {
  std::vector<std::size_t> modes(t.order());
  std::iota(modes.begin(), modes.end(), 0);
  std::vector<std::size_t> dims;
  for (const ModeInfo& m : t.modes()) dims.push_back(m.dim);
  std::vector<ValueSet> values;
  values.reserve(t.nnz());
  for (double w : t.weights()) values.push_back({DenseTensor::scalar(w)});
  return MixedTensor(std::move(modes), std::move(dims),
                     std::vector<std::size_t>(t.indices().begin(), t.indices().end()),
                     std::move(values));
}

MixedTensor::MixedTensor(std::vector<std::size_t> sparse_modes,
                         std::vector<std::size_t> sparse_dims, std::vector<std::size_t> indices,
                         std::vector<ValueSet> values)
    : sparse_modes_(std::move(sparse_modes)), sparse_dims_(std::move(sparse_dims)) {
  const std::size_t width = sparse_modes_.size();
  if (sparse_dims_.size() != width) throw ValidationError("one dimension per sparse mode");
  if (indices.size() != values.size() * width) {
    throw ValidationError("index table does not match value count");
  }
  if (width == 0 && values.size() > 1) {
    throw ValidationError("a fully dense tensor has at most one row");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= sparse_dims_[i % width]) throw ValidationError("sparse index out of range");
  }
  if (!values.empty()) {
    const ValueSet& first = values.front();
    for (const ValueSet& v : values) {
      bool same = v.size() == first.size();
      for (std::size_t e = 0; same && e < v.size(); ++e) {
        same = std::ranges::equal(v[e].shape(), first[e].shape());
      }
      if (!same) throw ValidationError("value sets differ in signature across rows");
    }
  }
  const auto order = width == 0 ? std::vector<std::size_t>(values.size(), 0)
                                : sorted_row_order(indices, width, values.size());
  indices_.reserve(indices.size());
  values_.reserve(values.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t r = width == 0 ? k : order[k];
    indices_.insert(indices_.end(), indices.begin() + r * width, indices.begin() + (r + 1) * width);
    values_.push_back(std::move(values[r]));
  }
  for (std::size_t r = 1; width > 0 && r < values_.size(); ++r) {
    if (rows_equal(indices_, width, r - 1, r, width)) {
      throw ValidationError("duplicate index row in mixed tensor");
    }
  }
}

std::vector<std::vector<std::size_t>> MixedTensor::signature() const {
  std::vector<std::vector<std::size_t>> sig;
  if (values_.empty()) return sig;
  for (const DenseTensor& t : values_.front()) sig.emplace_back(t.shape().begin(), t.shape().end());
  return sig;
}

MixedTensor MixedTensor::reordered(std::span<const std::size_t> mode_order) const {
  const std::size_t width = num_sparse_modes();
  if (mode_order.size() != width) throw ValidationError("reorder needs every sparse mode once");
  std::vector<std::size_t> columns;
  for (std::size_t mode : mode_order) {
    const auto it = std::find(sparse_modes_.begin(), sparse_modes_.end(), mode);
    if (it == sparse_modes_.end()) {
      throw ValidationError("mode " + std::to_string(mode) + " is not a remaining sparse mode");
    }
    columns.push_back(static_cast<std::size_t>(it - sparse_modes_.begin()));
  }
  std::vector<std::size_t> check = columns;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
    throw ValidationError("reorder lists a mode twice");
  }
  std::vector<std::size_t> modes;
  std::vector<std::size_t> dims;
  for (std::size_t c : columns) {
    modes.push_back(sparse_modes_[c]);
    dims.push_back(sparse_dims_[c]);
  }
  std::vector<std::size_t> indices;
  indices.reserve(indices_.size());
  for (std::size_t r = 0; r < num_rows(); ++r) {
    for (std::size_t c : columns) indices.push_back(indices_[r * width + c]);
  }
  return MixedTensor(std::move(modes), std::move(dims), std::move(indices), values_);
}

DenseTensor MixedTensor::to_dense() const {
  std::vector<std::size_t> shape = sparse_dims_;
  const auto sig = signature();
  if (values_.empty()) {
    throw ValidationError("cannot densify an empty mixed tensor without a signature");
  }
  if (sig.size() != 1) throw ValidationError("densify needs single-element value sets");
  shape.insert(shape.end(), sig[0].begin(), sig[0].end());
  if (product(shape) > kMaxDenseEntries) throw ValidationError("dense size guard exceeded");
  DenseTensor out(shape);
  const std::size_t block = product(sig[0]);
  for (std::size_t r = 0; r < num_rows(); ++r) {
    std::size_t base = 0;
    for (std::size_t m = 0; m < num_sparse_modes(); ++m) base = base * sparse_dims_[m] + row(r)[m];
    const auto src = values_[r][0].data();
    std::copy(src.begin(), src.end(), out.data().begin() + static_cast<std::ptrdiff_t>(base * block));
  }
  return out;
}

MixedTensor mode_product_mixed(const MixedTensor& mt, const DenseTensor& w) {
  const std::size_t width = mt.num_sparse_modes();
  if (width == 0) throw ValidationError("mode product needs a remaining sparse mode");
  check_matrix(w, mt.sparse_dims().back(), "mode product on mode " +
                                              std::to_string(mt.sparse_modes().back()));
  std::vector<std::size_t> indices;
  std::vector<ValueSet> values;
  // Rows are sorted, so rows sharing the leading width-1 indices are adjacent.
  for (std::size_t r = 0; r < mt.num_rows(); ++r) {
    const auto row = mt.row(r);
    const auto weight_row = w.row(row.back());
    const bool new_group =
        r == 0 || !std::equal(row.begin(), row.end() - 1, mt.row(r - 1).begin());
    if (new_group) {
      indices.insert(indices.end(), row.begin(), row.end() - 1);
      ValueSet set;
      for (const DenseTensor& v : mt.values(r)) set.push_back(v.outer(weight_row));
      values.push_back(std::move(set));
    } else {
      ValueSet& set = values.back();
      for (std::size_t e = 0; e < set.size(); ++e) set[e] += mt.values(r)[e].outer(weight_row);
    }
  }
  std::vector<std::size_t> modes(mt.sparse_modes().begin(), mt.sparse_modes().end() - 1);
  std::vector<std::size_t> dims(mt.sparse_dims().begin(), mt.sparse_dims().end() - 1);
  return MixedTensor(std::move(modes), std::move(dims), std::move(indices), std::move(values));
}

MixedTensor label_embed(const MixedTensor& mt, const DenseTensor& w) {
  const std::size_t width = mt.num_sparse_modes();
  if (width == 0) throw ValidationError("label embedding needs a remaining sparse mode");
  const std::size_t mode = mt.sparse_modes().back();
  check_matrix(w, mt.sparse_dims().back(), "label embedding on mode " + std::to_string(mode));
  std::vector<std::size_t> indices;
  std::vector<ValueSet> values;
  for (std::size_t r = 0; r < mt.num_rows(); ++r) {
    const auto row = mt.row(r);
    if (r > 0 && std::equal(row.begin(), row.end() - 1, mt.row(r - 1).begin())) {
      throw ValidationError("mode " + std::to_string(mode) +
                            " is not label-like: several entries share the other indices");
    }
    indices.insert(indices.end(), row.begin(), row.end() - 1);
    ValueSet set = mt.values(r);
    set.push_back(DenseTensor::vector(w.row(row.back())));
    values.push_back(std::move(set));
  }
  std::vector<std::size_t> modes(mt.sparse_modes().begin(), mt.sparse_modes().end() - 1);
  std::vector<std::size_t> dims(mt.sparse_dims().begin(), mt.sparse_dims().end() - 1);
  return MixedTensor(std::move(modes), std::move(dims), std::move(indices), std::move(values));
}

MixedTensor embed_last_mode_in_place(const MixedTensor& mt, const DenseTensor& w) {
  if (mt.num_sparse_modes() == 0) throw ValidationError("in-place embedding needs a sparse mode");
  check_matrix(w, mt.sparse_dims().back(),
               "embedding of mode " + std::to_string(mt.sparse_modes().back()));
  std::vector<std::size_t> indices;
  std::vector<ValueSet> values;
  for (std::size_t r = 0; r < mt.num_rows(); ++r) {
    const auto row = mt.row(r);
    indices.insert(indices.end(), row.begin(), row.end());
    ValueSet set = mt.values(r);
    set.push_back(DenseTensor::vector(w.row(row.back())));
    values.push_back(std::move(set));
  }
  return MixedTensor(std::vector<std::size_t>(mt.sparse_modes().begin(), mt.sparse_modes().end()),
                     std::vector<std::size_t>(mt.sparse_dims().begin(), mt.sparse_dims().end()),
                     std::move(indices), std::move(values));
}

std::vector<double> flatten(const ValueSet& values) {
  std::vector<double> out;
  for (const DenseTensor& t : values) out.insert(out.end(), t.data().begin(), t.data().end());
  return out;
}

}  // namespace topobench
