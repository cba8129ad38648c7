// Copyright 2026 The subdiff Authors
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

#include "subdiff/sym_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "subdiff/error.hpp"

namespace subdiff {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 0) throw ContractError("matrix dimension must be non-negative");
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

SymMatrix SymMatrix::FromGraph(const Graph& g) {
  SymMatrix m(g.num_nodes());
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

void SymMatrix::set(int u, int v, double x) {
  if (u == v) throw ContractError("SymMatrix diagonal is fixed at zero");
  data_[u * n_ + v] = x;
  data_[v * n_ + u] = x;
}

void SymMatrix::add(int u, int v, double x) { set(u, v, (*this)(u, v) + x); }

std::vector<double> SymMatrix::upper() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(num_slots()));
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) out.push_back((*this)(u, v));
  }
  return out;
}

SymMatrix SymMatrix::FromUpper(int n, std::span<const double> upper) {
  SymMatrix m(n);
  if (static_cast<int>(upper.size()) != m.num_slots()) {
    throw ContractError("upper-triangle length does not match dimension");
  }
  std::size_t s = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) m.set(u, v, upper[s++]);
  }
  return m;
}

SymMatrix SymMatrix::Permuted(std::span<const int> perm) const {
  SymMatrix out(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) out.set(perm[u], perm[v], (*this)(u, v));
  }
  return out;
}

double SymMatrix::UpperDot(const SymMatrix& a, const SymMatrix& b) {
  double s = 0.0;
  for (int u = 0; u < a.n_; ++u) {
    for (int v = u + 1; v < a.n_; ++v) s += a(u, v) * b(u, v);
  }
  return s;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool SymMatrix::satisfies_invariants() const {
  for (int u = 0; u < n_; ++u) {
    if ((*this)(u, u) != 0.0) return false;
    for (int v = u + 1; v < n_; ++v) {
      if ((*this)(u, v) != (*this)(v, u)) return false;
    }
  }
  return true;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  return (a - b).max_abs();
}

SquareMatrix::SquareMatrix(int n) : n_(n) {
  if (n < 0) throw ContractError("matrix dimension must be non-negative");
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

SquareMatrix::SquareMatrix(const SymMatrix& m)
    : n_(m.dim()), data_(m.data().begin(), m.data().end()) {}

SquareMatrix SquareMatrix::Permuted(std::span<const int> perm) const {
  SquareMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out(perm[i], perm[j]) = (*this)(i, j);
  }
  return out;
}

double SquareMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

double relative_frobenius_error(const SymMatrix& a, const SymMatrix& b) {
  const double diff = (a - b).frobenius_norm();
  const double ref = b.frobenius_norm();
  return ref > 0.0 ? diff / ref : diff;
}

}  // namespace subdiff
