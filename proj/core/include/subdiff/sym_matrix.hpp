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

#ifndef SUBDIFF_SYM_MATRIX_HPP_
#define SUBDIFF_SYM_MATRIX_HPP_

#include <span>
#include <vector>

#include "subdiff/graph.hpp"

namespace subdiff {

// Real symmetric n x n matrix with a zero diagonal: the noisy adjacency of
// the diffusion process. Writes go through set()/add(), which mirror the
// entry and refuse the diagonal, so the invariants cannot be broken.
class SymMatrix {
 public:
  explicit SymMatrix(int n = 0);
  static SymMatrix FromGraph(const Graph& g);

  int dim() const { return n_; }
  // Number of strict upper-triangle slots, n(n-1)/2.
  int num_slots() const { return n_ * (n_ - 1) / 2; }

  double operator()(int u, int v) const { return data_[u * n_ + v]; }
  void set(int u, int v, double x);
  void add(int u, int v, double x);

  // Row-major full storage (diagonal included, always zero).
  std::span<const double> data() const { return data_; }

  // Strict upper triangle, row-major: (0,1), (0,2), ..., (n-2,n-1).
  std::vector<double> upper() const;
  static SymMatrix FromUpper(int n, std::span<const double> upper);

  // result(perm[u], perm[v]) == (*this)(u, v).
  SymMatrix Permuted(std::span<const int> perm) const;

  // Sum over the strict upper triangle of a .* b.
  static double UpperDot(const SymMatrix& a, const SymMatrix& b);
  double upper_norm_squared() const { return UpperDot(*this, *this); }
  double frobenius_norm() const;
  double max_abs() const;

  // True if symmetric with an exactly zero diagonal.
  bool satisfies_invariants() const;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(double s);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int n_;
  std::vector<double> data_;
};

double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

// General dense n x n matrix, row-major. Used for matrix-valued polynomial
// terms that need not be symmetric on their own.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n = 0);
  explicit SquareMatrix(const SymMatrix& m);

  int dim() const { return n_; }
  double& operator()(int i, int j) { return data_[i * n_ + j]; }
  double operator()(int i, int j) const { return data_[i * n_ + j]; }
  std::span<const double> data() const { return data_; }

  // result(perm[i], perm[j]) == (*this)(i, j).
  SquareMatrix Permuted(std::span<const int> perm) const;
  double max_abs() const;

  SquareMatrix& operator+=(const SquareMatrix& o);
  SquareMatrix& operator*=(double s);
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_;
  std::vector<double> data_;
};

// ||a - b||_F / ||b||_F (absolute norm when b is zero).
double relative_frobenius_error(const SymMatrix& a, const SymMatrix& b);

}  // namespace subdiff

#endif  // SUBDIFF_SYM_MATRIX_HPP_
