// SPDX-License-Identifier: Apache-2.0
//
// relaysim: link-level simulator for dual-hop AF MIMO relay networks
// Copyright (C) 2026 The relaysim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Dense complex linear algebra limited to what the relay link model needs:
// products, Hermitian transpose, Householder QR of square matrices and
// Cholesky-based solves / log-determinants of Hermitian positive definite
// matrices.

#ifndef RELAYSIM_LINALG_HPP
#define RELAYSIM_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace relaysim
{

using Complex = std::complex<double>;

class ComplexMatrix
{
  public:
    ComplexMatrix() = default;

    // rows x cols matrix of zeros. Both dimensions must be positive.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    // Row-major entries; throws ShapeError on a size mismatch and
    // NumericError if any entry is NaN or infinite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    // Nested-list literal, one inner list per row.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    Complex& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

    // Bounds-checked access; throws ShapeError.
    Complex at(std::size_t r, std::size_t c) const;

    std::span<const Complex> row(std::size_t r) const noexcept
    {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<const Complex> entries() const noexcept { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale) noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Q and R of a square matrix, A = Q R.
///
/// Q is unitary, R is upper triangular with every strictly-lower entry
/// exactly zero and a real, non-negative diagonal.
struct QrFactors
{
    ComplexMatrix q;
    ComplexMatrix r;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conj_transpose(const ComplexMatrix& a);

/// Householder QR of a square matrix.
///
/// Each column is reflected only when it has a nonzero part below the
/// diagonal; afterwards row m of R and column m of Q are rotated by a unit
/// phase so that R(m, m) is real and non-negative. A column that is already
/// zero on and below the diagonal leaves R(m, m) = 0 and is not an error.
QrFactors qr_decompose(const ComplexMatrix& a);

/// Solves a x = b for Hermitian positive definite a by Cholesky factorization.
///
/// Only the lower triangle of a is read. Throws NumericError naming the pivot
/// index when a pivot is not strictly positive.
ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b);

/// Natural logarithm of det(a) for Hermitian positive definite a.
double logdet_hpd(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double row_norm_sq(const ComplexMatrix& a, std::size_t row);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_norm_sq(const ComplexMatrix& a) noexcept;

// Largest entry modulus.
double max_abs(const ComplexMatrix& a) noexcept;

} // namespace relaysim

#endif
