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

#include "relaysim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaysim/errors.hpp"

namespace relaysim
{
namespace
{

std::string dims(const ComplexMatrix& a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(what) + ": shapes " + dims(a) + " and " + dims(b) + " differ");
}

void require_square(const ComplexMatrix& a, const char* what)
{
    if (!a.is_square() || a.empty())
        throw ShapeError(std::string(what) + ": expected a square matrix, got " + dims(a));
}

// Lower-triangular Cholesky factor L with a = L L^H. Only the lower triangle
// of a is referenced.
ComplexMatrix cholesky_lower(const ComplexMatrix& a, const char* what)
{
    require_square(a, what);
    const std::size_t n = a.rows();
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j)
    {
        double pivot = a(j, j).real();
        for (std::size_t p = 0; p < j; ++p)
            pivot -= std::norm(l(j, p));
        if (!(pivot > 0.0))
        {
            throw NumericError(std::string(what) + ": matrix is not Hermitian positive definite (pivot "
                               + std::to_string(j) + " = " + std::to_string(pivot) + ")");
        }
        const double ljj = std::sqrt(pivot);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i)
        {
            Complex s = a(i, j);
            for (std::size_t p = 0; p < j; ++p)
                s -= l(i, p) * std::conj(l(j, p));
            l(i, j) = s / ljj;
        }
    }
    return l;
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
    if (rows == 0 || cols == 0)
        throw ShapeError("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows == 0 || cols == 0)
        throw ShapeError("ComplexMatrix: dimensions must be positive");
    if (entries_.size() != rows * cols)
    {
        throw ShapeError("ComplexMatrix: " + std::to_string(entries_.size()) + " entries for a "
                         + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
    for (const Complex& z : entries_)
    {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NumericError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
{
    if (rows.size() == 0 || rows.begin()->size() == 0)
        throw ShapeError("ComplexMatrix: dimensions must be positive");
    const std::size_t ncols = rows.begin()->size();
    std::vector<Complex> entries;
    entries.reserve(rows.size() * ncols);
    for (const auto& r : rows)
    {
        if (r.size() != ncols)
            throw ShapeError("ComplexMatrix: ragged row list");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    *this = ComplexMatrix(rows.size(), ncols, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) = 1.0;
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values)
{
    ComplexMatrix out(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out(i, i) = values[i];
    return out;
}

Complex ComplexMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
    {
        throw ShapeError("ComplexMatrix::at: index (" + std::to_string(r) + ", " + std::to_string(c)
                         + ") outside " + dims(*this));
    }
    return (*this)(r, c);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept
{
    for (Complex& z : entries_)
        z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b)
{
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b)
{
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a)
{
    a *= scale;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return matmul(a, b);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows() || a.empty() || b.empty())
        throw ShapeError("matmul: cannot multiply " + dims(a) + " by " + dims(b));
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        for (std::size_t p = 0; p < a.cols(); ++p)
        {
            const Complex aip = a(i, p);
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aip * b(p, j);
        }
    }
    return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a)
{
    if (a.empty())
        return {};
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = std::conj(a(i, j));
    return out;
}

QrFactors qr_decompose(const ComplexMatrix& a)
{
    require_square(a, "qr_decompose");
    const std::size_t n = a.rows();
    ComplexMatrix r = a;
    ComplexMatrix q = ComplexMatrix::identity(n);
    std::vector<Complex> v(n);

    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        double tail_sq = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            tail_sq += std::norm(r(i, k));
        if (tail_sq == 0.0)
            continue;

        // v = x - beta e1 with beta = -phase(x1) ||x||, so that H x = beta e1
        // and no cancellation occurs in v1.
        const Complex x1 = r(k, k);
        const double norm_x = std::sqrt(std::norm(x1) + tail_sq);
        const double abs_x1 = std::abs(x1);
        const Complex phase = abs_x1 > 0.0 ? x1 / abs_x1 : Complex(1.0, 0.0);
        const Complex beta = -phase * norm_x;
        v[k] = x1 - beta;
        for (std::size_t i = k + 1; i < n; ++i)
            v[i] = r(i, k);
        const double v_norm_sq = std::norm(v[k]) + tail_sq;
        const double tau = 2.0 / v_norm_sq;

        // R <- (I - tau v v^H) R on the trailing columns.
        r(k, k) = beta;
        for (std::size_t i = k + 1; i < n; ++i)
            r(i, k) = 0.0;
        for (std::size_t j = k + 1; j < n; ++j)
        {
            Complex dot = 0.0;
            for (std::size_t i = k; i < n; ++i)
                dot += std::conj(v[i]) * r(i, j);
            dot *= tau;
            for (std::size_t i = k; i < n; ++i)
                r(i, j) -= v[i] * dot;
        }
        // Q <- Q (I - tau v v^H).
        for (std::size_t i = 0; i < n; ++i)
        {
            Complex dot = 0.0;
            for (std::size_t p = k; p < n; ++p)
                dot += q(i, p) * v[p];
            dot *= tau;
            for (std::size_t p = k; p < n; ++p)
                q(i, p) -= dot * std::conj(v[p]);
        }
    }

    for (std::size_t m = 0; m < n; ++m)
    {
        const Complex d = r(m, m);
        const double mag = std::abs(d);
        if (mag == 0.0)
        {
            r(m, m) = 0.0;
            continue;
        }
        const Complex phase = d / mag;
        if (phase != Complex(1.0, 0.0))
        {
            const Complex unphase = std::conj(phase);
            for (std::size_t j = m + 1; j < n; ++j)
                r(m, j) *= unphase;
            for (std::size_t i = 0; i < n; ++i)
                q(i, m) *= phase;
        }
        r(m, m) = mag;
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            r(i, j) = 0.0;
    return {std::move(q), std::move(r)};
}

ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b)
{
    const ComplexMatrix l = cholesky_lower(a, "solve_hpd");
    const std::size_t n = a.rows();
    if (b.rows() != n || b.empty())
        throw ShapeError("solve_hpd: right-hand side " + dims(b) + " does not match " + dims(a));

    ComplexMatrix x = b;
    for (std::size_t c = 0; c < x.cols(); ++c)
    {
        // L y = b
        for (std::size_t i = 0; i < n; ++i)
        {
            Complex s = x(i, c);
            for (std::size_t p = 0; p < i; ++p)
                s -= l(i, p) * x(p, c);
            x(i, c) = s / l(i, i).real();
        }
        // L^H x = y
        for (std::size_t i = n; i-- > 0;)
        {
            Complex s = x(i, c);
            for (std::size_t p = i + 1; p < n; ++p)
                s -= std::conj(l(p, i)) * x(p, c);
            x(i, c) = s / l(i, i).real();
        }
    }
    return x;
}

double logdet_hpd(const ComplexMatrix& a)
{
    const ComplexMatrix l = cholesky_lower(a, "logdet_hpd");
    double sum = 0.0;
    for (std::size_t i = 0; i < l.rows(); ++i)
        sum += std::log(l(i, i).real());
    return 2.0 * sum;
}

Complex trace(const ComplexMatrix& a)
{
    require_square(a, "trace");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        sum += a(i, i);
    return sum;
}

double row_norm_sq(const ComplexMatrix& a, std::size_t row)
{
    if (row >= a.rows())
        throw ShapeError("row_norm_sq: row " + std::to_string(row) + " outside " + dims(a));
    double sum = 0.0;
    for (const Complex& z : a.row(row))
        sum += std::norm(z);
    return sum;
}

double frobenius_norm_sq(const ComplexMatrix& a) noexcept
{
    double sum = 0.0;
    for (const Complex& z : a.entries())
        sum += std::norm(z);
    return sum;
}

double frobenius_norm(const ComplexMatrix& a)
{
    return std::sqrt(frobenius_norm_sq(a));
}

double max_abs(const ComplexMatrix& a) noexcept
{
    double best = 0.0;
    for (const Complex& z : a.entries())
        best = std::max(best, std::abs(z));
    return best;
}

} // namespace relaysim
