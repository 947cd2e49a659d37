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

// Test-only reference computations. Nothing here calls into the library's
// numerical kernels; matrices are only used as containers.

#ifndef RELAYSIM_TESTS_ORACLES_HPP
#define RELAYSIM_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "relaysim/linalg.hpp"

namespace relaysim::oracle
{

using Dense = std::vector<std::vector<std::complex<double>>>;

inline Dense to_dense(const ComplexMatrix& a)
{
    Dense d(a.rows(), std::vector<std::complex<double>>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            d[i][j] = a(i, j);
    return d;
}

inline ComplexMatrix from_dense(const Dense& d)
{
    ComplexMatrix a(d.size(), d.front().size());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            a(i, j) = d[i][j];
    return a;
}

// Entry (i, j) as the sum over p of a(i, p) b(p, j).
inline Dense product(const Dense& a, const Dense& b)
{
    Dense c(a.size(), std::vector<std::complex<double>>(b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        for (std::size_t j = 0; j < b.front().size(); ++j)
        {
            std::complex<double> s = 0.0;
            for (std::size_t p = 0; p < b.size(); ++p)
                s += a[i][p] * b[p][j];
            c[i][j] = s;
        }
    }
    return c;
}

inline Dense adjoint(const Dense& a)
{
    Dense c(a.front().size(), std::vector<std::complex<double>>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            c[j][i] = std::conj(a[i][j]);
    return c;
}

// Laplace expansion along the first row.
inline std::complex<double> determinant(const Dense& a)
{
    const std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    if (n == 2)
        return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    std::complex<double> det = 0.0;
    for (std::size_t c = 0; c < n; ++c)
    {
        Dense minor;
        for (std::size_t r = 1; r < n; ++r)
        {
            std::vector<std::complex<double>> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c)
                    row.push_back(a[r][cc]);
            minor.push_back(row);
        }
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        det += sign * a[0][c] * determinant(minor);
    }
    return det;
}

// i.i.d. CN(0, 1) entries from a standard-library engine, independent of the
// simulator's own generator.
inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a(i, j) = {normal(gen), normal(gen)};
    return a;
}

// M^H M + I, Hermitian positive definite.
inline ComplexMatrix random_hpd(std::size_t n, std::mt19937_64& gen)
{
    const Dense m = to_dense(random_matrix(n, n, gen));
    Dense a = product(adjoint(m), m);
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] += 1.0;
    return from_dense(a);
}

inline double frob_diff(const Dense& a, const Dense& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            s += std::norm(a[i][j] - b[i][j]);
    return std::sqrt(s);
}

inline double frob(const Dense& a)
{
    double s = 0.0;
    for (const auto& row : a)
        for (const auto& z : row)
            s += std::norm(z);
    return std::sqrt(s);
}

inline double rel_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    const Dense da = to_dense(a), db = to_dense(b);
    return frob_diff(da, db) / std::max(frob(db), 1e-300);
}

} // namespace relaysim::oracle

#endif
