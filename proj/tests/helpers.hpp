// Copyright 2026 The sepscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracles, deliberately independent of the library implementations
// they check: explicit Kronecker products instead of bit arithmetic, operator
// products instead of index permutations, rearrangement + last-slot traces
// instead of interleaved partial traces.

#pragma once

#include "sepscan/classify.hpp"
#include "sepscan/rearrange.hpp"

#include <array>
#include <utility>
#include <vector>

namespace testutil {

using sepscan::Complex;
using sepscan::DensityMatrix;
using sepscan::Matrix;
using sepscan::PureState;
using sepscan::RearrangePlan;
using sepscan::Subsystem;
using sepscan::Vector;

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline const std::array<Matrix, 4>& pauli_matrices() {
    static const std::array<Matrix, 4> sigmas = [] {
        std::array<Matrix, 4> s;
        for (auto& m : s) {
            m = Matrix::Zero(2, 2);
        }
        s[0](0, 0) = 1;
        s[0](1, 1) = 1;
        s[1](0, 1) = 1;
        s[1](1, 0) = 1;
        s[2](0, 1) = Complex(0, -1);
        s[2](1, 0) = Complex(0, 1);
        s[3](0, 0) = 1;
        s[3](1, 1) = -1;
        return s;
    }();
    return sigmas;
}

/// sigma^{mu_1} x ... x sigma^{mu_m} by explicit Kronecker products.
inline Matrix pauli_product_matrix(std::uint64_t flat, int m) {
    Matrix out = Matrix::Identity(1, 1);
    for (int j = 0; j < m; ++j) {
        const std::uint64_t digit = (flat >> (2 * (m - 1 - j))) & 3u;
        out = kron(out, pauli_matrices()[digit]);
    }
    return out;
}

/// Brute-force expansion coefficient Tr(rho * P_mu).
inline double pauli_coefficient_oracle(const DensityMatrix& rho, std::uint64_t flat) {
    return (rho.entries * pauli_product_matrix(flat, rho.m)).trace().real();
}

/// Adjacent swap lifted to 2^n dimensions: I x ... x S x ... x I.
inline Matrix lifted_swap(int n, int j) {
    Matrix out = Matrix::Identity(1, 1);
    for (int slot = 1; slot <= n;) {
        if (slot == j) {
            out = kron(out, sepscan::swap_matrix());
            slot += 2;
        } else {
            out = kron(out, Matrix::Identity(2, 2));
            slot += 1;
        }
    }
    return out;
}

/// Full operator realization of a plan: product of lifted adjacent swaps,
/// rightmost factor applied first.
inline Matrix plan_matrix(const RearrangePlan& plan) {
    Matrix out = Matrix::Identity(Eigen::Index(1) << plan.n, Eigen::Index(1) << plan.n);
    for (int move : plan.moves) {
        out = lifted_swap(plan.n, move) * out;
    }
    return out;
}

/// Permutation matrix built directly from the net permutation.
inline Matrix permutation_matrix(int n, const std::vector<int>& perm) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        std::uint64_t target = 0;
        for (int p = 1; p <= n; ++p) {
            target |= static_cast<std::uint64_t>(sepscan::basis_bit(
                          static_cast<std::uint64_t>(k), perm[static_cast<size_t>(p - 1)], n))
                      << (n - p);
        }
        out(static_cast<Eigen::Index>(target), k) = 1.0;
    }
    return out;
}

/// Traces out the last qubit: plain 2x2 block sums.
inline DensityMatrix trace_last_qubit(const DensityMatrix& rho) {
    const Eigen::Index half = rho.dim() / 2;
    Matrix out(half, half);
    for (Eigen::Index r = 0; r < half; ++r) {
        for (Eigen::Index c = 0; c < half; ++c) {
            out(r, c) = rho.entries(2 * r, 2 * c) + rho.entries(2 * r + 1, 2 * c + 1);
        }
    }
    return DensityMatrix{rho.m - 1, std::move(out)};
}

/// Partial-trace oracle: move each traced slot to the end (largest position
/// first, so earlier traced positions stay put) and trace the last slot.
inline DensityMatrix partial_trace_oracle(const DensityMatrix& rho, const Subsystem& keep) {
    std::vector<int> traced;
    for (int l = 1; l <= rho.m; ++l) {
        if (!keep.contains(l)) {
            traced.push_back(l);
        }
    }
    DensityMatrix cur = rho;
    for (auto it = traced.rbegin(); it != traced.rend(); ++it) {
        cur = apply_plan_density(cur, sepscan::move_to_end(cur.m, *it));
        cur = trace_last_qubit(cur);
    }
    return cur;
}

// --- state builders ---------------------------------------------------------

inline PureState make_state(int n, std::initializer_list<std::pair<int, Complex>> entries) {
    Vector amps = Vector::Zero(Eigen::Index(1) << n);
    for (const auto& [idx, value] : entries) {
        amps(idx) = value;
    }
    amps.normalize();
    return PureState{n, std::move(amps)};
}

inline PureState basis_state(int n, std::uint64_t idx) {
    Vector amps = Vector::Zero(Eigen::Index(1) << n);
    amps(static_cast<Eigen::Index>(idx)) = 1.0;
    return PureState{n, std::move(amps)};
}

inline PureState ghz(int n) {
    Vector amps = Vector::Zero(Eigen::Index(1) << n);
    amps(0) = amps(amps.size() - 1) = 1.0 / std::sqrt(2.0);
    return PureState{n, std::move(amps)};
}

inline PureState w3() {
    return make_state(3, {{1, 1.0}, {2, 1.0}, {4, 1.0}});
}

inline PureState bell() {
    return make_state(2, {{0, 1.0}, {3, 1.0}});
}

/// a on qubits 1..a.n, b appended on qubits a.n+1 .. a.n+b.n.
inline PureState tensor(const PureState& a, const PureState& b) {
    Vector amps(a.dim() * b.dim());
    for (Eigen::Index ia = 0; ia < a.dim(); ++ia) {
        for (Eigen::Index ib = 0; ib < b.dim(); ++ib) {
            amps((ia << b.n) | ib) = a.amplitudes(ia) * b.amplitudes(ib);
        }
    }
    return PureState{a.n + b.n, std::move(amps)};
}

/// Product state over a label partition: each group carries an independent
/// random state; groups may interleave arbitrary labels.
inline PureState random_product_over_partition(int n, const std::vector<std::vector<int>>& groups,
                                               std::mt19937_64& rng) {
    Vector amps = Vector::Ones(Eigen::Index(1) << n);
    for (const std::vector<int>& group : groups) {
        const int m = static_cast<int>(group.size());
        Vector block(Eigen::Index(1) << m);
        for (Eigen::Index i = 0; i < block.size(); ++i) {
            block(i) = sepscan::detail::gaussian_complex(rng);
        }
        block.normalize();
        std::vector<int> sorted = group;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << n); ++idx) {
            std::uint64_t sub = 0;
            for (int label : sorted) {
                sub = (sub << 1) |
                      static_cast<std::uint64_t>(sepscan::basis_bit(idx, label, n));
            }
            amps(static_cast<Eigen::Index>(idx)) *= block(static_cast<Eigen::Index>(sub));
        }
    }
    return PureState{n, std::move(amps)};
}

// --- closed-form norms ------------------------------------------------------

/// Two qubits, amplitudes (a,b,c,d): xi^2 of either part.
inline double xi_sq_2q(const Vector& x) {
    return 1.0 - 4.0 * std::norm(x(0) * x(3) - x(1) * x(2));
}

/// Three qubits, amplitudes a..h at indices 0..7: (xi^2_A1, xi^2_A2, xi^2_A3).
inline std::array<double, 3> xi_sq_3q(const Vector& x) {
    const Complex a = x(0), b = x(1), c = x(2), d = x(3);
    const Complex e = x(4), f = x(5), g = x(6), h = x(7);
    const double a1 = 1.0 - 4.0 * std::norm(a * f - b * e) - 4.0 * std::norm(a * g - c * e) -
                      4.0 * std::norm(a * h - d * e) - 4.0 * std::norm(b * g - c * f) -
                      4.0 * std::norm(b * h - d * f) - 4.0 * std::norm(c * h - d * g);
    const double a2 = 1.0 - 4.0 * std::norm(a * d - b * c) - 4.0 * std::norm(a * g - c * e) -
                      4.0 * std::norm(a * h - c * f) - 4.0 * std::norm(b * g - d * e) -
                      4.0 * std::norm(b * h - d * f) - 4.0 * std::norm(e * h - f * g);
    const double a3 = 1.0 - 4.0 * std::norm(a * d - b * c) - 4.0 * std::norm(a * f - b * e) -
                      4.0 * std::norm(a * h - b * g) - 4.0 * std::norm(c * f - d * e) -
                      4.0 * std::norm(c * h - d * g) - 4.0 * std::norm(e * h - f * g);
    return {a1, a2, a3};
}

/// Four qubits: the 36-term expansion of xi^2 on the last two parts,
/// xi^2_{A3A4} = 3/2 - 4 sum |x_i x_j - x_k x_l|^2 over the listed quadruples
/// (1-based coefficient numbering x_1..x_16 over |0000>..|1111>).
inline double xi_sq_a3a4_expansion(const Vector& x) {
    static constexpr int kTerms[36][4] = {
        {1, 6, 2, 5},    {1, 7, 3, 5},    {1, 8, 4, 5},    {1, 10, 2, 9},   {1, 11, 3, 9},
        {1, 12, 4, 9},   {1, 14, 2, 13},  {1, 15, 3, 13},  {1, 16, 4, 13},  {2, 7, 3, 6},
        {2, 8, 4, 6},    {2, 11, 3, 10},  {2, 12, 4, 10},  {2, 15, 3, 14},  {2, 16, 4, 14},
        {3, 8, 4, 7},    {3, 12, 4, 11},  {3, 16, 4, 15},  {5, 10, 6, 9},   {5, 11, 7, 9},
        {5, 12, 8, 9},   {5, 14, 6, 13},  {5, 15, 7, 13},  {5, 16, 8, 13},  {6, 11, 7, 10},
        {6, 12, 8, 10},  {6, 15, 7, 14},  {6, 16, 8, 14},  {7, 12, 8, 11},  {7, 16, 8, 15},
        {9, 14, 10, 13}, {9, 15, 11, 13}, {9, 16, 12, 13}, {10, 15, 11, 14}, {10, 16, 12, 14},
        {11, 16, 12, 15}};
    double sum = 0.0;
    for (const auto& t : kTerms) {
        sum += std::norm(x(t[0] - 1) * x(t[1] - 1) - x(t[2] - 1) * x(t[3] - 1));
    }
    return 1.5 - 4.0 * sum;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Largest deviation between two states after aligning global phase.
inline double phase_aligned_diff(const Vector& a, const Vector& b) {
    const Complex overlap = (a.adjoint() * b)(0);
    const Complex phase = std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : Complex(1, 0);
    return (a * phase - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil
