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

#pragma once

#include "sepscan/state.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace sepscan {

/// Real expansion coefficients of an n-qubit density matrix over tensor
/// products of Pauli matrices: coeffs[mu] = Tr(rho * sigma^{mu_1} x ... x
/// sigma^{mu_n}). The flat index packs the multi-index base-4, qubit 1 most
/// significant; sigma^0 = I, sigma^1 = X, sigma^2 = Y, sigma^3 = Z.
/// coeffs[0] = Tr(rho) = 1.
struct PauliTensor {
    int n = 0;
    std::vector<double> coeffs;  // 4^n entries

    std::uint64_t size() const { return std::uint64_t(1) << (2 * n); }
};

/// Coherent vector of an m-qubit density matrix: the 2^(2m)-1 real
/// coefficients against the traceless orthogonal basis
/// 2^{-(m-1)/2} sigma^{mu_1} x ... x sigma^{mu_m}, multi-index nonzero,
/// stored in lexicographic (base-4 numeric) order. For one qubit this is the
/// polarized (Bloch) vector.
struct CoherentVector {
    int m = 0;
    Eigen::VectorXd components;  // 4^m - 1 entries, flat index K stored at K-1

    double norm_sq() const { return components.squaredNorm(); }
};

/// Largest possible squared coherent-vector norm on m qubits, attained
/// exactly by pure states.
inline double max_coherent_norm_sq(int m) {
    return 2.0 * (1.0 - std::exp2(-m));
}

namespace detail {

// Residual imaginary parts above this signal a non-Hermitian matrix.
inline constexpr double kImagResidueTolerance = 1e-9;

}  // namespace detail

/// Expands rho over the Pauli product basis. O(m 4^m): one butterfly pass per
/// qubit over the (row,col) bit pairs.
inline PauliTensor pauli_expand(const DensityMatrix& rho) {
    const int m = rho.m;
    const std::uint64_t dim = std::uint64_t(1) << m;
    std::vector<Complex> work(std::uint64_t(1) << (2 * m));

    // Pack each qubit's (row bit, col bit) pair into one base-4 digit.
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            std::uint64_t key = 0;
            for (int j = 0; j < m; ++j) {
                const std::uint64_t rb = (r >> (m - 1 - j)) & 1u;
                const std::uint64_t cb = (c >> (m - 1 - j)) & 1u;
                key = (key << 2) | (rb << 1) | cb;
            }
            work[key] = rho.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }

    // Per-qubit transform of the four pair values (rc = 00,01,10,11) into the
    // I, X, Y, Z trace components.
    for (int j = 0; j < m; ++j) {
        const std::uint64_t stride = std::uint64_t(1) << (2 * (m - 1 - j));
        for (std::uint64_t base = 0; base < work.size(); base += 4 * stride) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                const Complex v00 = work[base + off];
                const Complex v01 = work[base + stride + off];
                const Complex v10 = work[base + 2 * stride + off];
                const Complex v11 = work[base + 3 * stride + off];
                work[base + off] = v00 + v11;
                work[base + stride + off] = v01 + v10;
                work[base + 2 * stride + off] = Complex(0.0, 1.0) * (v01 - v10);
                work[base + 3 * stride + off] = v00 - v11;
            }
        }
    }

    PauliTensor out{m, std::vector<double>(work.size())};
    double max_imag = 0.0;
    for (std::uint64_t k = 0; k < work.size(); ++k) {
        max_imag = std::max(max_imag, std::abs(work[k].imag()));
        out.coeffs[k] = work[k].real();
    }
    if (max_imag > detail::kImagResidueTolerance) {
        throw std::runtime_error("pauli_expand: imaginary residue " + std::to_string(max_imag) +
                                 " signals a non-Hermitian matrix");
    }
    return out;
}

/// Rebuilds rho = 2^-m sum_mu coeffs[mu] sigma^{mu_1} x ... x sigma^{mu_m}
/// by inverting the expansion transform axis by axis.
inline DensityMatrix reconstruct_density(const PauliTensor& tensor) {
    const int m = tensor.n;
    std::vector<Complex> work(tensor.coeffs.begin(), tensor.coeffs.end());

    for (int j = 0; j < m; ++j) {
        const std::uint64_t stride = std::uint64_t(1) << (2 * (m - 1 - j));
        for (std::uint64_t base = 0; base < work.size(); base += 4 * stride) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                const Complex ai = work[base + off];
                const Complex ax = work[base + stride + off];
                const Complex ay = work[base + 2 * stride + off];
                const Complex az = work[base + 3 * stride + off];
                work[base + off] = 0.5 * (ai + az);                          // rho_00
                work[base + stride + off] = 0.5 * (ax - Complex(0, 1) * ay);  // rho_01
                work[base + 2 * stride + off] = 0.5 * (ax + Complex(0, 1) * ay);
                work[base + 3 * stride + off] = 0.5 * (ai - az);
            }
        }
    }

    const std::uint64_t dim = std::uint64_t(1) << m;
    Matrix rho(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            std::uint64_t key = 0;
            for (int j = 0; j < m; ++j) {
                const std::uint64_t rb = (r >> (m - 1 - j)) & 1u;
                const std::uint64_t cb = (c >> (m - 1 - j)) & 1u;
                key = (key << 2) | (rb << 1) | cb;
            }
            rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = work[key];
        }
    }
    return DensityMatrix{m, std::move(rho)};
}

/// Single coefficient Tr(rho * sigma^{mu_1} x ... x sigma^{mu_m}) for the
/// base-4 packed multi-index. A Pauli product is a signed permutation, so the
/// trace needs one matrix entry per column: O(2^m).
inline double pauli_component(const DensityMatrix& rho, std::uint64_t pauli_index) {
    const int m = rho.m;
    std::uint64_t flip = 0;
    std::uint64_t sign_mask = 0;
    int y_count = 0;
    for (int j = 0; j < m; ++j) {
        const std::uint64_t digit = (pauli_index >> (2 * (m - 1 - j))) & 3u;
        const std::uint64_t bit = std::uint64_t(1) << (m - 1 - j);
        switch (digit) {
            case 1:
                flip |= bit;
                break;
            case 2:
                flip |= bit;
                sign_mask |= bit;
                ++y_count;
                break;
            case 3:
                sign_mask |= bit;
                break;
            default:
                break;
        }
    }

    static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex base_phase = kIPowers[y_count & 3];
    const std::uint64_t dim = std::uint64_t(1) << m;
    Complex sum = 0.0;
    for (std::uint64_t c = 0; c < dim; ++c) {
        const double sign = (std::popcount(c & sign_mask) & 1) ? -1.0 : 1.0;
        sum += sign * rho.entries(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ flip));
    }
    sum *= base_phase;
    if (std::abs(sum.imag()) > detail::kImagResidueTolerance) {
        throw std::runtime_error("pauli_component: imaginary residue signals a non-Hermitian matrix");
    }
    return sum.real();
}

/// Coherent vector of rho by direct traces against the normalized basis.
/// Kept independent of pauli_expand so the two routes cross-check each other.
inline CoherentVector coherent_vector(const DensityMatrix& rho) {
    const int m = rho.m;
    if (m > kMaxDensityQubits) {
        throw std::invalid_argument("coherent_vector: subsystem exceeds the cap of " +
                                    std::to_string(kMaxDensityQubits) + " qubits");
    }
    const double scale = std::exp2(-0.5 * (m - 1));
    const std::uint64_t count = (std::uint64_t(1) << (2 * m)) - 1;
    Eigen::VectorXd components(static_cast<Eigen::Index>(count));
    for (std::uint64_t k = 1; k <= count; ++k) {
        components(static_cast<Eigen::Index>(k - 1)) = scale * pauli_component(rho, k);
    }
    return CoherentVector{m, std::move(components)};
}

/// Squared norm of the coherent vector via the purity identity
/// Tr(rho^2) = 2^-m + ||xi||^2 / 2.
inline double coherent_norm_sq(const DensityMatrix& rho) {
    return 2.0 * (purity(rho) - std::exp2(-rho.m));
}

/// Polarized (Bloch) vector of one qubit of a pure state, computed on the fly
/// from the amplitudes; no density matrix is materialized.
inline CoherentVector polarized_vector(const PureState& state, QubitLabel part) {
    const int n = state.n;
    if (part.index > n) {
        throw std::invalid_argument("polarized_vector: label " + std::to_string(part.index) +
                                    " outside the " + std::to_string(n) + "-qubit state");
    }
    const std::uint64_t mask = std::uint64_t(1) << (n - part.index);
    const std::uint64_t dim = std::uint64_t(1) << n;

    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        const Complex amp = state.amplitudes(static_cast<Eigen::Index>(idx));
        if (idx & mask) {
            z -= std::norm(amp);
        } else {
            z += std::norm(amp);
            const Complex pair =
                std::conj(amp) * state.amplitudes(static_cast<Eigen::Index>(idx | mask));
            x += 2.0 * pair.real();
            y += 2.0 * pair.imag();
        }
    }
    Eigen::VectorXd components(3);
    components << x, y, z;
    return CoherentVector{1, std::move(components)};
}

}  // namespace sepscan
