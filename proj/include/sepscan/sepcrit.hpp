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

#include "sepscan/pauli.hpp"
#include "sepscan/state.hpp"

#include <Eigen/SVD>

#include <bit>
#include <optional>
#include <utility>
#include <vector>

namespace sepscan {

/// Outcome of the coherent-vector separability criterion for one block: the
/// block is separable from the rest of a pure state iff its squared norm
/// reaches the pure-state maximum 2(1 - 2^-m).
struct CriterionVerdict {
    Subsystem subsystem;
    double norm_sq = 0.0;
    double max_norm_sq = 0.0;
    double residual = 0.0;  // max_norm_sq - norm_sq, >= -tolerance
    bool separable = false;
    /// Residual fell in [tolerance, kMarginalWindow): classified by the hard
    /// threshold but numerically borderline.
    bool marginal = false;
};

/// Independent linear-algebra route: singular values of the amplitude matrix
/// reshaped across the block/complement cut. Separable iff the Schmidt rank
/// is one; in that case the two factor states are returned.
struct OracleVerdict {
    Subsystem subsystem;
    Eigen::VectorXd singular_values;  // descending
    bool separable = false;
    std::optional<PureState> block_factor;
    std::optional<PureState> complement_factor;
};

namespace detail {

inline CriterionVerdict make_verdict(Subsystem subsystem, double norm_sq, int m, double tol) {
    CriterionVerdict v{std::move(subsystem), norm_sq, max_coherent_norm_sq(m), 0.0, false, false};
    v.residual = v.max_norm_sq - v.norm_sq;
    v.separable = v.residual < tol;
    v.marginal = !v.separable && v.residual < kMarginalWindow;
    return v;
}

/// Sum of squared coherent-vector components straight from the Pauli
/// expansion; the purity route must agree with this within tolerance.
inline double coherent_norm_sq_from_expansion(const DensityMatrix& rho) {
    const PauliTensor tensor = pauli_expand(rho);
    double sum = 0.0;
    for (std::uint64_t k = 1; k < tensor.size(); ++k) {
        sum += tensor.coeffs[k] * tensor.coeffs[k];
    }
    return std::exp2(-(rho.m - 1)) * sum;
}

}  // namespace detail

/// One-part criterion: part A_i is separable from the rest iff its polarized
/// vector has unit norm.
inline CriterionVerdict one_part_separable(const PureState& state, QubitLabel part,
                                           double tol = kDefaultTolerance) {
    if (state.n < 2) {
        throw std::invalid_argument("one_part_separable: state has no complementary subsystem");
    }
    const double norm_sq = polarized_vector(state, part).norm_sq();
    return detail::make_verdict(Subsystem::single(part.index), norm_sq, 1, tol);
}

struct SeparabilityScan {
    bool fully_separable = false;
    std::vector<CriterionVerdict> parts;
};

/// Full separability: every part's polarized vector has unit norm.
inline SeparabilityScan fully_separable(const PureState& state, double tol = kDefaultTolerance) {
    SeparabilityScan scan;
    scan.fully_separable = true;
    for (int i = 1; i <= state.n; ++i) {
        const double norm_sq = polarized_vector(state, QubitLabel(i)).norm_sq();
        scan.parts.push_back(detail::make_verdict(Subsystem::single(i), norm_sq, 1, tol));
        scan.fully_separable = scan.fully_separable && scan.parts.back().separable;
    }
    return scan;
}

/// m-part criterion: the block is separable iff the coherent vector of its
/// reduced density matrix has the maximal norm 2(1 - 2^-m), equivalently iff
/// the reduced state is pure. Both the purity route and the component-sum
/// route are evaluated and must agree.
inline CriterionVerdict block_separable(const PureState& state, const Subsystem& block,
                                        double tol = kDefaultTolerance) {
    const int n = state.n;
    if (block.max_label() > n) {
        throw std::invalid_argument("block_separable: label outside the state");
    }
    if (block.size() >= n) {
        throw std::invalid_argument("block_separable: block must be a proper subsystem");
    }
    const DensityMatrix rho = reduced_density(state, block);
    const double via_purity = coherent_norm_sq(rho);
    const double via_components = detail::coherent_norm_sq_from_expansion(rho);
    if (std::abs(via_purity - via_components) > tol) {
        throw std::runtime_error("block_separable: purity and component routes disagree by " +
                                 std::to_string(std::abs(via_purity - via_components)));
    }
    return detail::make_verdict(block, via_purity, block.size(), tol);
}

/// Reshapes the amplitudes into a 2^(n-m) x 2^m matrix (rows over the
/// complement basis, columns over the block basis, both in ascending label
/// order) and takes its SVD. Separable iff the second singular value
/// vanishes relative to the first.
inline OracleVerdict schmidt_oracle(const PureState& state, const Subsystem& block,
                                    double tol = kDefaultTolerance) {
    const int n = state.n;
    if (block.max_label() > n) {
        throw std::invalid_argument("schmidt_oracle: label outside the state");
    }
    const int m = block.size();
    if (m >= n) {
        throw std::invalid_argument("schmidt_oracle: block must be a proper subsystem");
    }
    const auto cols = detail::scatter_table(detail::label_shifts(block, n));
    const auto rows = detail::scatter_table(detail::label_shifts(block.complement(n), n));

    Matrix reshaped(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            reshaped(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                state.amplitudes(static_cast<Eigen::Index>(rows[r] | cols[c]));
        }
    }

    Eigen::JacobiSVD<Matrix> svd(reshaped, Eigen::ComputeThinU | Eigen::ComputeThinV);
    OracleVerdict verdict{block, svd.singularValues(), false, std::nullopt, std::nullopt};
    const auto& s = verdict.singular_values;
    verdict.separable = s.size() < 2 || s(1) < tol * s(0);

    if (verdict.separable) {
        // Rank one: psi = s0 * u x conj(v). Factors are phase-normalized so
        // the first nonzero amplitude is real positive.
        auto phase_normalize = [](Vector amps) {
            for (Eigen::Index i = 0; i < amps.size(); ++i) {
                const double mag = std::abs(amps(i));
                if (mag > 1e-12) {
                    amps *= std::conj(amps(i)) / mag;
                    break;
                }
            }
            return amps;
        };
        verdict.block_factor =
            PureState{m, phase_normalize(svd.matrixV().col(0).conjugate().eval())};
        verdict.complement_factor =
            PureState{n - m, phase_normalize(svd.matrixU().col(0).eval())};
    }
    return verdict;
}

namespace detail {

/// Separability flags for every nonempty proper block, indexed by label
/// bitmask (bit j-1 = label j). Blocks larger than n/2 reuse the complement's
/// flag: for a pure joint state both reduced matrices share their nonzero
/// singular values, so the purities and therefore the flags coincide exactly.
inline std::vector<bool> all_block_flags(const PureState& state, double tol) {
    const int n = state.n;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::vector<bool> flags(full + 1, false);
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const int size = std::popcount(mask);
        const std::uint64_t comp = full ^ mask;
        if (2 * size > n || (2 * size == n && comp < mask)) {
            continue;  // mirrored below, once the small halves exist
        }
        std::vector<int> labels;
        for (int j = 1; j <= n; ++j) {
            if (mask & (std::uint64_t(1) << (j - 1))) {
                labels.push_back(j);
            }
        }
        flags[mask] = block_separable(state, Subsystem(std::move(labels)), tol).separable;
    }
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const int size = std::popcount(mask);
        const std::uint64_t comp = full ^ mask;
        if (2 * size > n || (2 * size == n && comp < mask)) {
            flags[mask] = flags[comp];
        }
    }
    return flags;
}

/// Haar-distributed 2x2 unitary via Gram-Schmidt on a complex Gaussian matrix.
inline Eigen::Matrix2cd random_unitary_2x2(std::mt19937_64& rng) {
    Eigen::Vector2cd c0(gaussian_complex(rng), gaussian_complex(rng));
    Eigen::Vector2cd c1(gaussian_complex(rng), gaussian_complex(rng));
    c0.normalize();
    c1 -= c0.dot(c1) * c0;
    c1.normalize();
    Eigen::Matrix2cd u;
    u.col(0) = c0;
    u.col(1) = c1;
    return u;
}

inline PureState apply_single_qubit_unitary(const PureState& state, int label,
                                            const Eigen::Matrix2cd& u) {
    const std::uint64_t mask = std::uint64_t(1) << (state.n - label);
    Vector out = state.amplitudes;
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(out.size()); ++idx) {
        if (idx & mask) {
            continue;
        }
        const Complex a0 = out(static_cast<Eigen::Index>(idx));
        const Complex a1 = out(static_cast<Eigen::Index>(idx | mask));
        out(static_cast<Eigen::Index>(idx)) = u(0, 0) * a0 + u(0, 1) * a1;
        out(static_cast<Eigen::Index>(idx | mask)) = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return PureState{state.n, std::move(out)};
}

}  // namespace detail

/// Applies an independent random unitary to each qubit and reports whether
/// every block's separability flag survived. Exercises the local-unitary part
/// of LOCC invariance.
inline bool local_unitary_invariance_check(const PureState& state, std::uint64_t seed,
                                           double tol = kDefaultTolerance) {
    if (state.n < 2) {
        return true;
    }
    const std::vector<bool> before = detail::all_block_flags(state, tol);
    std::mt19937_64 rng(seed);
    PureState rotated = state;
    for (int j = 1; j <= state.n; ++j) {
        rotated = detail::apply_single_qubit_unitary(rotated, j, detail::random_unitary_2x2(rng));
    }
    const std::vector<bool> after = detail::all_block_flags(rotated, tol);
    return before == after;
}

}  // namespace sepscan
