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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepscan {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Absolute tolerance for scalar comparisons (norms, purity, xi^2).
inline constexpr double kDefaultTolerance = 1e-9;
/// Tolerance for identities that hold in exact arithmetic (traces, bit permutations).
inline constexpr double kExactTolerance = 1e-12;
/// States whose norm deviates by at most this much are renormalized on ingest.
inline constexpr double kIngestNormTolerance = 1e-6;
/// Residuals in [tolerance, kMarginalWindow) are flagged as numerically marginal.
inline constexpr double kMarginalWindow = 1e-6;
/// Hard cap on dense amplitude vectors (2^14 entries).
inline constexpr int kMaxQubits = 14;
/// Hard cap on materialized density matrices.
inline constexpr int kMaxDensityQubits = 10;

/// 1-based position of a qubit, matching the part labels A1..An.
struct QubitLabel {
    int index = 0;

    QubitLabel() = default;
    explicit QubitLabel(int idx) : index(idx) {
        if (idx < 1) {
            throw std::invalid_argument("qubit label must be >= 1, got " + std::to_string(idx));
        }
    }
    friend bool operator==(QubitLabel a, QubitLabel b) { return a.index == b.index; }
    friend auto operator<=>(QubitLabel a, QubitLabel b) { return a.index <=> b.index; }
};

/// Nonempty set of distinct qubit labels, kept in ascending order.
class Subsystem {
  public:
    explicit Subsystem(std::vector<int> labels) {
        if (labels.empty()) {
            throw std::invalid_argument("subsystem must contain at least one qubit");
        }
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
            throw std::invalid_argument("subsystem labels must be distinct");
        }
        labels_.reserve(labels.size());
        for (int l : labels) {
            labels_.emplace_back(l);
        }
    }
    Subsystem(std::initializer_list<int> labels) : Subsystem(std::vector<int>(labels)) {}

    static Subsystem single(int label) { return Subsystem({label}); }

    /// All labels from 1 to n.
    static Subsystem full(int n) {
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            all[static_cast<size_t>(i)] = i + 1;
        }
        return Subsystem(std::move(all));
    }

    const std::vector<QubitLabel>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    int label_at(int i) const { return labels_[static_cast<size_t>(i)].index; }
    int max_label() const { return labels_.back().index; }

    bool contains(int label) const {
        return std::binary_search(labels_.begin(), labels_.end(), QubitLabel(label));
    }

    /// Labels in [1, n] that are not part of this subsystem.
    Subsystem complement(int n) const {
        std::vector<int> rest;
        rest.reserve(static_cast<size_t>(n - size()));
        for (int l = 1; l <= n; ++l) {
            if (!contains(l)) {
                rest.push_back(l);
            }
        }
        return Subsystem(std::move(rest));
    }

    std::string to_string() const {
        std::string out = "{";
        for (size_t i = 0; i < labels_.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += 'A' + std::to_string(labels_[i].index);
        }
        out += '}';
        return out;
    }

    friend bool operator==(const Subsystem& a, const Subsystem& b) { return a.labels_ == b.labels_; }

  private:
    std::vector<QubitLabel> labels_;
};

/// Bit of basis index `k` belonging to qubit `label` in an n-qubit register.
/// Qubit 1 is the most significant bit: index k encodes |b1 b2 ... bn> with
/// k = sum bj * 2^(n-j).
inline int basis_bit(std::uint64_t k, int label, int n) {
    return static_cast<int>((k >> (n - label)) & 1u);
}

/// Pure n-qubit state as a dense, unit-norm amplitude vector.
///
/// Fields are public for value-style use; `from_amplitudes` is the validating
/// entry point, and every operation in this library preserves the invariants.
struct PureState {
    int n = 0;
    Vector amplitudes;

    Eigen::Index dim() const { return Eigen::Index(1) << n; }

    /// Validates shape and norm. Inputs within kIngestNormTolerance of unit
    /// norm are renormalized; anything further off (including the zero
    /// vector) is rejected. Vectors already normalized to machine precision
    /// are kept bit-identical, so serialized states round-trip exactly.
    static PureState from_amplitudes(int n, Vector amps) {
        if (n < 1) {
            throw std::invalid_argument("state must have at least one qubit");
        }
        if (n > kMaxQubits) {
            throw std::invalid_argument("state exceeds the dense cap of " +
                                        std::to_string(kMaxQubits) + " qubits");
        }
        if (amps.size() != (Eigen::Index(1) << n)) {
            throw std::invalid_argument("amplitude count " + std::to_string(amps.size()) +
                                        " does not match 2^" + std::to_string(n));
        }
        const double norm = amps.norm();
        if (std::abs(norm - 1.0) > kIngestNormTolerance) {
            throw std::invalid_argument("amplitude vector norm " + std::to_string(norm) +
                                        " is not within " + std::to_string(kIngestNormTolerance) +
                                        " of 1");
        }
        if (std::abs(norm - 1.0) > 1e-12) {
            amps /= norm;
        }
        return PureState{n, std::move(amps)};
    }
};

/// Density matrix of an m-qubit (sub)system, 2^m x 2^m, Hermitian, unit trace.
struct DensityMatrix {
    int m = 0;
    Matrix entries;

    Eigen::Index dim() const { return Eigen::Index(1) << m; }

    /// Full validation: shape, Hermiticity, unit trace, positive semidefinite
    /// spectrum. Use for untrusted input; internal operations construct
    /// directly because they preserve these invariants.
    static DensityMatrix from_matrix(Matrix entries, double tol = kDefaultTolerance) {
        const Eigen::Index d = entries.rows();
        if (d < 2 || entries.cols() != d || (d & (d - 1)) != 0) {
            throw std::invalid_argument("density matrix must be square with power-of-two dimension");
        }
        int m = 0;
        while ((Eigen::Index(1) << m) < d) {
            ++m;
        }
        if (m > kMaxDensityQubits) {
            throw std::invalid_argument("density matrix exceeds the cap of " +
                                        std::to_string(kMaxDensityQubits) + " qubits");
        }
        if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > tol) {
            throw std::invalid_argument("density matrix is not Hermitian within tolerance");
        }
        if (std::abs(entries.trace() - Complex(1.0, 0.0)) > tol) {
            throw std::invalid_argument("density matrix trace is not 1 within tolerance");
        }
        Eigen::SelfAdjointEigenSolver<Matrix> eig(entries, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().minCoeff() < -tol) {
            throw std::invalid_argument("density matrix has an eigenvalue below -tolerance");
        }
        return DensityMatrix{m, std::move(entries)};
    }
};

/// |psi><psi| outer product.
inline DensityMatrix density_from_pure(const PureState& state) {
    const double norm = state.amplitudes.norm();
    if (std::abs(norm - 1.0) > kIngestNormTolerance) {
        throw std::invalid_argument("state is not normalized");
    }
    if (state.n > kMaxDensityQubits) {
        throw std::invalid_argument("density matrix would exceed the cap of " +
                                    std::to_string(kMaxDensityQubits) + " qubits");
    }
    Matrix rho = state.amplitudes * state.amplitudes.adjoint();
    return DensityMatrix{state.n, std::move(rho)};
}

namespace detail {

/// For each value of `count` packed bits (MSB-first over `shifts`), the
/// scattered contribution to a flat basis index.
inline std::vector<std::uint64_t> scatter_table(const std::vector<int>& shifts) {
    const int count = static_cast<int>(shifts.size());
    std::vector<std::uint64_t> table(std::uint64_t(1) << count, 0);
    for (std::uint64_t packed = 0; packed < table.size(); ++packed) {
        std::uint64_t idx = 0;
        for (int p = 0; p < count; ++p) {
            if ((packed >> (count - 1 - p)) & 1u) {
                idx |= std::uint64_t(1) << shifts[static_cast<size_t>(p)];
            }
        }
        table[packed] = idx;
    }
    return table;
}

/// Bit shifts (from the LSB) for the labels of `part` in an n-qubit register,
/// ordered so that ascending labels map to MSB-first packed bits.
inline std::vector<int> label_shifts(const Subsystem& part, int n) {
    std::vector<int> shifts;
    shifts.reserve(static_cast<size_t>(part.size()));
    for (const QubitLabel& l : part.labels()) {
        shifts.push_back(n - l.index);
    }
    return shifts;
}

}  // namespace detail

/// Reduced density matrix on `keep`, tracing out the rest. Output qubit order
/// follows ascending original labels.
inline DensityMatrix partial_trace(const DensityMatrix& rho, const Subsystem& keep) {
    const int m = rho.m;
    if (keep.max_label() > m) {
        throw std::invalid_argument("partial_trace: label " + std::to_string(keep.max_label()) +
                                    " outside the " + std::to_string(m) + "-qubit system");
    }
    const int k = keep.size();
    const Subsystem traced_set = (k == m) ? Subsystem({1}) : keep.complement(m);
    const auto kept = detail::scatter_table(detail::label_shifts(keep, m));
    std::vector<std::uint64_t> traced{0};
    if (k < m) {
        traced = detail::scatter_table(detail::label_shifts(traced_set, m));
    }

    const Eigen::Index out_dim = Eigen::Index(1) << k;
    Matrix out = Matrix::Zero(out_dim, out_dim);
    for (Eigen::Index r = 0; r < out_dim; ++r) {
        for (Eigen::Index c = 0; c < out_dim; ++c) {
            Complex sum = 0.0;
            for (std::uint64_t t : traced) {
                sum += rho.entries(static_cast<Eigen::Index>(kept[static_cast<size_t>(r)] | t),
                                   static_cast<Eigen::Index>(kept[static_cast<size_t>(c)] | t));
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix{k, std::move(out)};
}

/// Tr(rho^2). Equals the squared Frobenius norm for Hermitian input.
inline double purity(const DensityMatrix& rho) {
    return rho.entries.squaredNorm();
}

/// Reduced density matrix of a pure state on `keep`, computed from the
/// amplitudes without materializing the full 2^n x 2^n matrix. Agrees with
/// partial_trace(density_from_pure(state), keep).
inline DensityMatrix reduced_density(const PureState& state, const Subsystem& keep) {
    const int n = state.n;
    if (keep.max_label() > n) {
        throw std::invalid_argument("reduced_density: label " + std::to_string(keep.max_label()) +
                                    " outside the " + std::to_string(n) + "-qubit system");
    }
    const int k = keep.size();
    if (k > kMaxDensityQubits) {
        throw std::invalid_argument("reduced density matrix would exceed the cap of " +
                                    std::to_string(kMaxDensityQubits) + " qubits");
    }
    const auto cols = detail::scatter_table(detail::label_shifts(keep, n));
    std::vector<std::uint64_t> rows{0};
    if (k < n) {
        rows = detail::scatter_table(detail::label_shifts(keep.complement(n), n));
    }

    // Amplitudes reshaped with rows over the traced-out basis, columns over
    // the kept basis; rho = M^T conj(M) sums conj pairs over the traced rows.
    Matrix reshaped(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            reshaped(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                state.amplitudes(static_cast<Eigen::Index>(rows[r] | cols[c]));
        }
    }
    Matrix rho = reshaped.transpose() * reshaped.conjugate();
    return DensityMatrix{k, std::move(rho)};
}

namespace detail {

/// Uniform double in (0, 1) built directly from raw mt19937_64 output, so
/// results are identical across standard library implementations.
inline double uniform_unit(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// One standard normal pair via Box-Muller.
inline void gaussian_pair(std::mt19937_64& rng, double& z0, double& z1) {
    const double u1 = uniform_unit(rng);
    const double u2 = uniform_unit(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    z0 = r * std::cos(phi);
    z1 = r * std::sin(phi);
}

inline Complex gaussian_complex(std::mt19937_64& rng) {
    double re = 0.0;
    double im = 0.0;
    gaussian_pair(rng, re, im);
    return {re, im};
}

}  // namespace detail

/// Haar-like random state: independent complex Gaussian amplitudes,
/// normalized. Deterministic for a fixed (n, seed) pair.
inline PureState random_pure_state(int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("random_pure_state: n must be >= 1");
    }
    if (n > kMaxQubits) {
        throw std::invalid_argument("random_pure_state: n exceeds the dense cap");
    }
    std::mt19937_64 rng(seed);
    Vector amps(Eigen::Index(1) << n);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        amps(i) = detail::gaussian_complex(rng);
    }
    const double norm = amps.norm();
    if (norm < 1e-300) {
        throw std::runtime_error("random_pure_state: degenerate draw");
    }
    amps /= norm;
    return PureState{n, std::move(amps)};
}

}  // namespace sepscan
