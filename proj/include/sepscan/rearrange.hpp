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

#include <numeric>
#include <vector>

namespace sepscan {

/// The 4x4 exchanging operator S for two adjacent qubits: S(M1 x M2)S = M2 x M1,
/// with S = S^-1 = S^dagger.
inline Eigen::Matrix4cd swap_matrix() {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return s;
}

/// A qubit-slot permutation realized as an ordered product of adjacent
/// transpositions.
///
/// `moves` lists the transpositions in application order; entry j swaps slots
/// (j, j+1), 1 <= j < n. `net_permutation[p-1]` is the original slot whose
/// qubit ends up at position p.
struct RearrangePlan {
    int n = 0;
    std::vector<int> moves;
    std::vector<int> net_permutation;
};

namespace detail {

inline std::vector<int> apply_moves(int n, const std::vector<int>& moves) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int j : moves) {
        if (j < 1 || j >= n) {
            throw std::invalid_argument("rearrange move " + std::to_string(j) + " out of range");
        }
        std::swap(perm[static_cast<size_t>(j - 1)], perm[static_cast<size_t>(j)]);
    }
    return perm;
}

}  // namespace detail

/// Plan moving slot i to the end: adjacent swaps (i,i+1), (i+1,i+2), ...,
/// (n-1,n). Empty when i = n.
inline RearrangePlan move_to_end(int n, int slot) {
    if (slot < 1 || slot > n) {
        throw std::invalid_argument("move_to_end: slot " + std::to_string(slot) +
                                    " out of range for n = " + std::to_string(n));
    }
    RearrangePlan plan;
    plan.n = n;
    for (int j = slot; j < n; ++j) {
        plan.moves.push_back(j);
    }
    plan.net_permutation = detail::apply_moves(n, plan.moves);
    return plan;
}

/// Plan moving an m-qubit block to the tail, tail order ascending. Composed
/// from single-slot plans right to left: the largest block label goes to slot
/// n first, then the next to slot n-1, and so on; smaller labels keep their
/// positions while later slots move.
inline RearrangePlan move_block_to_end(int n, const Subsystem& block) {
    if (block.max_label() > n) {
        throw std::invalid_argument("move_block_to_end: block extends past slot " +
                                    std::to_string(n));
    }
    RearrangePlan plan;
    plan.n = n;
    const int m = block.size();
    for (int k = m - 1; k >= 0; --k) {
        const int slot = block.label_at(k);
        const int target = n - m + k + 1;
        for (int j = slot; j < target; ++j) {
            plan.moves.push_back(j);
        }
    }
    plan.net_permutation = detail::apply_moves(n, plan.moves);
    return plan;
}

/// Plan applying `first` and then `then`.
inline RearrangePlan compose(const RearrangePlan& first, const RearrangePlan& then) {
    if (first.n != then.n) {
        throw std::invalid_argument("compose: plans act on different slot counts");
    }
    RearrangePlan plan;
    plan.n = first.n;
    plan.moves = first.moves;
    plan.moves.insert(plan.moves.end(), then.moves.begin(), then.moves.end());
    plan.net_permutation = detail::apply_moves(plan.n, plan.moves);
    return plan;
}

/// Undoes a plan; adjacent transpositions are involutions, so the reversed
/// move list suffices.
inline RearrangePlan inverse_plan(const RearrangePlan& plan) {
    RearrangePlan inv;
    inv.n = plan.n;
    inv.moves.assign(plan.moves.rbegin(), plan.moves.rend());
    inv.net_permutation = detail::apply_moves(inv.n, inv.moves);
    return inv;
}

namespace detail {

/// Flat-index map of a slot permutation: output bit p takes input bit perm[p].
inline std::vector<std::uint64_t> permuted_indices(int n, const std::vector<int>& perm) {
    const std::uint64_t dim = std::uint64_t(1) << n;
    std::vector<std::uint64_t> map(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        std::uint64_t out = 0;
        for (int p = 1; p <= n; ++p) {
            out |= static_cast<std::uint64_t>(basis_bit(k, perm[static_cast<size_t>(p - 1)], n))
                   << (n - p);
        }
        map[k] = out;
    }
    return map;
}

}  // namespace detail

/// Rearranges a pure state by permuting amplitude index bits. Exact: no
/// arithmetic on the amplitudes.
inline PureState apply_plan_state(const PureState& state, const RearrangePlan& plan) {
    if (plan.n != state.n) {
        throw std::invalid_argument("apply_plan_state: plan is for " + std::to_string(plan.n) +
                                    " qubits, state has " + std::to_string(state.n));
    }
    const auto map = detail::permuted_indices(state.n, plan.net_permutation);
    Vector out(state.dim());
    for (std::uint64_t k = 0; k < map.size(); ++k) {
        out(static_cast<Eigen::Index>(map[k])) = state.amplitudes(static_cast<Eigen::Index>(k));
    }
    return PureState{state.n, std::move(out)};
}

/// Conjugates a density matrix by the plan's permutation operator, permuting
/// row and column index bits alike. Spectrum and purity are untouched.
inline DensityMatrix apply_plan_density(const DensityMatrix& rho, const RearrangePlan& plan) {
    if (plan.n != rho.m) {
        throw std::invalid_argument("apply_plan_density: plan is for " + std::to_string(plan.n) +
                                    " qubits, matrix has " + std::to_string(rho.m));
    }
    const auto map = detail::permuted_indices(rho.m, plan.net_permutation);
    Matrix out(rho.dim(), rho.dim());
    for (std::uint64_t r = 0; r < map.size(); ++r) {
        for (std::uint64_t c = 0; c < map.size(); ++c) {
            out(static_cast<Eigen::Index>(map[r]), static_cast<Eigen::Index>(map[c])) =
                rho.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return DensityMatrix{rho.m, std::move(out)};
}

}  // namespace sepscan
