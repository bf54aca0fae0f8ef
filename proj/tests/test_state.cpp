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

#include "helpers.hpp"

#include "sepscan/pauli.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sepscan;
using namespace testutil;

TEST_CASE("density_from_pure on basis and Bell states") {
    const DensityMatrix zero = density_from_pure(basis_state(1, 0));
    REQUIRE(zero.m == 1);
    CHECK(std::abs(zero.entries(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(zero.entries(1, 1)) < 1e-15);
    CHECK(std::abs(zero.entries(0, 1)) < 1e-15);

    const DensityMatrix rho = density_from_pure(bell());
    REQUIRE(rho.m == 2);
    for (const auto& [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}}) {
        CHECK(std::abs(rho.entries(r, c) - 0.5) < 1e-15);
    }
    CHECK(std::abs(rho.entries(1, 1)) < 1e-15);
    CHECK(std::abs(rho.entries(0, 2)) < 1e-15);
}

TEST_CASE("GHZ3 density is a projector: Tr(rho*rho) by direct multiplication") {
    const DensityMatrix rho = density_from_pure(ghz(3));
    const Complex direct = (rho.entries * rho.entries).trace();
    CHECK(std::abs(direct - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(purity(rho) - 1.0) < 1e-9);
}

TEST_CASE("density_from_pure rejects non-normalized input") {
    Vector bad = Vector::Zero(2);
    bad(0) = 2.0;
    CHECK_THROWS_AS(density_from_pure(PureState{1, bad}), std::invalid_argument);
}

TEST_CASE("partial_trace on a product basis state") {
    const DensityMatrix rho = density_from_pure(basis_state(2, 0));  // |00><00|
    const DensityMatrix reduced = partial_trace(rho, Subsystem{1});
    REQUIRE(reduced.m == 1);
    CHECK(std::abs(reduced.entries(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(reduced.entries(1, 1)) < 1e-15);
}

TEST_CASE("partial_trace of GHZ3 onto one part is maximally mixed") {
    // Hand sum: only |000> and |111> contribute, diagonally.
    const DensityMatrix reduced = partial_trace(density_from_pure(ghz(3)), Subsystem{1});
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = expected(1, 1) = 0.5;
    CHECK(max_abs_diff(reduced.entries, expected) < 1e-15);
}

TEST_CASE("partial_trace of GHZ4 onto the last pair") {
    const DensityMatrix reduced = partial_trace(density_from_pure(ghz(4)), Subsystem{3, 4});
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    CHECK(max_abs_diff(reduced.entries, expected) < 1e-15);
    CHECK(std::abs(purity(reduced) - 0.5) < 1e-9);
}

TEST_CASE("partial_trace agrees with the rearrange-and-trace-last oracle") {
    // Middle-part traces exercise the nontrivial interleaving.
    const DensityMatrix rho3 = density_from_pure(random_pure_state(3, 11));
    CHECK(max_abs_diff(partial_trace(rho3, Subsystem{1, 3}).entries,
                       partial_trace_oracle(rho3, Subsystem{1, 3}).entries) < 1e-12);

    std::mt19937_64 rng(99);
    for (int n = 2; n <= 5; ++n) {
        const DensityMatrix rho = density_from_pure(random_pure_state(n, 1000 + n));
        const std::uint64_t full = (std::uint64_t(1) << n) - 1;
        for (int rep = 0; rep < 8; ++rep) {
            const std::uint64_t mask = 1 + rng() % full;
            std::vector<int> labels;
            for (int j = 1; j <= n; ++j) {
                if (mask & (std::uint64_t(1) << (j - 1))) {
                    labels.push_back(j);
                }
            }
            const Subsystem keep(std::move(labels));
            CHECK(max_abs_diff(partial_trace(rho, keep).entries,
                               partial_trace_oracle(rho, keep).entries) < 1e-12);
        }
    }
}

TEST_CASE("partial_trace preserves trace and the full-set trace is the identity") {
    for (int seed = 0; seed < 5; ++seed) {
        const DensityMatrix rho = density_from_pure(random_pure_state(4, seed));
        const DensityMatrix reduced = partial_trace(rho, Subsystem{2, 4});
        CHECK(std::abs(reduced.entries.trace() - Complex(1, 0)) < 1e-12);
        CHECK(max_abs_diff(partial_trace(rho, Subsystem::full(4)).entries, rho.entries) < 1e-12);
    }
}

TEST_CASE("tracing out parts one at a time equals the joint trace-out") {
    for (int seed = 0; seed < 5; ++seed) {
        const DensityMatrix rho = density_from_pure(random_pure_state(4, 50 + seed));
        const DensityMatrix joint = partial_trace(rho, Subsystem{1, 4});  // trace out {2,3}
        const DensityMatrix step1 = partial_trace(rho, Subsystem{1, 3, 4});
        const DensityMatrix step2 = partial_trace(step1, Subsystem{1, 3});  // label 3 is now slot 2
        CHECK(max_abs_diff(joint.entries, step2.entries) < 1e-12);
    }
}

TEST_CASE("purity of reduced pure states stays within its bounds") {
    for (int seed = 0; seed < 10; ++seed) {
        const PureState psi = random_pure_state(5, 200 + seed);
        CHECK(std::abs(purity(density_from_pure(psi)) - 1.0) < 1e-9);
        const DensityMatrix reduced = reduced_density(psi, Subsystem{2, 3});
        const double p = purity(reduced);
        CHECK(p <= 1.0 + 1e-9);
        CHECK(p >= 0.25 - 1e-9);
    }
    const DensityMatrix mixed{1, 0.5 * Matrix::Identity(2, 2)};
    CHECK(std::abs(purity(mixed) - 0.5) < 1e-15);
}

TEST_CASE("reduced_density equals partial_trace after density_from_pure") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 6; ++n) {
        const PureState psi = random_pure_state(n, 300 + n);
        const DensityMatrix rho = density_from_pure(psi);
        const std::uint64_t full = (std::uint64_t(1) << n) - 1;
        for (int rep = 0; rep < 6; ++rep) {
            const std::uint64_t mask = 1 + rng() % full;
            std::vector<int> labels;
            for (int j = 1; j <= n; ++j) {
                if (mask & (std::uint64_t(1) << (j - 1))) {
                    labels.push_back(j);
                }
            }
            const Subsystem keep(std::move(labels));
            CHECK(max_abs_diff(reduced_density(psi, keep).entries,
                               partial_trace(rho, keep).entries) < 1e-12);
        }
    }
}

TEST_CASE("partial_trace rejects labels outside the system") {
    const DensityMatrix rho = density_from_pure(bell());
    CHECK_THROWS_AS(partial_trace(rho, Subsystem{3}), std::invalid_argument);
    CHECK_THROWS_AS(Subsystem(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Subsystem({2, 2}), std::invalid_argument);
}

TEST_CASE("random_pure_state is deterministic, normalized, and validated") {
    const PureState a = random_pure_state(3, 42);
    const PureState b = random_pure_state(3, 42);
    REQUIRE(a.amplitudes.size() == 8);
    CHECK((a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(a.amplitudes.norm() - 1.0) < 1e-12);
    CHECK((a.amplitudes - random_pure_state(3, 43).amplitudes).cwiseAbs().maxCoeff() > 1e-3);
    CHECK_THROWS_AS(random_pure_state(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_pure_state(15, 1), std::invalid_argument);
}

TEST_CASE("random 3-qubit states are entangled on every part for recorded seeds") {
    for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL, 77ULL, 123456ULL}) {
        const PureState psi = random_pure_state(3, seed);
        for (int part = 1; part <= 3; ++part) {
            CHECK(polarized_vector(psi, QubitLabel(part)).norm_sq() < 1.0 - 1e-6);
        }
    }
}

TEST_CASE("PureState::from_amplitudes validation") {
    Vector short_vec = Vector::Zero(7);
    CHECK_THROWS_AS(PureState::from_amplitudes(3, short_vec), std::invalid_argument);

    Vector zero = Vector::Zero(8);
    CHECK_THROWS_AS(PureState::from_amplitudes(3, zero), std::invalid_argument);

    Vector near = Vector::Zero(4);
    near(0) = 1.0 + 5e-7;  // inside the renormalization window
    const PureState renormed = PureState::from_amplitudes(2, near);
    CHECK(std::abs(renormed.amplitudes.norm() - 1.0) < 1e-15);

    Vector far = Vector::Zero(4);
    far(0) = 1.01;
    CHECK_THROWS_AS(PureState::from_amplitudes(2, far), std::invalid_argument);
}

TEST_CASE("DensityMatrix::from_matrix validation") {
    Matrix ok = Matrix::Zero(2, 2);
    ok(0, 0) = 0.75;
    ok(1, 1) = 0.25;
    CHECK(DensityMatrix::from_matrix(ok).m == 1);

    Matrix non_hermitian = ok;
    non_hermitian(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(non_hermitian), std::invalid_argument);

    Matrix bad_trace = ok;
    bad_trace(0, 0) = 0.9;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(bad_trace), std::invalid_argument);

    Matrix negative = Matrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(negative), std::invalid_argument);

    CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix::Zero(3, 3)), std::invalid_argument);
}
