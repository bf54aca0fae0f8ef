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

// Classifies a handful of named states straight from the library API.

#include "sepscan/report.hpp"

#include <cmath>
#include <iostream>

using namespace sepscan;

namespace {

PureState make_state(int n, std::initializer_list<std::pair<int, Complex>> entries) {
    Vector amps = Vector::Zero(Eigen::Index(1) << n);
    for (const auto& [idx, value] : entries) {
        amps(idx) = value;
    }
    amps.normalize();
    return PureState{n, std::move(amps)};
}

void show(const std::string& name, const PureState& state) {
    const FactorizationTree tree = finest_factorization(state);
    std::cout << name << ": " << factorization_text(tree) << "\n";
    for (int i = 1; i <= state.n; ++i) {
        std::cout << "    xi^2(A" << i << ") = "
                  << polarized_vector(state, QubitLabel(i)).norm_sq() << "\n";
    }
}

}  // namespace

int main() {
    const double s2 = 1.0 / std::sqrt(2.0);

    show("GHZ3", make_state(3, {{0, s2}, {7, s2}}));
    show("W3", make_state(3, {{1, 1.0}, {2, 1.0}, {4, 1.0}}));
    show("|0> x Bell", make_state(3, {{0, s2}, {3, s2}}));
    show("Bell x Bell", make_state(4, {{0, 0.5}, {3, 0.5}, {12, 0.5}, {15, 0.5}}));
    show("|01>", make_state(2, {{1, 1.0}}));

    // Interleaved product: Bell on {A1,A3} tensor Bell on {A2,A4}.
    show("Bell(A1,A3) x Bell(A2,A4)",
         make_state(4, {{0b0000, 0.5}, {0b0101, 0.5}, {0b1010, 0.5}, {0b1111, 0.5}}));
    return 0;
}
