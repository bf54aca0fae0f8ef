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

#include "sepscan/report.hpp"
#include "sepscan/statefile.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sepscan;
using namespace testutil;

TEST_CASE("state files round-trip bit-exactly") {
    StateFile file;
    file.n = 3;
    file.label = "random";
    file.state = random_pure_state(3, 2718);

    const StateFile back = parse_state_json(emit_state_json(file));
    CHECK(back.n == 3);
    CHECK(back.label == file.label);
    REQUIRE(back.state.amplitudes.size() == file.state.amplitudes.size());
    for (Eigen::Index i = 0; i < back.state.amplitudes.size(); ++i) {
        CHECK(back.state.amplitudes(i) == file.state.amplitudes(i));
    }

    // Emission itself is stable.
    const std::string once = emit_state_json(file);
    CHECK(once == emit_state_json(parse_state_json(once)));
}

TEST_CASE("state file validation errors") {
    CHECK_THROWS_AS(parse_state_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 2, "amplitudes": 3})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_json(R"({"n": 1.5, "amplitudes": []})"), std::invalid_argument);

    // Wrong length: 7 amplitudes for n = 3.
    std::string seven = R"({"n": 3, "amplitudes": [)";
    for (int i = 0; i < 7; ++i) {
        seven += i ? ",[0,0]" : "[1,0]";
    }
    seven += "]}";
    CHECK_THROWS_WITH(parse_state_json(seven), Catch::Matchers::ContainsSubstring("expected 2^3"));

    // Zero vector.
    std::string zero = R"({"n": 1, "amplitudes": [[0,0],[0,0]]})";
    CHECK_THROWS_AS(parse_state_json(zero), std::invalid_argument);

    // Norm outside the ingest window.
    std::string off = R"({"n": 1, "amplitudes": [[0.9,0],[0,0]]})";
    CHECK_THROWS_AS(parse_state_json(off), std::invalid_argument);

    // Within the window: renormalized silently.
    std::string close = R"({"n": 1, "amplitudes": [[1.0000001,0],[0,0]]})";
    CHECK(std::abs(parse_state_json(close).state.amplitudes.norm() - 1.0) < 1e-12);

    CHECK_THROWS_AS(parse_state_json(R"({"n": 1, "amplitudes": [[1,0],["x",0]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_state_file("/nonexistent/state.json"), std::invalid_argument);
}

TEST_CASE("digest is deterministic and input-sensitive") {
    const PureState a = random_pure_state(3, 1);
    const PureState b = random_pure_state(3, 2);
    CHECK(digest_state(a) == digest_state(a));
    CHECK(digest_state(a) != digest_state(b));
    CHECK(digest_state(a).size() == 16);
}

TEST_CASE("reports round-trip through JSON") {
    for (const PureState& psi :
         {ghz(3), tensor(basis_state(1, 0), bell()), tensor(bell(), bell()), ghz(4)}) {
        const Report report = build_report(psi, "case");
        const nlohmann::json j = report_to_json(report);
        const Report back = report_from_json(j);
        CHECK(report_to_json(back) == j);
    }
}

TEST_CASE("report content for |0> x Bell") {
    const Report report = build_report(tensor(basis_state(1, 0), bell()), std::nullopt);
    CHECK(report.n == 3);
    CHECK(report.criterion_oracle_agree);
    CHECK_FALSE(report.any_marginal);
    REQUIRE(report.block_verdicts.size() == 3);  // {A1}, {A2}, {A3}
    CHECK(report.block_verdicts[0].criterion.separable);
    CHECK_FALSE(report.block_verdicts[1].criterion.separable);
    CHECK_FALSE(report.block_verdicts[2].criterion.separable);
    for (const BlockDiagnostic& diag : report.block_verdicts) {
        REQUIRE(diag.oracle.has_value());
        CHECK(diag.oracle->separable == diag.criterion.separable);
    }
    REQUIRE(report.tree.blocks.size() == 2);
    REQUIRE(report.support_class.has_value());
    CHECK(report.support_class->label == ClassLabel::kAPart);

    const std::string text = report_to_text(report);
    CHECK(text.find("blocks: {A1}, {A2,A3} (entangled)") != std::string::npos);
    CHECK(text.find("partially separable") != std::string::npos);
}

TEST_CASE("report text for GHZ3") {
    const Report report = build_report(ghz(3), "ghz3");
    const std::string text = report_to_text(report);
    CHECK(text.find("fully entangled, blocks: {A1,A2,A3}") != std::string::npos);
    CHECK(text.find("support: ah -> entangled") != std::string::npos);
    CHECK(text.find("criterion/oracle agreement: yes") != std::string::npos);
}
