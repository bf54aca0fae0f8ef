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

#include "sepscan/classify.hpp"
#include "sepscan/statefile.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sepscan {

/// Classification report for one input state: criterion (and, where run,
/// oracle) verdicts for every block up to half the system, the finest
/// factorization, and for three qubits the support class.
struct Report {
    std::string digest;
    int n = 0;
    std::optional<std::string> label;
    double tolerance = kDefaultTolerance;
    std::vector<BlockDiagnostic> block_verdicts;
    FactorizationTree tree;
    std::optional<SupportClass> support_class;
    bool criterion_oracle_agree = true;
    bool any_marginal = false;
};

struct ReportOptions {
    double tolerance = kDefaultTolerance;
    /// Run the Schmidt oracle on every enumerated block up to this system
    /// size; above it the oracle runs only where the factorization splits.
    int oracle_all_max_qubits = 8;
};

/// FNV-1a over the canonical decimal serialization, stable across platforms.
inline std::string digest_state(const PureState& state) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& text) {
        for (unsigned char ch : text) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    mix(std::to_string(state.n));
    mix("|");
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
        mix(format_double(state.amplitudes(i).real()));
        mix(",");
        mix(format_double(state.amplitudes(i).imag()));
        mix(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline Report build_report(const PureState& state, std::optional<std::string> label,
                           const ReportOptions& opts = {}) {
    Report report;
    report.digest = digest_state(state);
    report.n = state.n;
    report.label = std::move(label);
    report.tolerance = opts.tolerance;

    const int n = state.n;
    const bool oracle_all = n <= opts.oracle_all_max_qubits;
    for (int size = 1; size <= n / 2; ++size) {
        std::vector<int> comb(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) {
            comb[static_cast<size_t>(i)] = i + 1;
        }
        do {
            Subsystem block(comb);
            BlockDiagnostic diag{block, block_separable(state, block, opts.tolerance),
                                 std::nullopt};
            if (oracle_all) {
                diag.oracle = schmidt_oracle(state, block, opts.tolerance);
                if (diag.oracle->separable != diag.criterion.separable) {
                    report.criterion_oracle_agree = false;
                }
            }
            report.any_marginal = report.any_marginal || diag.criterion.marginal;
            report.block_verdicts.push_back(std::move(diag));
        } while (detail::next_combination(comb, n));
    }

    report.tree = finest_factorization(state, opts.tolerance);
    report.criterion_oracle_agree =
        report.criterion_oracle_agree && report.tree.criterion_oracle_agree;

    if (n == 3) {
        int mask = 0;
        for (int idx = 0; idx < 8; ++idx) {
            if (std::abs(state.amplitudes(idx)) > opts.tolerance) {
                mask |= 1 << idx;
            }
        }
        report.support_class =
            classify_support_3q(mask, std::optional<Vector>(state.amplitudes), opts.tolerance);
    }
    return report;
}

namespace detail {

inline nlohmann::json labels_json(const Subsystem& subsystem) {
    nlohmann::json arr = nlohmann::json::array();
    for (const QubitLabel& l : subsystem.labels()) {
        arr.push_back(l.index);
    }
    return arr;
}

inline Subsystem labels_from_json(const nlohmann::json& arr) {
    std::vector<int> labels;
    for (const auto& v : arr) {
        labels.push_back(v.get<int>());
    }
    return Subsystem(std::move(labels));
}

inline nlohmann::json amplitudes_json(const Vector& amps) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        arr.push_back(nlohmann::json::array({amps(i).real(), amps(i).imag()}));
    }
    return arr;
}

inline Vector amplitudes_from_json(const nlohmann::json& arr) {
    Vector amps(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        amps(static_cast<Eigen::Index>(i)) =
            Complex(arr[i][0].get<double>(), arr[i][1].get<double>());
    }
    return amps;
}

}  // namespace detail

inline nlohmann::json report_to_json(const Report& report) {
    nlohmann::json doc;
    doc["digest"] = report.digest;
    doc["n"] = report.n;
    doc["label"] = report.label.has_value() ? nlohmann::json(*report.label) : nlohmann::json();
    doc["tolerance"] = report.tolerance;
    doc["criterion_oracle_agree"] = report.criterion_oracle_agree;
    doc["any_marginal"] = report.any_marginal;

    nlohmann::json blocks = nlohmann::json::array();
    for (const BlockDiagnostic& diag : report.block_verdicts) {
        nlohmann::json b;
        b["labels"] = detail::labels_json(diag.labels);
        b["norm_sq"] = diag.criterion.norm_sq;
        b["max_norm_sq"] = diag.criterion.max_norm_sq;
        b["residual"] = diag.criterion.residual;
        b["separable"] = diag.criterion.separable;
        b["marginal"] = diag.criterion.marginal;
        if (diag.oracle.has_value()) {
            nlohmann::json o;
            o["singular_values"] = nlohmann::json::array();
            for (Eigen::Index i = 0; i < diag.oracle->singular_values.size(); ++i) {
                o["singular_values"].push_back(diag.oracle->singular_values(i));
            }
            o["separable"] = diag.oracle->separable;
            b["oracle"] = o;
        } else {
            b["oracle"] = nullptr;
        }
        blocks.push_back(std::move(b));
    }
    doc["blocks"] = std::move(blocks);

    nlohmann::json factors = nlohmann::json::array();
    for (const FactorBlock& block : report.tree.blocks) {
        nlohmann::json f;
        f["labels"] = detail::labels_json(block.labels);
        f["entangled"] = block.entangled;
        f["amplitudes"] = detail::amplitudes_json(block.factor.amplitudes);
        factors.push_back(std::move(f));
    }
    doc["factorization"] = std::move(factors);

    if (report.support_class.has_value()) {
        nlohmann::json s;
        s["letters"] = detail::support_letters(report.support_class->mask);
        s["class"] = class_label_text(report.support_class->label);
        doc["support"] = std::move(s);
    } else {
        doc["support"] = nullptr;
    }
    return doc;
}

inline Report report_from_json(const nlohmann::json& doc) {
    Report report;
    report.digest = doc.at("digest").get<std::string>();
    report.n = doc.at("n").get<int>();
    if (!doc.at("label").is_null()) {
        report.label = doc.at("label").get<std::string>();
    }
    report.tolerance = doc.at("tolerance").get<double>();
    report.criterion_oracle_agree = doc.at("criterion_oracle_agree").get<bool>();
    report.any_marginal = doc.at("any_marginal").get<bool>();

    for (const auto& b : doc.at("blocks")) {
        BlockDiagnostic diag{detail::labels_from_json(b.at("labels")), CriterionVerdict{
            detail::labels_from_json(b.at("labels")), b.at("norm_sq").get<double>(),
            b.at("max_norm_sq").get<double>(), b.at("residual").get<double>(),
            b.at("separable").get<bool>(), b.at("marginal").get<bool>()}, std::nullopt};
        if (!b.at("oracle").is_null()) {
            const auto& o = b.at("oracle");
            OracleVerdict verdict{
                diag.labels,
                Eigen::VectorXd(static_cast<Eigen::Index>(o.at("singular_values").size())),
                o.at("separable").get<bool>(), std::nullopt, std::nullopt};
            for (std::size_t i = 0; i < o.at("singular_values").size(); ++i) {
                verdict.singular_values(static_cast<Eigen::Index>(i)) =
                    o.at("singular_values")[i].get<double>();
            }
            diag.oracle = std::move(verdict);
        }
        report.block_verdicts.push_back(std::move(diag));
    }

    for (const auto& f : doc.at("factorization")) {
        Subsystem labels = detail::labels_from_json(f.at("labels"));
        const int m = labels.size();
        report.tree.blocks.push_back(FactorBlock{
            std::move(labels), f.at("entangled").get<bool>(),
            PureState{m, detail::amplitudes_from_json(f.at("amplitudes"))}});
    }
    report.tree.criterion_oracle_agree = report.criterion_oracle_agree;

    if (!doc.at("support").is_null()) {
        report.support_class = SupportClass{
            detail::mask_from_letters(doc.at("support").at("letters").get<std::string>()),
            class_label_from_text(doc.at("support").at("class").get<std::string>())};
    }
    return report;
}

/// One-line description of the factorization, e.g.
/// "{A1}, {A2,A3} (entangled)".
inline std::string factorization_text(const FactorizationTree& tree) {
    std::string out;
    for (size_t i = 0; i < tree.blocks.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += tree.blocks[i].labels.to_string();
        if (tree.blocks[i].entangled) {
            out += " (entangled)";
        }
    }
    return out;
}

inline std::string report_to_text(const Report& report) {
    std::string out;
    out += "n: " + std::to_string(report.n) + "\n";
    if (report.label.has_value()) {
        out += "label: " + *report.label + "\n";
    }
    out += "digest: " + report.digest + "\n";
    char tol_buf[32];
    std::snprintf(tol_buf, sizeof tol_buf, "%g", report.tolerance);
    out += "tolerance: " + std::string(tol_buf) + "\n";
    out += "block verdicts (size <= n/2):\n";
    for (const BlockDiagnostic& diag : report.block_verdicts) {
        out += "  " + diag.labels.to_string() + "  xi^2 = " + format_double(diag.criterion.norm_sq) +
               "  max = " + format_double(diag.criterion.max_norm_sq) +
               "  residual = " + format_double(diag.criterion.residual) + "  " +
               (diag.criterion.separable ? "separable" : "not separable");
        if (diag.criterion.marginal) {
            out += " (marginal)";
        }
        if (diag.oracle.has_value()) {
            out += diag.oracle->separable == diag.criterion.separable ? "  [oracle agrees]"
                                                                      : "  [ORACLE DISAGREES]";
        }
        out += "\n";
    }

    const bool all_single = report.tree.blocks.size() == static_cast<size_t>(report.n);
    const bool one_block = report.tree.blocks.size() == 1 && report.n > 1;
    out += "summary: ";
    if (all_single) {
        out += "fully separable, blocks: ";
    } else if (one_block) {
        out += "fully entangled, blocks: ";
    } else {
        out += "partially separable, blocks: ";
    }
    out += factorization_text(report.tree) + "\n";

    if (report.support_class.has_value()) {
        out += "support: " + detail::support_letters(report.support_class->mask) + " -> " +
               class_label_text(report.support_class->label) + "\n";
    }
    out += std::string("criterion/oracle agreement: ") +
           (report.criterion_oracle_agree ? "yes" : "NO (verdicts disagree)") + "\n";
    if (report.any_marginal) {
        out += "warning: at least one block residual is within the marginal window\n";
    }
    return out;
}

}  // namespace sepscan
