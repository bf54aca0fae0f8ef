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

#include "sepscan/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDisagreement = 2;

int max_qubits_cap() {
    const char* env = std::getenv("SEPSCAN_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return 12;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1 || value > sepscan::kMaxQubits) {
        throw std::invalid_argument("SEPSCAN_MAX_QUBITS must be an integer in [1, " +
                                    std::to_string(sepscan::kMaxQubits) + "]");
    }
    return static_cast<int>(value);
}

sepscan::StateFile load_capped(const std::string& path) {
    sepscan::StateFile file = sepscan::load_state_file(path);
    const int cap = max_qubits_cap();
    if (file.n > cap) {
        throw std::invalid_argument("state has " + std::to_string(file.n) +
                                    " qubits, above the cap of " + std::to_string(cap) +
                                    " (raise SEPSCAN_MAX_QUBITS if intended)");
    }
    return file;
}

sepscan::Subsystem parse_block_spec(const std::string& spec, int n) {
    std::vector<int> labels;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            size_t used = 0;
            const int label = std::stoi(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            labels.push_back(label);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad block spec token '" + token +
                                        "'; expected comma-separated 1-based labels like 1,3");
        }
    }
    if (labels.empty()) {
        throw std::invalid_argument("block spec is empty");
    }
    sepscan::Subsystem block(std::move(labels));
    if (block.labels().front().index < 1 || block.max_label() > n) {
        throw std::invalid_argument("block labels must lie in [1, " + std::to_string(n) + "]");
    }
    return block;
}

std::string pauli_multi_index_text(std::uint64_t flat, int m) {
    std::string out(static_cast<size_t>(m), '0');
    for (int j = 0; j < m; ++j) {
        out[static_cast<size_t>(j)] =
            static_cast<char>('0' + ((flat >> (2 * (m - 1 - j))) & 3u));
    }
    return out;
}

int run_classify(const std::string& path, bool json, double tolerance) {
    const sepscan::StateFile file = load_capped(path);
    if (file.n > sepscan::kMaxClassifyQubits) {
        throw std::invalid_argument("classification is capped at " +
                                    std::to_string(sepscan::kMaxClassifyQubits) + " qubits");
    }
    sepscan::ReportOptions opts;
    opts.tolerance = tolerance;
    const sepscan::Report report = sepscan::build_report(file.state, file.label, opts);
    if (json) {
        std::cout << sepscan::report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "input: " << path << "\n" << sepscan::report_to_text(report);
    }
    return report.criterion_oracle_agree ? kExitOk : kExitDisagreement;
}

int run_table3(bool json, const std::string& golden_path, int samples, std::uint64_t seed) {
    const sepscan::Table3 table = sepscan::generate_table_3q(samples, seed);
    if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const sepscan::SupportRow& row : table.rows) {
            nlohmann::json r;
            r["support"] = sepscan::detail::support_letters(row.mask);
            r["class"] = sepscan::class_label_text(row.generic);
            nlohmann::json branches = nlohmann::json::array();
            for (const sepscan::ConditionalBranch& branch : row.branches) {
                nlohmann::json b;
                b["class"] = sepscan::class_label_text(branch.label);
                b["conditions"] = nlohmann::json::array();
                for (const sepscan::MinorCondition& cond : branch.conditions) {
                    b["conditions"].push_back(cond.text);
                }
                branches.push_back(std::move(b));
            }
            r["branches"] = std::move(branches);
            rows.push_back(std::move(r));
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "# 3-qubit pure-state classification by support (" << table.rows.size()
                  << " rows)\n";
        for (const sepscan::SupportRow& row : table.rows) {
            std::cout << sepscan::support_row_text(row) << "\n";
        }
    }
    if (!golden_path.empty()) {
        std::ifstream in(golden_path);
        if (!in) {
            throw std::invalid_argument("cannot open golden table '" + golden_path + "'");
        }
        const sepscan::GoldenTable golden = sepscan::parse_golden_table(in);
        const std::vector<std::string> mismatches = sepscan::compare_with_golden(table, golden);
        std::cout << "golden comparison: " << mismatches.size() << " mismatches\n";
        for (const std::string& m : mismatches) {
            std::cout << "  " << m << "\n";
        }
        if (!mismatches.empty()) {
            return kExitDisagreement;
        }
    }
    return kExitOk;
}

int run_coherent(const std::string& path, const std::string& block_spec, bool json,
                 double tolerance) {
    const sepscan::StateFile file = load_capped(path);
    const sepscan::Subsystem block = parse_block_spec(block_spec, file.n);
    const sepscan::DensityMatrix rho = sepscan::reduced_density(file.state, block);
    const sepscan::CoherentVector xi = sepscan::coherent_vector(rho);
    const double norm_sq = sepscan::coherent_norm_sq(rho);
    const double max_norm_sq = sepscan::max_coherent_norm_sq(block.size());
    const double residual = max_norm_sq - norm_sq;
    const int m = block.size();

    if (json) {
        nlohmann::json doc;
        doc["input"] = path;
        doc["block"] = sepscan::detail::labels_json(block);
        doc["m"] = m;
        doc["norm_sq"] = norm_sq;
        doc["max_norm_sq"] = max_norm_sq;
        doc["residual"] = residual;
        doc["components"] = nlohmann::json::array();
        for (Eigen::Index i = 0; i < xi.components.size(); ++i) {
            doc["components"].push_back(nlohmann::json::array(
                {pauli_multi_index_text(static_cast<std::uint64_t>(i + 1), m), xi.components(i)}));
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "block: " << block.to_string() << "  (m = " << m << ")\n";
    std::cout << "xi^2      = " << sepscan::format_double(norm_sq) << "\n";
    std::cout << "max xi^2  = " << sepscan::format_double(max_norm_sq) << "\n";
    std::cout << "residual  = " << sepscan::format_double(residual) << "\n";
    const bool only_nonzero = m > 3;
    std::cout << "components" << (only_nonzero ? " (|xi| > tolerance only)" : "") << ":\n";
    for (Eigen::Index i = 0; i < xi.components.size(); ++i) {
        if (only_nonzero && std::abs(xi.components(i)) <= tolerance) {
            continue;
        }
        std::cout << "  " << pauli_multi_index_text(static_cast<std::uint64_t>(i + 1), m) << "  "
                  << sepscan::format_double(xi.components(i)) << "\n";
    }
    return kExitOk;
}

sepscan::PureState random_block_product(int n, std::mt19937_64& rng) {
    // Random partition with at least two blocks, labels shuffled, then the
    // per-block random states are tensored back in original label order.
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<size_t>(i)] = i + 1;
    }
    for (int i = n - 1; i > 0; --i) {
        std::swap(labels[static_cast<size_t>(i)],
                  labels[static_cast<size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
    }
    std::vector<std::vector<int>> groups;
    size_t at = 0;
    while (at < labels.size()) {
        size_t size = 1 + rng() % 3;
        if (groups.empty() && size >= labels.size()) {
            size = labels.size() - 1;  // force a second block
        }
        size = std::min(size, labels.size() - at);
        groups.emplace_back(labels.begin() + static_cast<long>(at),
                            labels.begin() + static_cast<long>(at + size));
        at += size;
    }

    sepscan::Vector amps = sepscan::Vector::Ones(Eigen::Index(1) << n);
    for (const std::vector<int>& group : groups) {
        const int m = static_cast<int>(group.size());
        sepscan::Vector block(Eigen::Index(1) << m);
        for (Eigen::Index i = 0; i < block.size(); ++i) {
            block(i) = sepscan::detail::gaussian_complex(rng);
        }
        block.normalize();
        std::vector<int> sorted = group;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << n); ++idx) {
            std::uint64_t sub = 0;
            for (int j = 0; j < m; ++j) {
                sub = (sub << 1) |
                      static_cast<std::uint64_t>(sepscan::basis_bit(idx, sorted[static_cast<size_t>(j)], n));
            }
            amps(static_cast<Eigen::Index>(idx)) *= block(static_cast<Eigen::Index>(sub));
        }
    }
    return sepscan::PureState{n, std::move(amps)};
}

int run_fuzz(int n, int trials, std::uint64_t seed, bool json, double tolerance) {
    if (n < 2 || n > 8) {
        throw std::invalid_argument("fuzz needs 2 <= n <= 8 (n >= 2 for nontrivial blocks)");
    }
    if (trials < 1) {
        throw std::invalid_argument("fuzz needs at least one trial");
    }
    std::mt19937_64 rng(seed);
    int agreeing_states = 0;
    long blocks_checked = 0;
    double max_separable_residual = 0.0;
    std::vector<std::string> disagreements;
    std::vector<std::string> spot_lines;  // n == 2 only

    for (int t = 0; t < trials; ++t) {
        sepscan::PureState state{};
        if (t % 2 == 1) {
            state = random_block_product(n, rng);
        } else {
            sepscan::Vector amps(Eigen::Index(1) << n);
            for (Eigen::Index i = 0; i < amps.size(); ++i) {
                amps(i) = sepscan::detail::gaussian_complex(rng);
            }
            amps.normalize();
            state = sepscan::PureState{n, std::move(amps)};
        }

        bool state_agrees = true;
        const std::uint64_t full = (std::uint64_t(1) << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::vector<int> labels;
            for (int j = 1; j <= n; ++j) {
                if (mask & (std::uint64_t(1) << (j - 1))) {
                    labels.push_back(j);
                }
            }
            const sepscan::Subsystem block(std::move(labels));
            const auto criterion = sepscan::block_separable(state, block, tolerance);
            const auto oracle = sepscan::schmidt_oracle(state, block, tolerance);
            ++blocks_checked;
            if (criterion.separable || oracle.separable) {
                max_separable_residual =
                    std::max(max_separable_residual, std::abs(criterion.residual));
            }
            if (criterion.separable != oracle.separable) {
                state_agrees = false;
                disagreements.push_back("trial " + std::to_string(t) + " block " +
                                        block.to_string() + ": criterion " +
                                        (criterion.separable ? "separable" : "not separable") +
                                        ", oracle " +
                                        (oracle.separable ? "separable" : "not separable"));
            }
        }
        agreeing_states += state_agrees ? 1 : 0;

        if (n == 2) {
            const sepscan::Vector& a = state.amplitudes;
            const double minor = std::abs(a(0) * a(3) - a(1) * a(2));
            const double xi_sq = sepscan::polarized_vector(state, sepscan::QubitLabel(1)).norm_sq();
            const double closed_form = 1.0 - 4.0 * minor * minor;
            spot_lines.push_back("  trial " + std::to_string(t) + "  |ad-bc| = " +
                                 sepscan::format_double(minor) + "  xi^2 = " +
                                 sepscan::format_double(xi_sq) + "  |xi^2-(1-4|ad-bc|^2)| = " +
                                 sepscan::format_double(std::abs(xi_sq - closed_form)));
        }
    }

    if (json) {
        nlohmann::json doc;
        doc["n"] = n;
        doc["trials"] = trials;
        doc["seed"] = seed;
        doc["agreeing_states"] = agreeing_states;
        doc["blocks_checked"] = blocks_checked;
        doc["max_separable_residual"] = max_separable_residual;
        doc["disagreements"] = disagreements;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n: " << n << "  trials: " << trials << "  seed: " << seed << "\n";
        std::cout << "agreement: " << agreeing_states << "/" << trials << " states ("
                  << blocks_checked << " block checks)\n";
        std::cout << "max separable residual: " << sepscan::format_double(max_separable_residual)
                  << "\n";
        for (const std::string& line : spot_lines) {
            std::cout << line << "\n";
        }
        for (const std::string& line : disagreements) {
            std::cout << "DISAGREEMENT: " << line << "\n";
        }
    }
    return disagreements.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sepscan: partial-separability scanner for pure multi-qubit states"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --json/--tolerance before or after the subcommand

    double tolerance = sepscan::kDefaultTolerance;
    bool json = false;
    app.add_option("--tolerance", tolerance, "absolute tolerance for separability verdicts")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", json, "machine-readable JSON output");

    auto* classify = app.add_subcommand("classify", "classify a state file");
    std::string classify_path;
    classify->add_option("input", classify_path, "state file (JSON)")->required();

    auto* table3 = app.add_subcommand("table3", "emit the full 3-qubit support classification");
    std::string golden_path;
    int samples = 100;
    std::uint64_t table_seed = 20260810;
    table3->add_option("--golden", golden_path, "compare against a golden table file");
    table3->add_option("--samples", samples, "validation samples per support")
        ->check(CLI::NonNegativeNumber);
    table3->add_option("--seed", table_seed, "seed for validation sampling");

    auto* coherent = app.add_subcommand("coherent", "coherent-vector diagnostics for one block");
    std::string coherent_path;
    std::string block_spec;
    coherent->add_option("input", coherent_path, "state file (JSON)")->required();
    coherent->add_option("--block", block_spec, "comma-separated 1-based labels, e.g. 1,3")
        ->required();

    auto* fuzz = app.add_subcommand("fuzz", "criterion-vs-oracle agreement on random states");
    int fuzz_n = 4;
    int fuzz_trials = 100;
    std::uint64_t fuzz_seed = 0;
    fuzz->add_option("--n", fuzz_n, "qubit count (2..8)")->required();
    fuzz->add_option("--trials", fuzz_trials, "number of states")->required();
    fuzz->add_option("--seed", fuzz_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (classify->parsed()) {
            return run_classify(classify_path, json, tolerance);
        }
        if (table3->parsed()) {
            return run_table3(json, golden_path, samples, table_seed);
        }
        if (coherent->parsed()) {
            return run_coherent(coherent_path, block_spec, json, tolerance);
        }
        if (fuzz->parsed()) {
            return run_fuzz(fuzz_n, fuzz_trials, fuzz_seed, json, tolerance);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitDisagreement;
    }
    return kExitInputError;
}
