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

#include "sepscan/sepcrit.hpp"

#include <array>
#include <bit>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sepscan {

/// Cap for the finest-factorization search.
inline constexpr int kMaxClassifyQubits = 12;

// ---------------------------------------------------------------------------
// Finest factorization
// ---------------------------------------------------------------------------

/// One factor of the finest factorization. Blocks of size >= 2 are internally
/// fully entangled: the search below only emits them after every proper
/// sub-block failed the separability criterion.
struct FactorBlock {
    Subsystem labels;
    bool entangled = false;
    PureState factor;  // state on the block, labels ascending
};

/// Criterion verdict for one candidate block tested during the search, with
/// the oracle's verdict whenever the oracle was consulted.
struct BlockDiagnostic {
    Subsystem labels;  // original labels
    CriterionVerdict criterion;
    std::optional<OracleVerdict> oracle;
};

struct FactorizationTree {
    std::vector<FactorBlock> blocks;  // ordered by smallest label
    std::vector<BlockDiagnostic> diagnostics;
    bool criterion_oracle_agree = true;
};

namespace detail {

/// Lexicographic enumeration of s-element position subsets of {1..k}.
inline bool next_combination(std::vector<int>& comb, int k) {
    const int s = static_cast<int>(comb.size());
    int i = s - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == k - (s - 1 - i)) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++comb[static_cast<size_t>(i)];
    for (int j = i + 1; j < s; ++j) {
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    return true;
}

inline void factorize_recursive(const PureState& cur, const std::vector<int>& labels,
                                double tol, FactorizationTree& tree) {
    const int k = cur.n;
    if (k == 1) {
        tree.blocks.push_back(FactorBlock{Subsystem(labels), false, cur});
        return;
    }
    // Candidate blocks by ascending size, lexicographic position order; one-
    // part splits are found before any two-part block could swallow them.
    for (int size = 1; size <= k / 2; ++size) {
        std::vector<int> comb(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) {
            comb[static_cast<size_t>(i)] = i + 1;
        }
        do {
            const Subsystem positions(comb);
            std::vector<int> block_labels;
            std::vector<int> rest_labels;
            for (int p = 1; p <= k; ++p) {
                (positions.contains(p) ? block_labels : rest_labels)
                    .push_back(labels[static_cast<size_t>(p - 1)]);
            }

            CriterionVerdict verdict = block_separable(cur, positions, tol);
            tree.diagnostics.push_back(
                BlockDiagnostic{Subsystem(block_labels), verdict, std::nullopt});
            if (!verdict.separable) {
                continue;
            }

            OracleVerdict oracle = schmidt_oracle(cur, positions, tol);
            tree.diagnostics.back().oracle = oracle;
            if (!oracle.separable) {
                // Dual routes disagree; flag it and keep searching rather
                // than split without a factorization in hand.
                tree.criterion_oracle_agree = false;
                continue;
            }
            const PureState block_factor = *oracle.block_factor;
            const PureState rest_factor = *oracle.complement_factor;
            factorize_recursive(rest_factor, rest_labels, tol, tree);
            factorize_recursive(block_factor, block_labels, tol, tree);
            return;
        } while (next_combination(comb, k));
    }
    tree.blocks.push_back(FactorBlock{Subsystem(labels), true, cur});
}

}  // namespace detail

/// Splits a pure state into the unique finest tensor factorization over
/// entangled blocks. Every separable split confirmed by the criterion is
/// factored through the Schmidt oracle and both halves are recursed on.
inline FactorizationTree finest_factorization(const PureState& state,
                                              double tol = kDefaultTolerance) {
    if (state.n > kMaxClassifyQubits) {
        throw std::invalid_argument("finest_factorization: state exceeds the cap of " +
                                    std::to_string(kMaxClassifyQubits) + " qubits");
    }
    FactorizationTree tree;
    std::vector<int> labels(static_cast<size_t>(state.n));
    for (int i = 0; i < state.n; ++i) {
        labels[static_cast<size_t>(i)] = i + 1;
    }
    detail::factorize_recursive(state, labels, tol, tree);
    std::sort(tree.blocks.begin(), tree.blocks.end(), [](const FactorBlock& a, const FactorBlock& b) {
        return a.labels.label_at(0) < b.labels.label_at(0);
    });
    return tree;
}

// ---------------------------------------------------------------------------
// 3-qubit support classification
// ---------------------------------------------------------------------------

/// Class of a 3-qubit pure state: fully separable, exactly one part split off
/// (the remaining pair entangled), or fully entangled.
enum class ClassLabel {
    kFullySeparable,
    kAPart,
    kBPart,
    kCPart,
    kFullyEntangled,
};

inline std::string class_label_text(ClassLabel label) {
    switch (label) {
        case ClassLabel::kFullySeparable: return "fully-separable";
        case ClassLabel::kAPart: return "A-part";
        case ClassLabel::kBPart: return "B-part";
        case ClassLabel::kCPart: return "C-part";
        case ClassLabel::kFullyEntangled: return "entangled";
    }
    throw std::logic_error("unreachable");
}

inline ClassLabel class_label_from_text(const std::string& text) {
    if (text == "fully-separable") return ClassLabel::kFullySeparable;
    if (text == "A-part") return ClassLabel::kAPart;
    if (text == "B-part") return ClassLabel::kBPart;
    if (text == "C-part") return ClassLabel::kCPart;
    if (text == "entangled") return ClassLabel::kFullyEntangled;
    throw std::invalid_argument("unknown class label '" + text + "'");
}

inline ClassLabel part_class_label(int part) {
    switch (part) {
        case 1: return ClassLabel::kAPart;
        case 2: return ClassLabel::kBPart;
        case 3: return ClassLabel::kCPart;
        default: throw std::invalid_argument("part must be 1, 2 or 3");
    }
}

/// Equality between two coefficient products, |x_i x_j - x_k x_l| = 0, the
/// 2x2 minor of one part's reshaped coefficient matrix.
struct MinorCondition {
    std::array<int, 2> lhs{};  // coefficient indices 0..7
    std::array<int, 2> rhs{};
    std::string text;  // canonical form, e.g. "ad=bc"

    double magnitude(const Vector& coeffs) const {
        return std::abs(coeffs(lhs[0]) * coeffs(lhs[1]) - coeffs(rhs[0]) * coeffs(rhs[1]));
    }
    bool holds(const Vector& coeffs, double tol) const { return magnitude(coeffs) < tol; }
};

/// Alternative class taken when all listed conditions hold.
struct ConditionalBranch {
    ClassLabel label = ClassLabel::kFullyEntangled;
    std::vector<MinorCondition> conditions;  // sorted by text
};

/// Classification of every state whose nonzero coefficients sit exactly on
/// one support: the class for generic coefficients plus the conditional
/// branches reached on measure-zero coefficient subvarieties.
struct SupportRow {
    int mask = 0;  // bit k set = coefficient k (letter 'a'+k) nonzero
    ClassLabel generic = ClassLabel::kFullyEntangled;
    std::vector<ConditionalBranch> branches;  // fully-separable first, then A, B, C
};

/// Concrete class of one state (or one generic support).
struct SupportClass {
    int mask = 0;
    ClassLabel label = ClassLabel::kFullyEntangled;
};

namespace detail {

/// Row (the part's own bit) and column (remaining bits, ascending label
/// order) of coefficient index idx in part `part`'s 2x4 reshaped matrix.
inline int part_row(int idx, int part) { return basis_bit(static_cast<std::uint64_t>(idx), part, 3); }

inline int part_col(int idx, int part) {
    const int b1 = (idx >> 2) & 1;
    const int b2 = (idx >> 1) & 1;
    const int b3 = idx & 1;
    switch (part) {
        case 1: return (b2 << 1) | b3;
        case 2: return (b1 << 1) | b3;
        case 3: return (b1 << 1) | b2;
        default: throw std::invalid_argument("part must be 1, 2 or 3");
    }
}

inline int index_from_row_col(int part, int row, int col) {
    const int hi = (col >> 1) & 1;
    const int lo = col & 1;
    switch (part) {
        case 1: return (row << 2) | (hi << 1) | lo;
        case 2: return (hi << 2) | (row << 1) | lo;
        case 3: return (hi << 2) | (lo << 1) | row;
        default: throw std::invalid_argument("part must be 1, 2 or 3");
    }
}

inline MinorCondition make_minor_condition(int part, int c1, int c2) {
    MinorCondition cond;
    cond.lhs = {index_from_row_col(part, 0, c1), index_from_row_col(part, 1, c2)};
    cond.rhs = {index_from_row_col(part, 0, c2), index_from_row_col(part, 1, c1)};
    auto side_text = [](std::array<int, 2>& side) {
        if (side[0] > side[1]) {
            std::swap(side[0], side[1]);
        }
        return std::string{static_cast<char>('a' + side[0]), static_cast<char>('a' + side[1])};
    };
    std::string l = side_text(cond.lhs);
    std::string r = side_text(cond.rhs);
    if (r < l) {
        std::swap(l, r);
        std::swap(cond.lhs, cond.rhs);
    }
    cond.text = l + "=" + r;
    return cond;
}

struct PartPattern {
    bool generic = false;      // support confined to one row or one column
    bool conditional = false;  // support is a full 2 x |cols| rectangle
    std::vector<int> cols;     // ascending, meaningful when conditional
};

inline PartPattern analyze_part(int mask, int part) {
    PartPattern pattern;
    bool row_present[2] = {false, false};
    bool col_present[4] = {false, false, false, false};
    int count = 0;
    for (int idx = 0; idx < 8; ++idx) {
        if (mask & (1 << idx)) {
            row_present[part_row(idx, part)] = true;
            col_present[part_col(idx, part)] = true;
            ++count;
        }
    }
    int rows = row_present[0] + row_present[1];
    int cols = 0;
    for (bool p : col_present) {
        cols += p;
    }
    if (rows == 1 || cols == 1) {
        pattern.generic = true;
        return pattern;
    }
    if (count == rows * cols) {
        pattern.conditional = true;
        for (int c = 0; c < 4; ++c) {
            if (col_present[c]) {
                pattern.cols.push_back(c);
            }
        }
    }
    return pattern;
}

/// Minors anchored on the first present column; on an all-present support
/// they generate the remaining minors of the rectangle.
inline std::vector<MinorCondition> anchored_conditions(int part, const std::vector<int>& cols) {
    std::vector<MinorCondition> conds;
    for (size_t j = 1; j < cols.size(); ++j) {
        conds.push_back(make_minor_condition(part, cols[0], cols[static_cast<size_t>(j)]));
    }
    return conds;
}

inline void sort_conditions(std::vector<MinorCondition>& conds) {
    std::sort(conds.begin(), conds.end(),
              [](const MinorCondition& a, const MinorCondition& b) { return a.text < b.text; });
    conds.erase(std::unique(conds.begin(), conds.end(),
                            [](const MinorCondition& a, const MinorCondition& b) {
                                return a.text == b.text;
                            }),
                conds.end());
}

}  // namespace detail

/// All six minor conditions of one part's reshaped coefficient matrix; the
/// part's polarized vector has unit norm iff all six vanish.
inline std::vector<MinorCondition> part_minor_conditions(int part) {
    std::vector<MinorCondition> conds;
    for (int c1 = 0; c1 < 4; ++c1) {
        for (int c2 = c1 + 1; c2 < 4; ++c2) {
            conds.push_back(detail::make_minor_condition(part, c1, c2));
        }
    }
    return conds;
}

/// Structural classification of one support: which class generic coefficients
/// land in, and which conditional branches exist.
inline SupportRow support_row_3q(int mask) {
    if (mask < 1 || mask > 255) {
        throw std::invalid_argument("support mask must be in [1, 255]");
    }
    SupportRow row;
    row.mask = mask;

    std::array<detail::PartPattern, 3> patterns;
    int generic_count = 0;
    for (int part = 1; part <= 3; ++part) {
        patterns[static_cast<size_t>(part - 1)] = detail::analyze_part(mask, part);
        generic_count += patterns[static_cast<size_t>(part - 1)].generic;
    }

    if (generic_count == 3) {
        row.generic = ClassLabel::kFullySeparable;
        return row;
    }

    if (generic_count == 1) {
        int generic_part = 0;
        std::vector<MinorCondition> fully_conditions;
        bool all_others_conditional = true;
        for (int part = 1; part <= 3; ++part) {
            const auto& p = patterns[static_cast<size_t>(part - 1)];
            if (p.generic) {
                generic_part = part;
            } else if (p.conditional) {
                auto conds = detail::anchored_conditions(part, p.cols);
                fully_conditions.insert(fully_conditions.end(), conds.begin(), conds.end());
            } else {
                all_others_conditional = false;
            }
        }
        row.generic = part_class_label(generic_part);
        if (all_others_conditional) {
            detail::sort_conditions(fully_conditions);
            row.branches.push_back(ConditionalBranch{ClassLabel::kFullySeparable,
                                                     std::move(fully_conditions)});
        }
        return row;
    }

    // No generic part: entangled for generic coefficients.
    row.generic = ClassLabel::kFullyEntangled;
    std::vector<ConditionalBranch> part_branches;
    std::vector<MinorCondition> fully_conditions;
    for (int part = 1; part <= 3; ++part) {
        const auto& p = patterns[static_cast<size_t>(part - 1)];
        if (!p.conditional) {
            continue;
        }
        auto conds = detail::anchored_conditions(part, p.cols);
        fully_conditions.insert(fully_conditions.end(), conds.begin(), conds.end());
        detail::sort_conditions(conds);
        part_branches.push_back(ConditionalBranch{part_class_label(part), std::move(conds)});
    }
    if (part_branches.size() == 3) {
        detail::sort_conditions(fully_conditions);
        row.branches.push_back(ConditionalBranch{ClassLabel::kFullySeparable,
                                                 std::move(fully_conditions)});
    }
    row.branches.insert(row.branches.end(), part_branches.begin(), part_branches.end());
    return row;
}

/// Class of the support. Unconditional supports classify from the mask alone;
/// conditional supports need the coefficients so the branch equalities can be
/// evaluated.
inline SupportClass classify_support_3q(int mask, const std::optional<Vector>& coefficients = {},
                                        double tol = kDefaultTolerance) {
    const SupportRow row = support_row_3q(mask);
    if (!coefficients.has_value()) {
        if (!row.branches.empty()) {
            throw std::invalid_argument(
                "support has conditional branches; coefficients are required");
        }
        return SupportClass{mask, row.generic};
    }
    Vector coeffs = *coefficients;
    if (coeffs.size() != 8) {
        throw std::invalid_argument("expected 8 coefficients");
    }
    const double norm = coeffs.norm();
    if (norm < 1e-300) {
        throw std::invalid_argument("zero coefficient vector");
    }
    coeffs /= norm;
    for (int idx = 0; idx < 8; ++idx) {
        const bool on_support = (mask & (1 << idx)) != 0;
        const bool nonzero = std::abs(coeffs(idx)) > tol;
        if (on_support != nonzero) {
            throw std::invalid_argument("coefficients do not match the support pattern");
        }
    }
    for (const ConditionalBranch& branch : row.branches) {
        bool all_hold = true;
        for (const MinorCondition& cond : branch.conditions) {
            all_hold = all_hold && cond.holds(coeffs, tol);
        }
        if (all_hold) {
            return SupportClass{mask, branch.label};
        }
    }
    return SupportClass{mask, row.generic};
}

/// Class label implied by a factorization of a 3-qubit state.
inline ClassLabel tree_class_label_3q(const FactorizationTree& tree) {
    if (tree.blocks.size() == 3) {
        return ClassLabel::kFullySeparable;
    }
    if (tree.blocks.size() == 1) {
        return ClassLabel::kFullyEntangled;
    }
    for (const FactorBlock& block : tree.blocks) {
        if (block.labels.size() == 1) {
            return part_class_label(block.labels.label_at(0));
        }
    }
    throw std::logic_error("3-qubit factorization without a singleton block");
}

// ---------------------------------------------------------------------------
// Full 255-row table
// ---------------------------------------------------------------------------

struct Table3 {
    std::vector<SupportRow> rows;  // masks 1..255 ascending
};

namespace detail {

inline std::string support_letters(int mask) {
    std::string out;
    for (int idx = 0; idx < 8; ++idx) {
        if (mask & (1 << idx)) {
            out += static_cast<char>('a' + idx);
        }
    }
    return out;
}

inline int mask_from_letters(const std::string& letters) {
    int mask = 0;
    for (char ch : letters) {
        if (ch < 'a' || ch > 'h') {
            throw std::invalid_argument("support letters must be within a..h, got '" +
                                        std::string(1, ch) + "'");
        }
        mask |= 1 << (ch - 'a');
    }
    return mask;
}

/// Random coefficient on the unit-ish annulus: magnitudes are kept away from
/// zero so a sampled support stays generic.
inline Complex solid_random_coefficient(std::mt19937_64& rng) {
    for (;;) {
        const Complex z = gaussian_complex(rng);
        if (std::abs(z) >= 0.3) {
            return z;
        }
    }
}

inline PureState random_state_on_support(int mask, std::mt19937_64& rng) {
    Vector coeffs = Vector::Zero(8);
    for (int idx = 0; idx < 8; ++idx) {
        if (mask & (1 << idx)) {
            coeffs(idx) = solid_random_coefficient(rng);
        }
    }
    coeffs.normalize();
    return PureState{3, std::move(coeffs)};
}

}  // namespace detail

/// Builds the complete 255-support classification. Each support's generic
/// class is cross-validated by sampling random coefficients on the support
/// and running them through the numeric factorization pipeline; a mismatch
/// throws.
inline Table3 generate_table_3q(int samples_per_support = 100, std::uint64_t seed = 20260810) {
    Table3 table;
    table.rows.reserve(255);
    std::mt19937_64 rng(seed);
    for (int mask = 1; mask <= 255; ++mask) {
        SupportRow row = support_row_3q(mask);
        for (int s = 0; s < samples_per_support; ++s) {
            const PureState sample = detail::random_state_on_support(mask, rng);
            const ClassLabel numeric = tree_class_label_3q(finest_factorization(sample));
            if (numeric != row.generic) {
                throw std::runtime_error("table validation failed on support " +
                                         detail::support_letters(mask) + ": structural class " +
                                         class_label_text(row.generic) + " vs sampled " +
                                         class_label_text(numeric));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// Canonical one-line rendering of a support row, shared by the table writer
/// and the golden-file comparison.
inline std::string support_row_text(const SupportRow& row) {
    std::string out = detail::support_letters(row.mask) + "  " + class_label_text(row.generic);
    for (const ConditionalBranch& branch : row.branches) {
        out += "  " + class_label_text(branch.label) + ":";
        for (size_t i = 0; i < branch.conditions.size(); ++i) {
            if (i > 0) {
                out += '&';
            }
            out += branch.conditions[static_cast<size_t>(i)].text;
        }
    }
    return out;
}

/// Expected classification parsed from a golden table file. The file is
/// aggregated: `group <size> <supports> <class-spec>` lines name explicit
/// supports, `default <size> <class-spec>` covers every other support of
/// that size.
struct GoldenTable {
    std::map<int, std::string> expected;  // mask -> canonical row text
};

inline GoldenTable parse_golden_table(std::istream& in) {
    static const std::map<std::string, int> kSizeWords = {
        {"one", 1}, {"two", 2}, {"three", 3}, {"four", 4},
        {"five", 5}, {"six", 6}, {"seven", 7}, {"eight", 8}};
    std::map<int, std::string> explicit_rows;
    std::map<int, std::string> defaults;  // by support size

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream tokens(line);
        std::string kind, size_word;
        tokens >> kind >> size_word;
        const auto size_it = kSizeWords.find(size_word);
        if (size_it == kSizeWords.end()) {
            throw std::invalid_argument("golden table line " + std::to_string(line_no) +
                                        ": unknown size word '" + size_word + "'");
        }
        std::string supports;
        if (kind == "group") {
            tokens >> supports;
        } else if (kind != "default") {
            throw std::invalid_argument("golden table line " + std::to_string(line_no) +
                                        ": expected 'group' or 'default'");
        }
        std::string spec, token;
        while (tokens >> token) {
            if (!spec.empty()) {
                spec += "  ";
            }
            spec += token;
        }
        if (kind == "default") {
            defaults[size_it->second] = spec;
            continue;
        }
        std::istringstream list(supports);
        std::string letters;
        while (std::getline(list, letters, ',')) {
            const int mask = detail::mask_from_letters(letters);
            if (std::popcount(static_cast<unsigned>(mask)) != size_it->second ||
                static_cast<int>(letters.size()) != size_it->second) {
                throw std::invalid_argument("golden table line " + std::to_string(line_no) +
                                            ": support '" + letters + "' does not match size");
            }
            explicit_rows[mask] = detail::support_letters(mask) + "  " + spec;
        }
    }

    GoldenTable golden;
    for (int mask = 1; mask <= 255; ++mask) {
        const auto row_it = explicit_rows.find(mask);
        if (row_it != explicit_rows.end()) {
            golden.expected[mask] = row_it->second;
            continue;
        }
        const int size = std::popcount(static_cast<unsigned>(mask));
        const auto def_it = defaults.find(size);
        if (def_it == defaults.end()) {
            throw std::invalid_argument("golden table covers no support of size " +
                                        std::to_string(size));
        }
        golden.expected[mask] = detail::support_letters(mask) + "  " + def_it->second;
    }
    return golden;
}

/// Row-by-row mismatches between a generated table and the golden reference.
inline std::vector<std::string> compare_with_golden(const Table3& table, const GoldenTable& golden) {
    std::vector<std::string> mismatches;
    for (const SupportRow& row : table.rows) {
        const std::string actual = support_row_text(row);
        const std::string& expected = golden.expected.at(row.mask);
        if (actual != expected) {
            mismatches.push_back("support " + detail::support_letters(row.mask) + ": generated '" +
                                 actual + "' vs golden '" + expected + "'");
        }
    }
    return mismatches;
}

// ---------------------------------------------------------------------------
// Pairwise minor conditions
// ---------------------------------------------------------------------------

struct PartConditionReport {
    int part = 0;
    std::vector<MinorCondition> conditions;  // the six minors of this part
    std::vector<double> magnitudes;          // |x_i x_j - x_k x_l| per condition
    bool conditions_hold = false;
    double norm_sq = 0.0;  // xi^2 of the part
    bool norm_is_one = false;
    bool consistent = false;
};

struct PairwiseConditionReport {
    std::array<PartConditionReport, 3> parts;
    bool all_consistent = true;
};

/// Evaluates, for each part of a 3-qubit state, the six coefficient-minor
/// equalities and the polarized-vector norm; the two must agree on whether
/// the part is separable.
inline PairwiseConditionReport verify_pairwise_conditions_3q(const PureState& state,
                                                             double tol = kDefaultTolerance) {
    if (state.n != 3) {
        throw std::invalid_argument("verify_pairwise_conditions_3q: state must have 3 qubits");
    }
    PairwiseConditionReport report;
    for (int part = 1; part <= 3; ++part) {
        PartConditionReport pr;
        pr.part = part;
        pr.conditions = part_minor_conditions(part);
        pr.conditions_hold = true;
        for (const MinorCondition& cond : pr.conditions) {
            pr.magnitudes.push_back(cond.magnitude(state.amplitudes));
            pr.conditions_hold = pr.conditions_hold && (pr.magnitudes.back() < tol);
        }
        pr.norm_sq = polarized_vector(state, QubitLabel(part)).norm_sq();
        pr.norm_is_one = std::abs(pr.norm_sq - 1.0) < tol;
        pr.consistent = pr.conditions_hold == pr.norm_is_one;
        report.all_consistent = report.all_consistent && pr.consistent;
        report.parts[static_cast<size_t>(part - 1)] = std::move(pr);
    }
    return report;
}

}  // namespace sepscan
