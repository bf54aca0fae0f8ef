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

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

namespace sepscan {

/// On-disk pure state: explicit qubit count plus [re, im] amplitude pairs in
/// the flat basis order (qubit 1 = most significant bit of the index).
struct StateFile {
    int n = 0;
    std::optional<std::string> label;
    PureState state;
};

/// %.17g: enough significant digits to round-trip any double exactly.
inline std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

inline StateFile parse_state_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed state file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes")) {
        throw std::invalid_argument("state file must be an object with 'n' and 'amplitudes'");
    }
    if (!doc["n"].is_number_integer()) {
        throw std::invalid_argument("state file field 'n' must be an integer");
    }
    const int n = doc["n"].get<int>();
    const auto& amps_json = doc["amplitudes"];
    if (!amps_json.is_array()) {
        throw std::invalid_argument("state file field 'amplitudes' must be an array");
    }
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("state file qubit count " + std::to_string(n) +
                                    " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (amps_json.size() != (std::size_t(1) << n)) {
        throw std::invalid_argument("state file has " + std::to_string(amps_json.size()) +
                                    " amplitudes, expected 2^" + std::to_string(n) + " = " +
                                    std::to_string(std::size_t(1) << n));
    }
    Vector amps(static_cast<Eigen::Index>(amps_json.size()));
    for (std::size_t i = 0; i < amps_json.size(); ++i) {
        const auto& pair = amps_json[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw std::invalid_argument("amplitude " + std::to_string(i) +
                                        " must be a [re, im] number pair");
        }
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw std::invalid_argument("amplitude " + std::to_string(i) + " is not finite");
        }
        amps(static_cast<Eigen::Index>(i)) = Complex(re, im);
    }

    StateFile file;
    file.n = n;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw std::invalid_argument("state file field 'label' must be a string");
        }
        file.label = doc["label"].get<std::string>();
    }
    file.state = PureState::from_amplitudes(n, std::move(amps));
    return file;
}

/// Deterministic emission, one amplitude pair per line, 17 significant digits.
inline std::string emit_state_json(const StateFile& file) {
    std::string out = "{\n  \"n\": " + std::to_string(file.n);
    if (file.label.has_value()) {
        out += ",\n  \"label\": " + nlohmann::json(*file.label).dump();
    }
    out += ",\n  \"amplitudes\": [\n";
    for (Eigen::Index i = 0; i < file.state.amplitudes.size(); ++i) {
        const Complex amp = file.state.amplitudes(i);
        out += "    [" + format_double(amp.real()) + ", " + format_double(amp.imag()) + "]";
        if (i + 1 < file.state.amplitudes.size()) {
            out += ',';
        }
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

inline StateFile load_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open state file '" + path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_state_json(text);
}

inline void write_state_file(const std::string& path, const StateFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    out << emit_state_json(file);
}

}  // namespace sepscan
