// Copyright 2026 The qparrondo Authors
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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qparrondo/coin_ops.hpp"
#include "qparrondo/statevector.hpp"

// JSON documents accepted on the command line.
//
// Phase assignment (radians, branches in order B1..B4):
//   {"A": {"gamma": 0.0, "delta": 0.0},
//    "B": [{"alpha": 0.0, "beta": 0.0}, ... four entries ...]}
//
// Custom initial state: [[re, im], [re, im], ...] with 2^m entries.

namespace qparrondo::io {

using nlohmann::json;

/// Decimal rendering with 9 significant digits.
inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// `v` rounded to what format_number prints.
inline double round_for_output(double v) {
    return std::strtod(format_number(v).c_str(), nullptr);
}

namespace detail {

inline double phase_field(const json &obj, const char *key,
                          const std::string &path) {
    const std::string where = path + "." + key;
    if (!obj.is_object() || !obj.contains(key)) {
        throw InvalidInput("phases: missing field '" + where + "'");
    }
    const json &v = obj.at(key);
    if (!v.is_number()) {
        throw InvalidInput("phases: field '" + where + "' must be a number");
    }
    const double x = v.get<double>();
    if (!(x >= 0.0 && x <= kTwoPi)) {
        throw NumericValidationError("phases: field '" + where + "' = " +
                                     format_number(x) + " outside [0, 2pi]");
    }
    return x;
}

} // namespace detail

inline PhaseAssignment phases_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw InvalidInput("phases: document must be a JSON object");
    }
    PhaseAssignment p;
    if (!doc.contains("A")) {
        throw InvalidInput("phases: missing field 'A'");
    }
    p.gamma = detail::phase_field(doc.at("A"), "gamma", "A");
    p.delta = detail::phase_field(doc.at("A"), "delta", "A");
    if (!doc.contains("B") || !doc.at("B").is_array() || doc.at("B").size() != 4) {
        throw InvalidInput("phases: field 'B' must be an array of 4 branch objects");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string path = "B[" + std::to_string(i) + "]";
        p.b[i].alpha = detail::phase_field(doc.at("B")[i], "alpha", path);
        p.b[i].beta = detail::phase_field(doc.at("B")[i], "beta", path);
    }
    return p;
}

inline json phases_to_json(const PhaseAssignment &p) {
    json b = json::array();
    for (const auto &br : p.b) {
        b.push_back({{"alpha", br.alpha}, {"beta", br.beta}});
    }
    return {{"A", {{"gamma", p.gamma}, {"delta", p.delta}}}, {"B", b}};
}

inline std::vector<Amplitude> amplitudes_from_json(const json &doc) {
    if (!doc.is_array()) {
        throw InvalidInput("state: document must be an array of [re, im] pairs");
    }
    std::vector<Amplitude> out;
    out.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json &e = doc[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw InvalidInput("state: entry [" + std::to_string(i) +
                               "] must be a [re, im] pair of numbers");
        }
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

inline json amplitudes_to_json(std::span<const Amplitude> amps) {
    json out = json::array();
    for (const auto &a : amps) {
        out.push_back({a.real(), a.imag()});
    }
    return out;
}

inline json read_json_file(const std::string &path, const std::string &what) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput(what + ": cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InvalidInput(what + ": '" + path + "' is not valid JSON (" + e.what() + ")");
    }
}

} // namespace qparrondo::io
