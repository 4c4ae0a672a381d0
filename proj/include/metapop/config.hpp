/*
* Copyright (C) 2026 The metapop-nsfd Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef METAPOP_CONFIG_HPP
#define METAPOP_CONFIG_HPP

#include "metapop/ap_model.hpp"
#include "metapop/denominator.hpp"
#include "metapop/keymer_model.hpp"
#include "metapop/keymer_nsfd.hpp"
#include "metapop/state.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metapop
{

enum class Model { keymer, ap };

std::string_view to_string(Model m);
Domain domain_of(Model m);

enum class SchemeKind { nsfd, euler, rk2, rk4 };

std::string_view to_string(SchemeKind s);
std::optional<SchemeKind> parse_scheme(std::string_view name);

/// One experiment. Text form, one `key = value` per line, `#` starts a comment:
///
///   name = keymer-example1
///   model = keymer                 # keymer | ap
///   keymer.beta = 0.8              # also keymer.lambda, keymer.delta, keymer.e
///   ap.beta_i = 0.4                # also ap.beta_l, ap.e_i, ap.e_l, ap.f, ap.g
///   scheme = nsfd                  # nsfd | euler | rk2 | rk4
///   nsfd.c1 = -17                  # also nsfd.c2, nsfd.c5, nsfd.c6 (keymer only)
///   denominator.kind = exponential # identity | exponential
///   denominator.tau = 2            # a number, or `auto` for the smallest
///                                  # two-digit value above 1/phi* (ap only)
///   h = 1
///   steps = 200
///   initial.0 = 0.9, 0.05          # one line per initial state
///   output = out
///   compare.schemes = nsfd, euler, rk4
struct ExperimentConfig {
    std::string name = "custom";
    Model model = Model::keymer;
    keymer::Params keymer{};
    ap::Params ap{};
    SchemeKind scheme = SchemeKind::nsfd;
    keymer::SchemeParams keymer_scheme{}; // its denominator member is ignored; `denominator` below is used
    DenominatorSpec denominator = DenominatorSpec::identity();
    bool tau_auto = false;
    double h = 1.0;
    std::size_t steps = 100;
    std::vector<std::vector<double>> initial;
    std::string output = ".";
    std::vector<SchemeKind> compare_schemes{SchemeKind::nsfd, SchemeKind::euler, SchemeKind::rk2, SchemeKind::rk4};

    /// Throws Error(invalid_argument / domain) describing the first problem.
    void validate() const;

    /// Denominator with an `auto` tau resolved.
    DenominatorSpec resolved_denominator() const;

    /// Keymer weights carrying the resolved denominator.
    keymer::SchemeParams resolved_keymer_scheme() const;

    /// Applies one `key = value` assignment (same grammar as the file).
    void set(std::string_view key, std::string_view value);

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);
/// Every field, with numbers in shortest round-trip form.
std::string serialize_config(const ExperimentConfig& cfg);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);
/// Fixed 17 significant digits, as used in CSV output.
std::string format_double17(double v);

} // namespace metapop

#endif // METAPOP_CONFIG_HPP
