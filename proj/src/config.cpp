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
#include "metapop/config.hpp"
#include "metapop/ap_nsfd.hpp"
#include "metapop/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace metapop
{

std::string_view to_string(Model m)
{
    return m == Model::keymer ? "keymer" : "ap";
}

Domain domain_of(Model m)
{
    return m == Model::keymer ? Domain::d2 : Domain::d4;
}

std::string_view to_string(SchemeKind s)
{
    switch (s) {
    case SchemeKind::nsfd:
        return "nsfd";
    case SchemeKind::euler:
        return "euler";
    case SchemeKind::rk2:
        return "rk2";
    case SchemeKind::rk4:
        return "rk4";
    }
    return "?";
}

std::optional<SchemeKind> parse_scheme(std::string_view name)
{
    for (auto s : {SchemeKind::nsfd, SchemeKind::euler, SchemeKind::rk2, SchemeKind::rk4}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

std::string format_double17(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected)
{
    fail(ErrorCode::invalid_argument,
         "config key '" + std::string(key) + "': cannot use '" + std::string(value) + "' (" + std::string(expected) +
             ")");
}

double to_number(std::string_view key, std::string_view value)
{
    double out = 0.0;
    const auto v = trim(value);
    const char* begin = v.data();
    if (!v.empty() && v.front() == '+') {
        ++begin;
    }
    const auto res = std::from_chars(begin, v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || v.empty()) {
        bad_value(key, value, "expected a number");
    }
    return out;
}

std::size_t to_count(std::string_view key, std::string_view value)
{
    std::size_t out = 0;
    const auto v = trim(value);
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || v.empty()) {
        bad_value(key, value, "expected a nonnegative integer");
    }
    return out;
}

std::vector<std::string_view> split_list(std::string_view value)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = value.find(',');
        out.push_back(trim(value.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        value.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

void ExperimentConfig::set(std::string_view key_in, std::string_view value_in)
{
    const auto key = trim(key_in);
    const auto value = trim(value_in);

    static const std::map<std::string_view, double keymer::Params::*> keymer_fields{
        {"keymer.beta", &keymer::Params::beta},
        {"keymer.lambda", &keymer::Params::lambda},
        {"keymer.delta", &keymer::Params::delta},
        {"keymer.e", &keymer::Params::e},
    };
    static const std::map<std::string_view, double ap::Params::*> ap_fields{
        {"ap.beta_i", &ap::Params::beta_i}, {"ap.beta_l", &ap::Params::beta_l}, {"ap.e_i", &ap::Params::e_i},
        {"ap.e_l", &ap::Params::e_l},       {"ap.f", &ap::Params::f},           {"ap.g", &ap::Params::g},
    };
    static const std::map<std::string_view, double keymer::SchemeParams::*> weight_fields{
        {"nsfd.c1", &keymer::SchemeParams::c1},
        {"nsfd.c2", &keymer::SchemeParams::c2},
        {"nsfd.c5", &keymer::SchemeParams::c5},
        {"nsfd.c6", &keymer::SchemeParams::c6},
    };

    if (auto it = keymer_fields.find(key); it != keymer_fields.end()) {
        keymer.*(it->second) = to_number(key, value);
    }
    else if (auto it2 = ap_fields.find(key); it2 != ap_fields.end()) {
        ap.*(it2->second) = to_number(key, value);
    }
    else if (auto it3 = weight_fields.find(key); it3 != weight_fields.end()) {
        keymer_scheme.*(it3->second) = to_number(key, value);
    }
    else if (key == "name") {
        if (value.empty()) {
            bad_value(key, value, "expected a nonempty name");
        }
        name = std::string(value);
    }
    else if (key == "model") {
        if (value == "keymer") {
            model = Model::keymer;
        }
        else if (value == "ap") {
            model = Model::ap;
        }
        else {
            bad_value(key, value, "expected keymer or ap");
        }
    }
    else if (key == "scheme") {
        const auto s = parse_scheme(value);
        if (!s) {
            bad_value(key, value, "expected nsfd, euler, rk2 or rk4");
        }
        scheme = *s;
    }
    else if (key == "denominator.kind") {
        if (value == "identity") {
            denominator.kind = DenominatorSpec::Kind::identity;
        }
        else if (value == "exponential") {
            denominator.kind = DenominatorSpec::Kind::exponential;
        }
        else {
            bad_value(key, value, "expected identity or exponential");
        }
    }
    else if (key == "denominator.tau") {
        if (value == "auto") {
            tau_auto = true;
            denominator.tau = 0.0;
        }
        else {
            tau_auto = false;
            denominator.tau = to_number(key, value);
        }
    }
    else if (key == "h") {
        h = to_number(key, value);
    }
    else if (key == "steps") {
        steps = to_count(key, value);
    }
    else if (key == "output") {
        output = std::string(value);
    }
    else if (key == "compare.schemes") {
        compare_schemes.clear();
        for (auto item : split_list(value)) {
            const auto s = parse_scheme(item);
            if (!s) {
                bad_value(key, item, "expected nsfd, euler, rk2 or rk4");
            }
            compare_schemes.push_back(*s);
        }
    }
    else if (key.starts_with("initial.")) {
        const auto idx = to_count(key, key.substr(8));
        if (idx > initial.size()) {
            fail(ErrorCode::invalid_argument, "config key '" + std::string(key) + "': initial states must be numbered 0, 1, 2, ... without gaps");
        }
        std::vector<double> state;
        for (auto item : split_list(value)) {
            state.push_back(to_number(key, item));
        }
        if (idx == initial.size()) {
            initial.push_back(std::move(state));
        }
        else {
            initial[idx] = std::move(state);
        }
    }
    else {
        fail(ErrorCode::invalid_argument, "unknown config key '" + std::string(key) + "'");
    }
}

void ExperimentConfig::validate() const
{
    if (model == Model::keymer) {
        keymer.validate();
    }
    else {
        ap.validate();
    }
    if (!(std::isfinite(h) && h > 0.0)) {
        fail(ErrorCode::invalid_argument, "h must be finite and > 0");
    }
    if (denominator.kind == DenominatorSpec::Kind::exponential && !tau_auto) {
        denominator.validate();
    }
    if (tau_auto && model != Model::ap) {
        fail(ErrorCode::invalid_argument, "denominator.tau = auto is only defined for the ap model");
    }
    if (model == Model::keymer && scheme == SchemeKind::nsfd && !keymer_scheme.sums_ok()) {
        fail(ErrorCode::invalid_argument, "nsfd weights must satisfy c1 + c2 = 1 and c5 + c6 = 1");
    }
    if (initial.empty()) {
        fail(ErrorCode::invalid_argument, "at least one initial state (initial.0) is required");
    }
    const Domain d = domain_of(model);
    for (std::size_t k = 0; k < initial.size(); ++k) {
        if (initial[k].size() != dimension(d)) {
            fail(ErrorCode::invalid_argument, "initial." + std::to_string(k) + " needs " +
                                                  std::to_string(dimension(d)) + " components");
        }
        if (!in_domain(initial[k], d)) {
            fail(ErrorCode::domain, "initial." + std::to_string(k) + " is outside " + std::string(to_string(d)));
        }
    }
    if (compare_schemes.empty()) {
        fail(ErrorCode::invalid_argument, "compare.schemes must not be empty");
    }
}

DenominatorSpec ExperimentConfig::resolved_denominator() const
{
    if (denominator.kind == DenominatorSpec::Kind::exponential && tau_auto) {
        return DenominatorSpec::exponential(default_tau(ap::phi_bound(ap).phi_star));
    }
    return denominator;
}

keymer::SchemeParams ExperimentConfig::resolved_keymer_scheme() const
{
    keymer::SchemeParams sp = keymer_scheme;
    sp.denominator = resolved_denominator();
    return sp;
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig cfg;
    cfg.initial.clear();
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorCode::invalid_argument, "config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        if (!seen.insert(std::string(key)).second) {
            fail(ErrorCode::invalid_argument,
                 "config line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
        }
        try {
            cfg.set(key, line.substr(eq + 1));
        }
        catch (const Error& e) {
            fail(e.code(), "config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::io, "cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    }
    catch (const Error& e) {
        fail(e.code(), path + ": " + e.what());
    }
}

std::string serialize_config(const ExperimentConfig& cfg)
{
    std::ostringstream out;
    auto kv = [&out](std::string_view k, const std::string& v) { out << k << " = " << v << '\n'; };
    kv("name", cfg.name);
    kv("model", std::string(to_string(cfg.model)));
    kv("keymer.beta", format_double(cfg.keymer.beta));
    kv("keymer.lambda", format_double(cfg.keymer.lambda));
    kv("keymer.delta", format_double(cfg.keymer.delta));
    kv("keymer.e", format_double(cfg.keymer.e));
    kv("ap.beta_i", format_double(cfg.ap.beta_i));
    kv("ap.beta_l", format_double(cfg.ap.beta_l));
    kv("ap.e_i", format_double(cfg.ap.e_i));
    kv("ap.e_l", format_double(cfg.ap.e_l));
    kv("ap.f", format_double(cfg.ap.f));
    kv("ap.g", format_double(cfg.ap.g));
    kv("scheme", std::string(to_string(cfg.scheme)));
    kv("nsfd.c1", format_double(cfg.keymer_scheme.c1));
    kv("nsfd.c2", format_double(cfg.keymer_scheme.c2));
    kv("nsfd.c5", format_double(cfg.keymer_scheme.c5));
    kv("nsfd.c6", format_double(cfg.keymer_scheme.c6));
    kv("denominator.kind", std::string(to_string(cfg.denominator.kind)));
    kv("denominator.tau", cfg.tau_auto ? std::string("auto") : format_double(cfg.denominator.tau));
    kv("h", format_double(cfg.h));
    kv("steps", std::to_string(cfg.steps));
    for (std::size_t k = 0; k < cfg.initial.size(); ++k) {
        std::string v;
        for (std::size_t i = 0; i < cfg.initial[k].size(); ++i) {
            v += (i ? ", " : "") + format_double(cfg.initial[k][i]);
        }
        kv("initial." + std::to_string(k), v);
    }
    kv("output", cfg.output);
    std::string schemes;
    for (std::size_t i = 0; i < cfg.compare_schemes.size(); ++i) {
        schemes += (i ? ", " : "") + std::string(to_string(cfg.compare_schemes[i]));
    }
    kv("compare.schemes", schemes);
    return out.str();
}

} // namespace metapop
