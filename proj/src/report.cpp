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
#include "metapop/report.hpp"

#include "json.hpp"

#include <cmath>
#include <sstream>

namespace metapop
{

namespace
{

using nlohmann::ordered_json;

ordered_json num(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

ordered_json nums(const std::vector<double>& vs)
{
    ordered_json arr = ordered_json::array();
    for (double v : vs) {
        arr.push_back(num(v));
    }
    return arr;
}

std::string tuple(const std::vector<double>& vs)
{
    std::string out = "(";
    for (std::size_t k = 0; k < vs.size(); ++k) {
        out += (k ? ", " : "") + format_double(vs[k]);
    }
    return out + ")";
}

ordered_json jury_json(const JuryVerdict& v)
{
    return {{"det", num(v.det)},     {"trace", num(v.trace)},   {"cond1", v.cond1},
            {"cond2", v.cond2},      {"cond3", v.cond3},        {"stable", v.stable},
            {"marginal", v.marginal}, {"classification", to_string(v.classification())}};
}

} // namespace

std::string to_text(const StabilityReport& rep)
{
    std::ostringstream os;
    os << "model: " << rep.model << '\n';
    os << "thresholds:\n";
    for (const auto& [k, v] : rep.thresholds) {
        os << "  " << k << " = " << format_double(v) << '\n';
    }
    os << "equilibria:\n";
    for (const auto& e : rep.equilibria) {
        os << "  " << e.name << " = " << tuple(e.coordinates) << (e.in_domain ? "  in domain" : "  outside domain")
           << "  " << to_string(e.classification) << '\n';
        if (e.jury) {
            os << "    jury: det = " << format_double(e.jury->det) << ", trace = " << format_double(e.jury->trace)
               << ", " << to_string(e.jury->classification()) << '\n';
        }
    }
    os << "bounds:\n";
    for (const auto& [k, v] : rep.bounds) {
        os << "  " << k << " = " << format_double(v) << '\n';
    }
    if (rep.scheme_validity) {
        os << "scheme conditions:" << (rep.scheme_validity->valid ? " all satisfied" : " NOT satisfied") << '\n';
        for (const auto& c : rep.scheme_validity->conditions) {
            os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << "  (" << format_double(c.lhs) << " vs "
               << format_double(c.rhs) << ")\n";
        }
    }
    for (const auto& n : rep.notes) {
        os << "note: " << n << '\n';
    }
    return os.str();
}

std::string to_json(const StabilityReport& rep)
{
    ordered_json j;
    j["model"] = rep.model;
    j["thresholds"] = ordered_json::object();
    for (const auto& [k, v] : rep.thresholds) {
        j["thresholds"][k] = num(v);
    }
    j["equilibria"] = ordered_json::array();
    for (const auto& e : rep.equilibria) {
        ordered_json je{{"name", e.name},
                        {"coordinates", nums(e.coordinates)},
                        {"in_domain", e.in_domain},
                        {"classification", to_string(e.classification)}};
        if (e.jury) {
            je["jury"] = jury_json(*e.jury);
        }
        j["equilibria"].push_back(std::move(je));
    }
    j["bounds"] = ordered_json::object();
    for (const auto& [k, v] : rep.bounds) {
        j["bounds"][k] = num(v);
    }
    if (rep.scheme_validity) {
        ordered_json sv{{"valid", rep.scheme_validity->valid}, {"c_star", num(rep.scheme_validity->cstar)}};
        sv["conditions"] = ordered_json::array();
        for (const auto& c : rep.scheme_validity->conditions) {
            sv["conditions"].push_back({{"name", c.name}, {"passed", c.passed}, {"lhs", num(c.lhs)}, {"rhs", num(c.rhs)}});
        }
        j["scheme_validity"] = std::move(sv);
    }
    j["notes"] = rep.notes;
    return j.dump(2) + "\n";
}

std::string to_text(const CompareResult& res)
{
    std::ostringstream os;
    for (const auto& e : res.entries) {
        os << '#' << e.position << ' ' << to_string(e.scheme) << " ic" << e.initial_index << ": ";
        if (e.violation) {
            os << "first violation " << to_string(e.violation->kind) << " at step " << e.violation->index;
        }
        else {
            os << "no violation";
        }
        os << ", max Delta V " << format_double(e.lyapunov_max_increase);
        if (e.spurious) {
            os << ", spurious fixed point " << tuple(e.spurious->limit) << " at distance "
               << format_double(e.spurious->distance_to_nearest);
        }
        os << ", final " << tuple(e.final_state) << "\n    " << e.file << '\n';
    }
    return os.str();
}

std::string to_json(const CompareResult& res)
{
    ordered_json arr = ordered_json::array();
    for (const auto& e : res.entries) {
        ordered_json je{{"position", e.position},
                        {"scheme", to_string(e.scheme)},
                        {"initial_index", e.initial_index},
                        {"file", e.file}};
        je["violation"] = e.violation ? ordered_json{{"kind", to_string(e.violation->kind)}, {"index", e.violation->index}}
                                      : ordered_json(nullptr);
        je["lyapunov_max_increase"] = num(e.lyapunov_max_increase);
        je["spurious_fixed_point"] =
            e.spurious ? ordered_json{{"limit", nums(e.spurious->limit)},
                                      {"distance_to_nearest", num(e.spurious->distance_to_nearest)}}
                       : ordered_json(nullptr);
        je["final_state"] = nums(e.final_state);
        arr.push_back(std::move(je));
    }
    return ordered_json{{"entries", arr}}.dump(2) + "\n";
}

std::string to_text(const VerificationReport& rep)
{
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& c : rep.checks) {
        passed += c.passed ? 1 : 0;
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << "  measured " << format_double(c.measured)
           << ", tolerance " << format_double(c.tolerance) << ", " << format_double(c.runtime_s) << " s";
        if (c.runtime_limit_s > 0.0) {
            os << " (limit " << format_double(c.runtime_limit_s) << " s)";
        }
        os << "\n    " << c.detail << '\n';
    }
    os << "suite " << rep.suite << ": " << passed << '/' << rep.checks.size() << " passed\n";
    return os.str();
}

std::string to_json(const VerificationReport& rep)
{
    ordered_json j{{"suite", rep.suite}, {"passed", rep.passed()}};
    j["checks"] = ordered_json::array();
    for (const auto& c : rep.checks) {
        j["checks"].push_back({{"id", c.id},
                               {"name", c.name},
                               {"passed", c.passed},
                               {"measured", num(c.measured)},
                               {"tolerance", num(c.tolerance)},
                               {"runtime_s", num(c.runtime_s)},
                               {"runtime_limit_s", num(c.runtime_limit_s)},
                               {"detail", c.detail}});
    }
    return j.dump(2) + "\n";
}

std::string to_text(const std::vector<SimulationOutput>& outputs)
{
    std::ostringstream os;
    for (const auto& o : outputs) {
        os << o.file << ": " << o.states << " states, final " << tuple(o.final_state) << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<SimulationOutput>& outputs)
{
    ordered_json arr = ordered_json::array();
    for (const auto& o : outputs) {
        arr.push_back({{"file", o.file}, {"states", o.states}, {"final_state", nums(o.final_state)}});
    }
    return ordered_json{{"trajectories", arr}}.dump(2) + "\n";
}

} // namespace metapop
