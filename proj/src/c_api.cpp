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
#include "metapop/metapop.h"
#include "metapop/ap_nsfd.hpp"
#include "metapop/error.hpp"
#include "metapop/experiment.hpp"
#include "metapop/report.hpp"
#include "metapop/verification.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct metapop_config {
    metapop::ExperimentConfig cfg;
};

struct metapop_trajectory {
    metapop::Trajectory traj;
};

namespace
{

thread_local std::string last_error;

metapop_status to_status(metapop::ErrorCode code)
{
    switch (code) {
    case metapop::ErrorCode::invalid_argument:
        return METAPOP_ERR_INVALID_ARGUMENT;
    case metapop::ErrorCode::domain:
        return METAPOP_ERR_DOMAIN;
    case metapop::ErrorCode::numeric:
        return METAPOP_ERR_NUMERIC;
    case metapop::ErrorCode::io:
        return METAPOP_ERR_IO;
    case metapop::ErrorCode::internal:
        return METAPOP_ERR_INTERNAL;
    }
    return METAPOP_ERR_INTERNAL;
}

template <class F>
metapop_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return METAPOP_OK;
    }
    catch (const metapop::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    }
    catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return METAPOP_ERR_INTERNAL;
    }
    catch (const std::exception& e) {
        last_error = e.what();
        return METAPOP_ERR_INTERNAL;
    }
    catch (...) {
        last_error = "unknown error";
        return METAPOP_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what)
{
    if (!ok) {
        metapop::fail(metapop::ErrorCode::invalid_argument, what);
    }
}

char* dup_string(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

metapop::keymer::Params keymer_params(const double p[4])
{
    return {p[0], p[1], p[2], p[3]};
}

metapop::ap::Params ap_params(const double p[6])
{
    return {.beta_i = p[0], .beta_l = p[1], .e_i = p[2], .e_l = p[3], .f = p[4], .g = p[5]};
}

template <class T>
std::string render(const T& value, metapop_format format)
{
    return format == METAPOP_FORMAT_JSON ? metapop::to_json(value) : metapop::to_text(value);
}

} // namespace

extern "C" {

const char* metapop_version(void)
{
    return "0.1.0";
}

const char* metapop_status_string(metapop_status status)
{
    switch (status) {
    case METAPOP_OK:
        return "ok";
    case METAPOP_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case METAPOP_ERR_DOMAIN:
        return "domain error";
    case METAPOP_ERR_NUMERIC:
        return "numeric error";
    case METAPOP_ERR_IO:
        return "i/o error";
    case METAPOP_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* metapop_last_error(void)
{
    return last_error.c_str();
}

void metapop_string_free(char* s)
{
    std::free(s);
}

size_t metapop_preset_count(void)
{
    return metapop::preset_names().size();
}

const char* metapop_preset_name(size_t index)
{
    const auto& names = metapop::preset_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

size_t metapop_suite_count(void)
{
    return metapop::suite_names().size();
}

const char* metapop_suite_name(size_t index)
{
    const auto& names = metapop::suite_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

metapop_status metapop_config_from_preset(const char* name, metapop_config** out)
{
    return guarded([&] {
        require(name && out, "name and out must not be NULL");
        *out = new metapop_config{metapop::preset(name)};
    });
}

metapop_status metapop_config_from_file(const char* path, metapop_config** out)
{
    return guarded([&] {
        require(path && out, "path and out must not be NULL");
        *out = new metapop_config{metapop::load_config(path)};
    });
}

metapop_status metapop_config_from_string(const char* text, metapop_config** out)
{
    return guarded([&] {
        require(text && out, "text and out must not be NULL");
        *out = new metapop_config{metapop::parse_config(text)};
    });
}

metapop_status metapop_config_set(metapop_config* cfg, const char* key, const char* value)
{
    return guarded([&] {
        require(cfg && key && value, "cfg, key and value must not be NULL");
        metapop::ExperimentConfig copy = cfg->cfg;
        copy.set(key, value);
        cfg->cfg = std::move(copy);
    });
}

metapop_status metapop_config_serialize(const metapop_config* cfg, char** out)
{
    return guarded([&] {
        require(cfg && out, "cfg and out must not be NULL");
        *out = dup_string(metapop::serialize_config(cfg->cfg));
    });
}

void metapop_config_free(metapop_config* cfg)
{
    delete cfg;
}

metapop_status metapop_analyze(const metapop_config* cfg, metapop_format format, char** report)
{
    return guarded([&] {
        require(cfg && report, "cfg and report must not be NULL");
        *report = dup_string(render(metapop::analyze(cfg->cfg), format));
    });
}

metapop_status metapop_simulate(const metapop_config* cfg, const char* out_dir, metapop_format format,
                                char** summary)
{
    return guarded([&] {
        require(cfg && summary, "cfg and summary must not be NULL");
        const auto outputs = metapop::simulate_to_files(cfg->cfg, out_dir ? out_dir : cfg->cfg.output);
        *summary = dup_string(render(outputs, format));
    });
}

metapop_status metapop_compare(const metapop_config* cfg, const char* out_dir, metapop_format format,
                               char** summary)
{
    return guarded([&] {
        require(cfg && summary, "cfg and summary must not be NULL");
        const auto res = metapop::compare(cfg->cfg, out_dir ? out_dir : cfg->cfg.output);
        *summary = dup_string(render(res, format));
    });
}

metapop_status metapop_verify(const char* suite, metapop_format format, int* all_passed, char** report)
{
    return guarded([&] {
        require(suite && all_passed && report, "suite, all_passed and report must not be NULL");
        const auto rep = metapop::run_verification(suite);
        *all_passed = rep.passed() ? 1 : 0;
        *report = dup_string(render(rep, format));
    });
}

metapop_status metapop_trajectory_run(const metapop_config* cfg, size_t initial_index, metapop_trajectory** out)
{
    return guarded([&] {
        require(cfg && out, "cfg and out must not be NULL");
        cfg->cfg.validate();
        require(initial_index < cfg->cfg.initial.size(), "initial_index out of range");
        *out = new metapop_trajectory{metapop::run(cfg->cfg, cfg->cfg.scheme, cfg->cfg.initial[initial_index])};
    });
}

size_t metapop_trajectory_size(const metapop_trajectory* traj)
{
    return traj ? traj->traj.size() : 0;
}

size_t metapop_trajectory_dim(const metapop_trajectory* traj)
{
    return traj ? traj->traj.dim() : 0;
}

metapop_status metapop_trajectory_state(const metapop_trajectory* traj, size_t k, double* out, size_t out_len)
{
    return guarded([&] {
        require(traj && out, "traj and out must not be NULL");
        require(k < traj->traj.size(), "state index out of range");
        require(out_len >= traj->traj.dim(), "output buffer too small");
        const auto s = traj->traj.state(k);
        std::copy(s.begin(), s.end(), out);
    });
}

void metapop_trajectory_free(metapop_trajectory* traj)
{
    delete traj;
}

metapop_status metapop_keymer_r0(const double params[4], double* r0)
{
    return guarded([&] {
        require(params && r0, "params and r0 must not be NULL");
        *r0 = metapop::keymer::r0(keymer_params(params));
    });
}

metapop_status metapop_keymer_nsfd_step(const double params[4], const double weights[4], double phi,
                                        const double state[2], double next[2])
{
    return guarded([&] {
        require(params && weights && state && next, "arguments must not be NULL");
        const auto p = keymer_params(params);
        p.validate();
        const metapop::keymer::SchemeParams sp{weights[0], weights[1], weights[2], weights[3],
                                               metapop::DenominatorSpec::identity()};
        const auto n = metapop::keymer::nsfd_step_phi({state[0], state[1]}, p, sp, phi);
        next[0] = n.x;
        next[1] = n.y;
    });
}

metapop_status metapop_ap_nsfd_step(const double params[6], double phi, const double state[4], double next[4])
{
    return guarded([&] {
        require(params && state && next, "arguments must not be NULL");
        const auto p = ap_params(params);
        p.validate();
        const auto n = metapop::ap::nsfd_step_phi({state[0], state[1], state[2], state[3]}, p, phi);
        next[0] = n.i;
        next[1] = n.s;
        next[2] = n.l;
        next[3] = n.r;
    });
}

metapop_status metapop_ap_phi_bound(const double params[6], double* phi_star)
{
    return guarded([&] {
        require(params && phi_star, "params and phi_star must not be NULL");
        const auto p = ap_params(params);
        p.validate();
        *phi_star = metapop::ap::phi_bound(p).phi_star;
    });
}

} // extern "C"
