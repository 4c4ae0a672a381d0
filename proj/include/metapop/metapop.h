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
#ifndef METAPOP_METAPOP_H
#define METAPOP_METAPOP_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(METAPOP_BUILDING)
#define METAPOP_API __declspec(dllexport)
#else
#define METAPOP_API __declspec(dllimport)
#endif
#else
#define METAPOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/**
 * @brief Result of every fallible call. On anything but METAPOP_OK the
 * calling thread's metapop_last_error() describes the problem.
 */
typedef enum metapop_status {
    METAPOP_OK                   = 0,
    METAPOP_ERR_INVALID_ARGUMENT = 1,
    METAPOP_ERR_DOMAIN           = 2,
    METAPOP_ERR_NUMERIC          = 3,
    METAPOP_ERR_IO               = 4,
    METAPOP_ERR_INTERNAL         = 5,
} metapop_status;

typedef enum metapop_format {
    METAPOP_FORMAT_TEXT = 0,
    METAPOP_FORMAT_JSON = 1,
} metapop_format;

typedef struct metapop_config metapop_config;
typedef struct metapop_trajectory metapop_trajectory;

METAPOP_API const char* metapop_version(void);
METAPOP_API const char* metapop_status_string(metapop_status status);
/** Message of the last failed call on this thread, "" if none. */
METAPOP_API const char* metapop_last_error(void);

/** Releases strings returned through char** out-parameters. */
METAPOP_API void metapop_string_free(char* s);

METAPOP_API size_t metapop_preset_count(void);
/** NULL when index is out of range. */
METAPOP_API const char* metapop_preset_name(size_t index);
METAPOP_API size_t metapop_suite_count(void);
METAPOP_API const char* metapop_suite_name(size_t index);

/* Configuration */

METAPOP_API metapop_status metapop_config_from_preset(const char* name, metapop_config** out);
METAPOP_API metapop_status metapop_config_from_file(const char* path, metapop_config** out);
METAPOP_API metapop_status metapop_config_from_string(const char* text, metapop_config** out);
/** Applies one `key = value` assignment, e.g. ("h", "0.5") or ("compare.schemes", "nsfd,euler"). */
METAPOP_API metapop_status metapop_config_set(metapop_config* cfg, const char* key, const char* value);
METAPOP_API metapop_status metapop_config_serialize(const metapop_config* cfg, char** out);
METAPOP_API void metapop_config_free(metapop_config* cfg);

/* Commands */

METAPOP_API metapop_status metapop_analyze(const metapop_config* cfg, metapop_format format, char** report);
/** Writes one CSV per initial state into out_dir (the config's output when NULL). */
METAPOP_API metapop_status metapop_simulate(const metapop_config* cfg, const char* out_dir, metapop_format format,
                                            char** summary);
METAPOP_API metapop_status metapop_compare(const metapop_config* cfg, const char* out_dir, metapop_format format,
                                           char** summary);
/** Runs a verification suite; a failed check is reported through all_passed, not the status. */
METAPOP_API metapop_status metapop_verify(const char* suite, metapop_format format, int* all_passed, char** report);

/* Trajectories */

METAPOP_API metapop_status metapop_trajectory_run(const metapop_config* cfg, size_t initial_index,
                                                  metapop_trajectory** out);
METAPOP_API size_t metapop_trajectory_size(const metapop_trajectory* traj);
METAPOP_API size_t metapop_trajectory_dim(const metapop_trajectory* traj);
/** Copies state k into out, which must hold at least dim values. */
METAPOP_API metapop_status metapop_trajectory_state(const metapop_trajectory* traj, size_t k, double* out,
                                                    size_t out_len);
METAPOP_API void metapop_trajectory_free(metapop_trajectory* traj);

/* Numerics. Keymer params are {beta, lambda, delta, e}, weights {c1, c2, c5, c6};
 * AP params are {beta_I, beta_L, e_I, e_L, f, g}; AP states are {I, S, L, R}. */

METAPOP_API metapop_status metapop_keymer_r0(const double params[4], double* r0);
METAPOP_API metapop_status metapop_keymer_nsfd_step(const double params[4], const double weights[4], double phi,
                                                    const double state[2], double next[2]);
METAPOP_API metapop_status metapop_ap_nsfd_step(const double params[6], double phi, const double state[4],
                                                double next[4]);
METAPOP_API metapop_status metapop_ap_phi_bound(const double params[6], double* phi_star);

#ifdef __cplusplus
}
#endif

#endif /* METAPOP_METAPOP_H */
