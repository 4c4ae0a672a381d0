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
#ifndef METAPOP_VERIFICATION_HPP
#define METAPOP_VERIFICATION_HPP

#include "metapop/ap_model.hpp"
#include "metapop/keymer_model.hpp"
#include "metapop/keymer_nsfd.hpp"

#include <functional>
#include <string>
#include <vector>

namespace metapop
{

struct CheckResult {
    std::string id;   // C1 ... C8
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    double runtime_s = 0.0;
    double runtime_limit_s = 0.0; // 0: no limit
    std::string detail;           // names the failing sub-check, if any
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Step functions under test. Defaults to the library schemes; tests swap in
/// broken ones to see the suite catch them.
struct VerificationContext {
    std::function<State2(const State2&, const keymer::Params&, const keymer::SchemeParams&, double phi)> keymer_step;
    std::function<State4(const State4&, const ap::Params&, double phi)> ap_step;

    static VerificationContext library();
};

/// all, paper-numbers, invariants, oracle, jury, instability, order, jacobian.
const std::vector<std::string>& suite_names();

/// Throws Error(invalid_argument) for an unknown suite.
VerificationReport run_verification(const std::string& suite,
                                    const VerificationContext& ctx = VerificationContext::library());

} // namespace metapop

#endif // METAPOP_VERIFICATION_HPP
