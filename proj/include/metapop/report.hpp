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
#ifndef METAPOP_REPORT_HPP
#define METAPOP_REPORT_HPP

#include "metapop/analysis.hpp"
#include "metapop/experiment.hpp"
#include "metapop/verification.hpp"

#include <string>
#include <vector>

namespace metapop
{

/// Human-readable forms, several lines each, ending in '\n'.
std::string to_text(const StabilityReport& rep);
std::string to_text(const CompareResult& res);
std::string to_text(const VerificationReport& rep);
std::string to_text(const std::vector<SimulationOutput>& outputs);

/// JSON documents, pretty-printed with two-space indent. Non-finite numbers
/// are written as the strings "inf", "-inf" and "nan".
std::string to_json(const StabilityReport& rep);
std::string to_json(const CompareResult& res);
std::string to_json(const VerificationReport& rep);
std::string to_json(const std::vector<SimulationOutput>& outputs);

} // namespace metapop

#endif // METAPOP_REPORT_HPP
