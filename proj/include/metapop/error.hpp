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
#ifndef METAPOP_ERROR_HPP
#define METAPOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace metapop
{

enum class ErrorCode {
    invalid_argument,
    domain,        // state outside D2/D4 or a required sub-interval
    numeric,       // degenerate denominator, complex root, no admissible bound
    io,
    internal,      // a self-consistency cross-check failed
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. The C layer maps `code()` onto its
/// status values one-to-one.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what)
        , m_code(code)
    {
    }

    ErrorCode code() const noexcept
    {
        return m_code;
    }

private:
    ErrorCode m_code;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace metapop

#endif // METAPOP_ERROR_HPP
