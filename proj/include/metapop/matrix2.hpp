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
#ifndef METAPOP_MATRIX2_HPP
#define METAPOP_MATRIX2_HPP

namespace metapop
{

struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    double det() const
    {
        return a11 * a22 - a12 * a21;
    }
    double trace() const
    {
        return a11 + a22;
    }

    static Mat2 identity()
    {
        return {1.0, 0.0, 0.0, 1.0};
    }
};

} // namespace metapop

#endif // METAPOP_MATRIX2_HPP
