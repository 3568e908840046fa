/*
 * Copyright 2026 The optotriplet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OPTOTRIPLET_ERRORS_HPP_
#define OPTOTRIPLET_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace optotriplet {

// Invalid user-facing input: a physical parameter, config key, grid or
// simulation setting. The message names the offending field.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation that was well posed but failed numerically (divergent
// trajectory, quadrature that did not converge, degenerate quadratic).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace optotriplet

#endif  // OPTOTRIPLET_ERRORS_HPP_
