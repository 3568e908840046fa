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

#ifndef OPTOTRIPLET_SRC_AT_FREQUENCY_HPP_
#define OPTOTRIPLET_SRC_AT_FREQUENCY_HPP_

#include <sstream>
#include <string>

#include "optotriplet/errors.hpp"

namespace optotriplet::detail {

inline std::string with_frequency(const char* what, double omega) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " (at Omega = " << omega << " rad/s)";
  return msg.str();
}

// Evaluates fn(); re-throws library errors with the offending frequency
// attached, preserving the error category.
template <typename Fn>
auto at_frequency(double omega, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParameterError& e) {
    throw ParameterError(with_frequency(e.what(), omega));
  } catch (const NumericalError& e) {
    throw NumericalError(with_frequency(e.what(), omega));
  }
}

}  // namespace optotriplet::detail

#endif  // OPTOTRIPLET_SRC_AT_FREQUENCY_HPP_
