/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The bchmp authors
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
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace bchmp {

/// Invalid domain parameters (bad field order, delta out of range, ...).
/// The CLI maps this to exit code 3.
class param_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration/verification exceeded its configured budget.
/// The CLI maps this to exit code 4.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal invariant alarm: a condition that can only arise from an
/// arithmetic bug, never from user input. The CLI maps this to exit code 1.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bchmp
