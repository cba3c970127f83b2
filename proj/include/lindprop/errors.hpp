// Copyright 2026 The lindprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINDPROP_ERRORS_HPP
#define LINDPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lindprop {

/// A caller broke a documented precondition (shape, Hermiticity, ...).
class contract_violation : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Overflow, singular systems and other floating-point breakdowns.
class numerical_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid run configuration.
class config_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}

#endif
