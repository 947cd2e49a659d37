// SPDX-License-Identifier: Apache-2.0
//
// relaysim: link-level simulator for dual-hop AF MIMO relay networks
// Copyright (C) 2026 The relaysim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RELAYSIM_ERRORS_HPP
#define RELAYSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relaysim
{

// Incompatible matrix dimensions or out-of-range indices.
class ShapeError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Factorization breakdown (non-HPD input, zero beamformer, ...).
class NumericError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Network or sweep parameters violating a model constraint.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace relaysim

#endif
