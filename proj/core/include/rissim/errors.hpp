// SPDX-License-Identifier: Apache-2.0
//
// rissim - system-level simulator for RIS-assisted multi-cell networks
// Copyright (C) 2026 The rissim Authors
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

#ifndef RISSIM_ERRORS_HPP
#define RISSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rissim
{

// Invalid parameter set (non-positive ISD, unknown scenario, weight length mismatch, ...)
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a model (angle range, pathloss validity range)
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Coincident nodes or another configuration where angles are undefined
class GeometryError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace rissim

#endif
