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

#ifndef RISSIM_RNG_HPP
#define RISSIM_RNG_HPP

#include <cstdint>

namespace rissim
{

// SplitMix64 finalizer; turns structured keys (seed, drop index, link id) into engine seeds
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent sub-stream seed for one work unit
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t salt = 0)
{
    return mix64(mix64(master) ^ mix64(index * 0x2545f4914f6cdd1dULL + salt));
}

} // namespace rissim

#endif
