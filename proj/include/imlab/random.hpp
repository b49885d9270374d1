/*
 * Copyright 2026 The imlab Authors.
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

#ifndef IMLAB_RANDOM_HPP_
#define IMLAB_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace imlab {

// Index selection runs on std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Bounded draws use rejection sampling on the raw 64-bit
// output rather than std::uniform_int_distribution, whose algorithm is
// implementation-defined. Together these make every shuffle reproducible
// across standard libraries.
using Engine = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

// Derives a child seed by folding each tag into `seed` through splitmix64:
//   s = seed; for t in tags: s = splitmix64(s ^ splitmix64(t + 0x9e3779b97f4a7c15))
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

// Uniform integer in [0, bound). bound must be > 0.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

// Moves a uniformly chosen k-subset of `items` to its front (partial
// Fisher-Yates). k must not exceed items.size().
void partial_shuffle(Engine& engine, std::span<std::size_t> items, std::size_t k);

}  // namespace imlab

#endif  // IMLAB_RANDOM_HPP_
