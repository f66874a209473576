/*
 * Copyright (c) 2026  The vopatch authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace vopatch {

/// Deterministic uniform/normal sampling on top of std::mt19937_64.
/// std::uniform_real_distribution is implementation-defined, so draws are
/// produced from raw engine output to make results reproducible across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 bits of entropy.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Box-Muller; consumes two uniforms per pair of calls.
  double normal(double mean = 0.0, double stddev = 1.0);

  /// Uniform integer in [0, n) by rejection; n must be > 0.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stable stream derivation: one master seed, many independent substreams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// FNV-1a over raw bytes.
std::uint64_t fnv1a(const void* data, std::size_t n,
                    std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t fnv1a(const std::string& s);

/// Hash of a directory tree: file paths (sorted, relative) and contents.
std::uint64_t hash_directory(const std::filesystem::path& root);

std::string hex64(std::uint64_t v);

/// Formats a double so that parsing the result recovers the value exactly.
std::string format_exact(double v);

/// Runs fn(i) for i in [0, n) on `jobs` threads; results are produced into
/// index-ordered slots so any reduction done afterwards is deterministic.
void parallel_for_ordered(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace vopatch
