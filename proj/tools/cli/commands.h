// Copyright 2026 The Partition Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARTITION_LAB_CLI_COMMANDS_H
#define PARTITION_LAB_CLI_COMMANDS_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "partition_lab/partition.h"
#include "partition_lab/pfn.h"

namespace partition_lab::cli {

inline constexpr const char *kSchema = "partition-lab/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Guards on the exhaustive and scanning subcommands.
inline constexpr Part kMaxEnumerateSize = 60;
inline constexpr Part kMaxDimension = 10;
inline constexpr Part kMaxEulerOrder = 300;
inline constexpr std::uint64_t kMaxCongruenceLimit = 2000;

/// Groups consecutive unit frames whose arms drop by exactly one into a
/// single wider L and returns the widths, outermost first.
std::vector<std::size_t> merge_unit_frames(std::span<const Part> arms);

/// Fixed-point rendering with an explicit sign; "-0.000" prints as "+0.000".
std::string format_signed_fixed(const Real &value, int decimals);

/// Runs `partition-lab` with `args` (program name excluded). `digits_env`
/// carries PARTITION_LAB_DIGITS when set. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const std::optional<std::string> &digits_env = std::nullopt);

}  // namespace partition_lab::cli

#endif  // PARTITION_LAB_CLI_COMMANDS_H
