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

#ifndef PARTITION_LAB_CLI_LITERAL_H
#define PARTITION_LAB_CLI_LITERAL_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "partition_lab/partition.h"

namespace partition_lab::cli {

class LiteralError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses `LIST ::= TERM (',' TERM)*`, `TERM ::= INT | INT '^' INT`, where
/// `v^m` stands for m copies of v. Surrounding brackets and blanks are
/// ignored; "" and "[]" denote the empty partition. Terms must already be
/// in non-increasing order.
Partition parse_partition_literal(std::string_view text);

}  // namespace partition_lab::cli

#endif  // PARTITION_LAB_CLI_LITERAL_H
