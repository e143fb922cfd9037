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

#include "cli/literal.h"

#include <charconv>
#include <vector>

namespace partition_lab::cli {

namespace {

constexpr Part kMaxParts = 1'000'000;

std::string_view trim(std::string_view s) {
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && blank(s.back())) s.remove_suffix(1);
    return s;
}

Part parse_positive(std::string_view digits, std::string_view term) {
    Part value = 0;
    const auto *end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (digits.empty() || ec != std::errc() || ptr != end) {
        throw LiteralError("invalid term '" + std::string(term) + "'");
    }
    if (value == 0) {
        throw LiteralError("term '" + std::string(term) + "' must use positive integers");
    }
    return value;
}

}  // namespace

Partition parse_partition_literal(std::string_view text) {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') {
            throw LiteralError("unbalanced '[' in '" + std::string(text) + "'");
        }
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<Part> parts;
    if (body.empty()) {
        return Partition();
    }
    std::size_t index = 0;
    while (true) {
        const std::size_t comma = body.find(',');
        const std::string_view term = trim(body.substr(0, comma));
        const std::size_t caret = term.find('^');
        Part value = 0;
        Part multiplicity = 1;
        if (caret == std::string_view::npos) {
            value = parse_positive(term, term);
        } else {
            value = parse_positive(trim(term.substr(0, caret)), term);
            multiplicity = parse_positive(trim(term.substr(caret + 1)), term);
        }
        if (multiplicity > kMaxParts || parts.size() + multiplicity > kMaxParts) {
            throw LiteralError("term '" + std::string(term) + "' expands past " +
                               std::to_string(kMaxParts) + " parts");
        }
        if (!parts.empty() && parts.back() < value) {
            throw LiteralError("term " + std::to_string(index + 1) + " '" + std::string(term) +
                               "' is larger than the part before it; parts must be non-increasing");
        }
        parts.insert(parts.end(), multiplicity, value);
        ++index;
        if (comma == std::string_view::npos) {
            break;
        }
        body.remove_prefix(comma + 1);
    }
    return Partition::from_parts(std::move(parts));
}

}  // namespace partition_lab::cli
