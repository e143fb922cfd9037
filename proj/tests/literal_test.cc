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

#include <random>

#include "gtest/gtest.h"
#include "support/oracles.h"

using namespace partition_lab;
using partition_lab::cli::LiteralError;
using partition_lab::cli::parse_partition_literal;

TEST(literal, plain_and_powers) {
    EXPECT_EQ(parse_partition_literal("5,3,3,1"), Partition::from_parts({5, 3, 3, 1}));
    EXPECT_EQ(parse_partition_literal("2^3,1^2"), parse_partition_literal("2,2,2,1,1"));
    EXPECT_EQ(parse_partition_literal("5^2,3,2^2"), Partition::from_parts({5, 5, 3, 2, 2}));
    EXPECT_EQ(parse_partition_literal("[4, 3, 2]"), Partition::from_parts({4, 3, 2}));
    EXPECT_EQ(parse_partition_literal(" 7 "), Partition::from_parts({7}));
}

TEST(literal, empty) {
    EXPECT_TRUE(parse_partition_literal("").empty());
    EXPECT_TRUE(parse_partition_literal("[]").empty());
}

TEST(literal, diagnostics_name_the_term) {
    const auto message = [](const char *text) -> std::string {
        try {
            parse_partition_literal(text);
        } catch (const LiteralError &e) {
            return e.what();
        }
        return "<accepted>";
    };
    EXPECT_NE(message("3,0").find("'0'"), std::string::npos) << message("3,0");
    EXPECT_NE(message("3,x").find("'x'"), std::string::npos) << message("3,x");
    EXPECT_NE(message("1,2").find("'2'"), std::string::npos) << message("1,2");
    EXPECT_NE(message("3^0").find("3^0"), std::string::npos) << message("3^0");
    for (const char *bad : {"3,,1", "3,", "^2", "2^", "-1", "3^2^2", "[3", "99999999999999999999999"}) {
        EXPECT_THROW(parse_partition_literal(bad), LiteralError) << bad;
    }
}

TEST(literal, size_guard) {
    EXPECT_THROW(parse_partition_literal("1^1000001"), LiteralError);
    EXPECT_EQ(parse_partition_literal("1^1000").length(), 1000u);
}

TEST(literal, round_trips_through_to_string) {
    std::mt19937_64 rng(0x11e7a1);
    for (int i = 0; i < 300; ++i) {
        const Partition p = oracle::random_partition(rng, 80);
        ASSERT_EQ(parse_partition_literal(to_string(p)), p) << to_string(p);
    }
}
