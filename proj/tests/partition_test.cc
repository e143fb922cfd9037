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

#include "partition_lab/partition.h"

#include <random>

#include "gtest/gtest.h"
#include "partition_lab/error.h"
#include "support/oracles.h"

using namespace partition_lab;

namespace {

Errc error_code_of(const auto &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected partition_lab::Error";
    return Errc::InvalidArgument;
}

}  // namespace

TEST(partition, from_parts_preserves_order) {
    const Partition p = Partition::from_parts({4, 3, 2, 2, 1});
    EXPECT_EQ(p.parts(), (std::vector<Part>{4, 3, 2, 2, 1}));
    EXPECT_EQ(p.size(), 12u);
    EXPECT_EQ(p.length(), 5u);
    EXPECT_EQ(p.first_part(), 4u);
}

TEST(partition, empty_is_valid) {
    const Partition e = Partition::from_parts(std::vector<Part>{});
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(e.size(), 0u);
    EXPECT_EQ(e, Partition());
}

TEST(partition, from_parts_rejects_bad_input) {
    EXPECT_EQ(error_code_of([] { Partition::from_parts({3, 5}); }), Errc::NotNonIncreasing);
    EXPECT_EQ(error_code_of([] { Partition::from_parts({3, 0}); }), Errc::NonPositivePart);
    EXPECT_EQ(error_code_of([] { Partition::from_parts({2, -1}); }), Errc::NonPositivePart);
}

TEST(partition, from_unordered_sorts) {
    const std::vector<std::int64_t> raw{1, 3, 2, 3};
    EXPECT_EQ(Partition::from_unordered(raw), Partition::from_parts({3, 3, 2, 1}));
}

TEST(partition, conjugate_figure_pair) {
    const Partition p = Partition::from_parts({4, 3, 2, 2, 1});
    const Partition q = Partition::from_parts({5, 4, 2, 1});
    EXPECT_EQ(conjugate(p), q);
    EXPECT_EQ(conjugate(q), p);
}

TEST(partition, conjugate_single_row) {
    EXPECT_EQ(conjugate(Partition::from_parts({7})), Partition::from_parts({1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(conjugate(Partition()), Partition());
}

TEST(partition, oracle_examples) {
    EXPECT_TRUE(is_self_conjugate_oracle(Partition::from_parts({4, 3, 2, 1})));
    EXPECT_FALSE(is_self_conjugate_oracle(Partition::from_parts({6, 5, 5, 5, 5})));
    EXPECT_TRUE(is_self_conjugate_oracle(Partition()));
}

TEST(partition, dimension) {
    EXPECT_EQ(dimension(Partition::from_parts({4, 3, 2, 1})), 4u);
    EXPECT_EQ(dimension(Partition::from_parts({5, 1, 1, 1})), std::nullopt);
    EXPECT_EQ(dimension(Partition::from_parts({1})), 1u);
    EXPECT_EQ(error_code_of([] { dimension(Partition()); }), Errc::EmptyPartition);
}

TEST(partition, to_multiplicities_examples) {
    EXPECT_EQ(to_multiplicities(Partition::from_parts({5, 5, 3, 2, 2})).runs(),
              (std::vector<partition_lab::Run>{{5, 2}, {3, 1}, {2, 2}}));
    EXPECT_EQ(to_multiplicities(Partition::from_parts(
                                    {20, 7, 7, 7, 7, 7, 6, 6, 5, 5, 5, 5, 4, 4, 2, 2, 1, 1, 1, 1}))
                  .runs(),
              (std::vector<partition_lab::Run>{{20, 1}, {7, 5}, {6, 2}, {5, 4}, {4, 2}, {2, 2}, {1, 4}}));
    EXPECT_EQ(to_multiplicities(Partition::from_parts({1})).runs(), (std::vector<partition_lab::Run>{{1, 1}}));
}

TEST(partition, multiplicity_form_validation) {
    EXPECT_EQ(error_code_of([] { MultiplicityForm::from_runs({{2, 1}, {3, 1}}); }),
              Errc::InvalidMultiplicities);
    EXPECT_EQ(error_code_of([] { MultiplicityForm::from_runs({{2, 0}}); }),
              Errc::InvalidMultiplicities);
}

TEST(partition, add_examples) {
    const Partition a = Partition::from_parts({4, 3, 2, 1});
    const Partition b = Partition::from_parts({3, 2, 2});
    EXPECT_EQ(a + b, Partition::from_parts({4, 3, 3, 2, 2, 2, 1}));
    EXPECT_EQ(b + a, a + b);
    EXPECT_EQ(a + Partition(), a);
    EXPECT_EQ(Partition::from_parts({2}) + Partition::from_parts({2}), Partition::from_parts({2, 2}));
}

TEST(partition, split_contiguous_examples) {
    const Partition p = Partition::from_parts({9, 6, 4, 1});
    const std::vector<std::size_t> one_cut{3};
    EXPECT_EQ(split_contiguous(p, one_cut),
              (std::vector<Partition>{Partition::from_parts({9, 6, 4}), Partition::from_parts({1})}));
    EXPECT_EQ(split_contiguous(p, {}), std::vector<Partition>{p});
    const std::vector<std::size_t> all_cuts{1, 2, 3};
    const auto pieces = split_contiguous(p, all_cuts);
    ASSERT_EQ(pieces.size(), 4u);
    EXPECT_EQ(pieces[3], Partition::from_parts({1}));
}

TEST(partition, split_contiguous_rejects_bad_cuts) {
    const Partition p = Partition::from_parts({4, 3, 2, 1});
    const std::vector<std::vector<std::size_t>> bad{{0}, {4}, {2, 2}, {3, 1}};
    for (const auto &cuts : bad) {
        EXPECT_EQ(error_code_of([&] { split_contiguous(p, cuts); }), Errc::CutOutOfRange);
    }
}

TEST(partition, render_young_golden) {
    EXPECT_EQ(render_young(Partition::from_parts({2, 1})), "##\n#\n");
    EXPECT_EQ(render_young(Partition::from_parts({4, 3, 2, 2, 1})), R"DIAGRAM(####
###
##
##
#
)DIAGRAM");
    EXPECT_EQ(render_young(Partition()), "");
}

TEST(partition, render_ferrers_golden) {
    EXPECT_EQ(render_ferrers(Partition::from_parts({2, 1})), "* *\n*\n");
    EXPECT_EQ(render_ferrers(Partition::from_parts({4, 3, 2, 2, 1})), R"DIAGRAM(* * * *
* * *
* *
* *
*
)DIAGRAM");
    EXPECT_EQ(render_ferrers(Partition::from_parts({1})), "*\n");
}

TEST(partition_properties, conjugation_matches_cell_transpose) {
    std::mt19937_64 rng(0x5eed0001);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition p = oracle::random_partition(rng, 60);
        const Partition c = conjugate(p);
        ASSERT_EQ(c, oracle::transpose_cells(p)) << to_string(p);
        ASSERT_EQ(conjugate(c), p);
        ASSERT_EQ(c.size(), p.size());
        ASSERT_EQ(c.first_part(), p.length());
        ASSERT_EQ(c.length(), p.first_part());
    }
}

TEST(partition_properties, multiplicities_round_trip) {
    std::mt19937_64 rng(0x5eed0002);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition p = oracle::random_partition(rng, 60);
        const MultiplicityForm m = to_multiplicities(p);
        ASSERT_EQ(from_multiplicities(m), p);
        ASSERT_EQ(m.total_multiplicity(), p.length());
    }
}

TEST(partition_properties, addition_is_a_commutative_monoid) {
    std::mt19937_64 rng(0x5eed0003);
    for (int trial = 0; trial < 300; ++trial) {
        const Partition a = oracle::random_partition(rng, 30);
        const Partition b = oracle::random_partition(rng, 30);
        const Partition c = oracle::random_partition(rng, 30);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a + Partition(), a);
        ASSERT_EQ(Partition() + a, a);
        ASSERT_EQ((a + b).size(), a.size() + b.size());
    }
}

TEST(partition_properties, split_then_fold_reproduces) {
    std::mt19937_64 rng(0x5eed0004);
    for (int trial = 0; trial < 300; ++trial) {
        const Partition p = oracle::random_partition(rng, 40);
        std::vector<std::size_t> cuts;
        for (std::size_t i = 1; i < p.length(); ++i) {
            if (rng() % 3 == 0) cuts.push_back(i);
        }
        Partition folded;
        for (const Partition &piece : split_contiguous(p, cuts)) {
            folded = folded + piece;
        }
        ASSERT_EQ(folded, p);
    }
}
