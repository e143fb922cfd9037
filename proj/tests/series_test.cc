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

#include "partition_lab/series.h"

#include <random>
#include <thread>

#include "gtest/gtest.h"
#include "partition_lab/enumeration.h"
#include "partition_lab/error.h"

using namespace partition_lab;

namespace {

TruncatedSeries random_series(std::mt19937_64 &rng, std::size_t order) {
    std::vector<BigInt> c(order + 1);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (BigInt &x : c) {
        x = BigInt(dist(rng)) * BigInt(dist(rng)) * BigInt(dist(rng));
    }
    return TruncatedSeries(std::move(c));
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST(truncated_series, basic_arithmetic) {
    const TruncatedSeries a(ints({1, 2, 3}));
    const TruncatedSeries b(ints({4, 5, 6, 7}));
    EXPECT_EQ((a + b).coeffs(), ints({5, 7, 9}));
    EXPECT_EQ((a - b).coeffs(), ints({-3, -3, -3}));
    EXPECT_EQ((a * b).coeffs(), ints({4, 13, 28}));
    EXPECT_EQ(TruncatedSeries::monomial(3, 5).coeffs(), ints({0, 0, 0, 0}));
    EXPECT_EQ(TruncatedSeries::monomial(3, 2, -1).coeffs(), ints({0, 0, -1, 0}));
    EXPECT_THROW(TruncatedSeries(std::vector<BigInt>{}), Error);
}

TEST(truncated_series, geometric_factors) {
    TruncatedSeries s = TruncatedSeries::one(7);
    s.multiply_geometric(3);
    EXPECT_EQ(s.coeffs(), ints({1, 0, 0, 1, 0, 0, 1, 0}));
    TruncatedSeries f = TruncatedSeries::one(7);
    f.multiply_finite_geometric(2, 2);
    EXPECT_EQ(f.coeffs(), ints({1, 0, 1, 0, 1, 0, 0, 0}));
    TruncatedSeries m = TruncatedSeries::one(4);
    m.multiply_one_minus(1);
    EXPECT_EQ(m.coeffs(), ints({1, -1, 0, 0, 0}));
}

TEST(series_product_unrestricted, examples) {
    EXPECT_EQ(series_product_unrestricted(PartSet::all_positive(), 7).coeffs(),
              ints({1, 1, 2, 3, 5, 7, 11, 15}));
    EXPECT_EQ(series_product_unrestricted(PartSet::odds(), 7).coeff(7), 5);
    EXPECT_EQ(series_product_unrestricted(PartSet::explicit_set({}), 9),
              TruncatedSeries::one(9));
}

TEST(series_product_unrestricted, explicit_set_matches_filtered_exhaustion) {
    const PartSet h = PartSet::explicit_set({5, 2, 3, 2});
    EXPECT_TRUE(h.contains(3));
    EXPECT_FALSE(h.contains(4));
    const TruncatedSeries s = series_product_unrestricted(h, 30);
    for (Part n = 0; n <= 30; ++n) {
        const std::uint64_t direct = count(PartitionStream::of_size(n, [&](const Partition &p) {
            for (Part v : p) {
                if (!h.contains(v)) return false;
            }
            return true;
        }));
        EXPECT_EQ(s.coeff(n), direct) << "n=" << n;
    }
    EXPECT_THROW(PartSet::explicit_set({0, 1}), Error);
}

TEST(series_product_bounded, examples) {
    EXPECT_EQ(series_product_bounded(PartSet::all_positive(), 1, 7).coeff(7), 5);
    EXPECT_EQ(series_product_bounded(PartSet::all_positive(), 1, 6).coeff(6), 4);
    EXPECT_EQ(series_product_bounded(PartSet::all_positive(), 40, 40),
              series_product_unrestricted(PartSet::all_positive(), 40));
    EXPECT_THROW(series_product_bounded(PartSet::all_positive(), 0, 5), Error);
}

TEST(series_product_bounded, two_forms_agree_to_order_200) {
    for (Part d : {1, 2, 3}) {
        for (const PartSet &h : {PartSet::all_positive(), PartSet::odds()}) {
            EXPECT_EQ(series_product_bounded_direct(h, d, 200),
                      series_product_bounded_quotient(h, d, 200));
        }
    }
}

TEST(series_product_bounded, at_most_d_copies_by_exhaustion) {
    for (Part d : {1, 2, 3}) {
        const TruncatedSeries s = series_product_bounded(PartSet::all_positive(), d, 20);
        for (Part n = 0; n <= 20; ++n) {
            const std::uint64_t direct = count(PartitionStream::of_size(n, [d](const Partition &p) {
                const MultiplicityForm m = to_multiplicities(p);
                for (const partition_lab::Run &r : m.runs()) {
                    if (r.multiplicity > d) return false;
                }
                return true;
            }));
            EXPECT_EQ(s.coeff(n), direct) << "d=" << d << " n=" << n;
        }
    }
}

TEST(p_exact, table) {
    EXPECT_EQ(p_exact(0), 1);
    EXPECT_EQ(p_exact(50), 204226);
    EXPECT_EQ(p_exact(100), 190569292);
    EXPECT_EQ(p_exact(200), BigInt("3972999029388"));
    EXPECT_EQ(p_exact(243), BigInt("133978259344888"));
}

TEST(p_exact_recurrence, table) {
    EXPECT_EQ(p_exact_recurrence(20), 627);
    EXPECT_EQ(p_exact_recurrence(10), 42);
    EXPECT_EQ(p_exact_recurrence(1), 1);
    EXPECT_EQ(p_exact_recurrence(0), 1);
}

TEST(series_properties, triple_agreement) {
    for (Part n = 0; n <= 60; ++n) {
        const BigInt s = p_exact(n);
        EXPECT_EQ(s, p_exact_recurrence(n)) << "n=" << n;
        EXPECT_EQ(s, count(partitions_of(n))) << "n=" << n;
    }
    for (Part n : {100, 300, 500, 777}) {
        EXPECT_EQ(p_exact(n), p_exact_recurrence(n)) << "n=" << n;
    }
}

TEST(series_properties, euler_to_order_300) {
    const TruncatedSeries odd = series_product_unrestricted(PartSet::odds(), 300);
    const TruncatedSeries distinct = series_product_bounded(PartSet::all_positive(), 1, 300);
    EXPECT_EQ(odd, distinct);
}

TEST(series_properties, ring_laws_on_random_triples) {
    std::mt19937_64 rng(0x5eed0201);
    for (int trial = 0; trial < 20; ++trial) {
        const TruncatedSeries a = random_series(rng, 64);
        const TruncatedSeries b = random_series(rng, 64);
        const TruncatedSeries c = random_series(rng, 64);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(series_properties, euler_product_inverts) {
    const std::size_t order = 150;
    TruncatedSeries s = series_product_unrestricted(PartSet::all_positive(), order);
    for (std::size_t v = 1; v <= order; ++v) {
        TruncatedSeries factor = TruncatedSeries::one(order) - TruncatedSeries::monomial(order, v);
        s = s * factor;
    }
    EXPECT_EQ(s, TruncatedSeries::one(order));
}

TEST(memoized_product, shared_entries_and_concurrent_readers) {
    const auto first = memoized_product(PartSet::odds(), 0, 120);
    const auto second = memoized_product(PartSet::odds(), 0, 120);
    EXPECT_EQ(first.get(), second.get());

    std::vector<BigInt> results(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < results.size(); ++i) {
        pool.emplace_back([&results, i] { results[i] = p_exact(400 + i); });
    }
    for (auto &t : pool) t.join();
    for (std::size_t i = 0; i < results.size(); ++i) {
        EXPECT_EQ(results[i], p_exact_recurrence(400 + i));
    }
}
