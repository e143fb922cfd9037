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

#ifndef PARTITION_LAB_SERIES_H
#define PARTITION_LAB_SERIES_H

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "partition_lab/partition.h"

namespace partition_lab {

using BigInt = boost::multiprecision::mpz_int;

/// A power series in q with exact integer coefficients, truncated after
/// q^order. Binary operations truncate to the smaller order.
class TruncatedSeries {
   public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    explicit TruncatedSeries(std::vector<BigInt> coeffs);

    static TruncatedSeries one(std::size_t order);
    /// sign * q^exponent, or zero when exponent > order.
    static TruncatedSeries monomial(std::size_t order, std::size_t exponent, long sign = 1);

    std::size_t order() const noexcept {
        return coeffs_.size() - 1;
    }
    const BigInt &coeff(std::size_t exponent) const {
        return coeffs_.at(exponent);
    }
    const std::vector<BigInt> &coeffs() const noexcept {
        return coeffs_;
    }

    TruncatedSeries truncated(std::size_t order) const;

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
    /// Schoolbook product.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

    /// Multiplies in place by sum_{k>=0} q^{k*step}, i.e. 1/(1 - q^step).
    void multiply_geometric(std::size_t step);
    /// Multiplies in place by 1 + q^step + ... + q^{terms*step}.
    void multiply_finite_geometric(std::size_t step, std::size_t terms);
    /// Multiplies in place by 1 - q^step.
    void multiply_one_minus(std::size_t step);

    bool operator==(const TruncatedSeries &) const = default;

   private:
    std::vector<BigInt> coeffs_;
};

/// A set of allowed part values.
class PartSet {
   public:
    enum class Kind { AllPositive, Odds, Explicit };

    static PartSet all_positive();
    static PartSet odds();
    /// Sorted and de-duplicated; zero is rejected.
    static PartSet explicit_set(std::vector<Part> members);

    Kind kind() const noexcept {
        return kind_;
    }
    bool contains(Part v) const;
    std::vector<Part> members_up_to(Part bound) const;

    auto operator<=>(const PartSet &) const = default;

   private:
    PartSet(Kind kind, std::vector<Part> members) : kind_(kind), members_(std::move(members)) {
    }
    Kind kind_;
    std::vector<Part> members_;
};

/// prod_{v in H, v <= order} 1/(1 - q^v): coefficient n counts partitions
/// of n with parts in H.
TruncatedSeries series_product_unrestricted(const PartSet &parts, std::size_t order);

/// prod_{v in H} (1 + q^v + ... + q^{d v}) built factor by factor.
TruncatedSeries series_product_bounded_direct(const PartSet &parts, Part d, std::size_t order);
/// prod_{v in H} (1 - q^{(d+1) v}) / (1 - q^v).
TruncatedSeries series_product_bounded_quotient(const PartSet &parts, Part d, std::size_t order);

/// Coefficient n counts partitions of n with parts in H, none repeated more
/// than d times. Builds both forms above and throws Errc::FormMismatch if
/// they disagree.
TruncatedSeries series_product_bounded(const PartSet &parts, Part d, std::size_t order);

/// Memoized variants. The cache is keyed by (part set, bound, order); d = 0
/// selects the unrestricted product. Safe for concurrent callers.
std::shared_ptr<const TruncatedSeries> memoized_product(const PartSet &parts, Part d,
                                                        std::size_t order);

/// p(n) from the coefficients of prod 1/(1 - q^v), memoized.
BigInt p_exact(Part n);

/// p(n) from the pentagonal-number recurrence. No series arithmetic and no
/// shared state.
BigInt p_exact_recurrence(Part n);

}  // namespace partition_lab

#endif  // PARTITION_LAB_SERIES_H
