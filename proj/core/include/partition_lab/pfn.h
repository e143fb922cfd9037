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

#ifndef PARTITION_LAB_PFN_H
#define PARTITION_LAB_PFN_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "partition_lab/series.h"

namespace partition_lab {

using Real = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;

/// Significant decimal digits used when the caller does not ask for more.
inline constexpr unsigned kDefaultDigits = 40;

/// s(h, k) = sum_{mu=1}^{k-1} ((mu/k)) ((h mu/k)), exact. h is taken mod k.
/// k = 1 gives 0. Throws Errc::NotCoprime when gcd(h, k) != 1 for k > 1.
Rational dedekind_sum(std::uint64_t h, std::uint64_t k);

/// Real part of A_k(n) = sum over h mod k, gcd(h, k) = 1, of
/// exp(pi i s(h, k)) exp(-2 pi i n h / k).
///
/// The imaginary part must vanish; if it exceeds 10^-(digits - 10) the
/// root-of-unity convention is wrong and Errc::ImaginaryResidueTooLarge is
/// thrown.
Real kloosterman_like_sum(std::uint64_t n, std::uint64_t k, unsigned digits = kDefaultDigits);

/// The k-th term of the Rademacher series for p(n), n >= 1:
///   A_k(n) sqrt(k) / (pi sqrt 2) * d/dx [sinh(c sqrt(x - 1/24)) / sqrt(x - 1/24)] at x = n
/// with c = (pi / k) sqrt(2/3). The derivative is taken in closed form.
Real rademacher_term(std::uint64_t n, std::uint64_t k, unsigned digits = kDefaultDigits);

struct RademacherTerm {
    std::uint64_t k;
    Real value;
};

struct RademacherResult {
    std::uint64_t n = 0;
    unsigned digits = 0;
    std::vector<RademacherTerm> terms;
    Real partial_sum;
    BigInt rounded;
    /// |partial_sum - rounded|, always < 1/2.
    Real distance;
    /// Lehmer's bound on the error from stopping after k_used() terms.
    Real tail_estimate;
    /// Accumulated rounding error bound at the working precision.
    Real precision_error;
    /// distance + tail_estimate + precision_error < 1/2.
    bool certified = false;

    std::size_t k_used() const {
        return terms.size();
    }
};

/// Sums the Rademacher series for p(n).
///
/// With `k_max`, exactly k_max terms are summed. Otherwise terms are added
/// until at least five are in, the last is nonzero and below 0.1 in
/// magnitude, and the rounding is certified. If the cap of 20 + 2 sqrt(n)
/// terms is reached first, the result comes back uncertified.
/// Throws Errc::PrecisionExhausted when `digits` cannot resolve the
/// fractional part of the sum.
RademacherResult rademacher_p(std::uint64_t n, std::optional<std::uint64_t> k_max = std::nullopt,
                              unsigned digits = kDefaultDigits);

/// Claims p(lambda + m * step) == 0 (mod modulus) for m = 0, 1, 2, ...
struct CongruenceFamily {
    std::uint64_t modulus;
    std::uint64_t lambda;
    std::uint64_t step;
    std::string description;
};

struct CongruenceCheck {
    std::uint64_t argument;
    std::uint64_t residue;
};

struct CongruenceReport {
    CongruenceFamily family;
    std::vector<CongruenceCheck> checks;
    bool all_zero() const;
};

/// p(lambda + m * step) mod modulus for m = 0 .. count - 1.
CongruenceReport scan_congruences(const CongruenceFamily &family, std::size_t count);

/// Every argument lambda + m * step not exceeding max_argument.
CongruenceReport scan_congruences_up_to(const CongruenceFamily &family,
                                        std::uint64_t max_argument);

/// A family together with how many of its leading arguments are listed.
struct NamedList {
    CongruenceFamily family;
    std::size_t listed;
};

/// The ten classical lists: mod 5, 7, 11, 25, 35, 49, 55, 77, 121, 125.
std::vector<NamedList> classical_congruence_lists();

/// p(5m+4) mod 5, p(7m+5) mod 7, p(25m+24) mod 25, p(49m+47) mod 49.
std::vector<CongruenceFamily> ramanujan_families();

/// For delta = 5^a 7^b 11^c: lambda solves 24 lambda == 1 (mod delta) and
/// the modulus is 5^a 7^floor((b+2)/2) 11^c.
/// Throws Errc::InvalidArgument when delta has other prime factors.
CongruenceFamily atkin_family(std::uint64_t delta);

/// p(243) mod 7^3. Nonzero.
CongruenceCheck chowla_check();

}  // namespace partition_lab

#endif  // PARTITION_LAB_PFN_H
