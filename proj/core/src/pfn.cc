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

#include "partition_lab/pfn.h"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <numeric>

#include <boost/math/constants/constants.hpp>

#include "partition_lab/error.h"

namespace partition_lab {

namespace {

// mpfr_float's default precision is process-wide; every evaluation pins it
// for its own duration under this lock.
std::recursive_mutex &precision_mutex() {
    static std::recursive_mutex m;
    return m;
}

class PrecisionScope {
   public:
    explicit PrecisionScope(unsigned digits) : lock_(precision_mutex()), saved_(Real::default_precision()) {
        if (digits < 20) {
            throw Error(Errc::InvalidArgument, "working precision below 20 digits");
        }
        Real::default_precision(digits);
    }
    ~PrecisionScope() {
        Real::default_precision(saved_);
    }
    PrecisionScope(const PrecisionScope &) = delete;
    PrecisionScope &operator=(const PrecisionScope &) = delete;

   private:
    std::lock_guard<std::recursive_mutex> lock_;
    unsigned saved_;
};

Real to_real(const Rational &q) {
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

Real pow10(long e) {
    return boost::multiprecision::pow(Real(10), e);
}

// Lehmer's bound on |p(n) - (sum of the first N terms)|:
//   C / sqrt(N) + D sqrt(N / (n - 1)) sinh(pi sqrt(2n/3) / N),
// C = 44 pi^2 / (225 sqrt 3), D = pi sqrt 2 / 75. n = 1 uses n - 1 := 1.
Real remainder_bound(std::uint64_t n, std::uint64_t terms) {
    using boost::multiprecision::sinh;
    using boost::multiprecision::sqrt;
    const Real pi = boost::math::constants::pi<Real>();
    const Real big_n(terms);
    const Real c = 44 * pi * pi / (225 * sqrt(Real(3)));
    const Real d = pi * sqrt(Real(2)) / 75;
    const Real shifted(n > 1 ? n - 1 : 1);
    return c / sqrt(big_n) +
           d * sqrt(big_n / shifted) * sinh(pi * sqrt(Real(2 * n) / 3) / big_n);
}

BigInt nearest_integer(const Real &x) {
    BigInt out;
    mpfr_get_z(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

}  // namespace

Rational dedekind_sum(std::uint64_t h, std::uint64_t k) {
    if (k == 0) {
        throw Error(Errc::InvalidArgument, "k must be positive");
    }
    if (k == 1) {
        return Rational(0);
    }
    h %= k;
    if (std::gcd(h, k) != 1) {
        throw Error(Errc::NotCoprime,
                    "gcd(" + std::to_string(h) + ", " + std::to_string(k) + ") != 1");
    }
    // With r = h mu mod k (never 0 since gcd = 1 and 0 < mu < k), the
    // product of sawtooths is (2 mu - k)(2 r - k) / (4 k^2).
    BigInt numerator = 0;
    const BigInt kk(k);
    for (std::uint64_t mu = 1; mu < k; ++mu) {
        const std::uint64_t r = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(h) * mu) % k);
        numerator += (2 * BigInt(mu) - kk) * (2 * BigInt(r) - kk);
    }
    return Rational(numerator, 4 * kk * kk);
}

Real kloosterman_like_sum(std::uint64_t n, std::uint64_t k, unsigned digits) {
    if (k == 0) {
        throw Error(Errc::InvalidArgument, "k must be positive");
    }
    PrecisionScope scope(digits);
    if (k == 1) {
        return Real(1);
    }
    const Real pi_value = boost::math::constants::pi<Real>();
    Real re = 0;
    Real im = 0;
    const std::uint64_t n_mod_k = n % k;
    for (std::uint64_t h = 1; h < k; ++h) {
        if (std::gcd(h, k) != 1) {
            continue;
        }
        // Phase in units of pi, reduced exactly into [0, 2).
        Rational phase = dedekind_sum(h, k) -
                         Rational(BigInt(2) * BigInt(n_mod_k) * BigInt(h), BigInt(k));
        BigInt turns = boost::multiprecision::numerator(phase) /
                       (2 * boost::multiprecision::denominator(phase));
        phase -= Rational(2 * turns);
        while (phase < 0) {
            phase += 2;
        }
        while (phase >= 2) {
            phase -= 2;
        }
        const Real angle = pi_value * to_real(phase);
        re += boost::multiprecision::cos(angle);
        im += boost::multiprecision::sin(angle);
    }
    if (boost::multiprecision::abs(im) >= pow10(-static_cast<long>(digits) + 10)) {
        throw Error(Errc::ImaginaryResidueTooLarge,
                    "Im A_" + std::to_string(k) + "(" + std::to_string(n) + ") = " + im.str(6));
    }
    return re;
}

Real rademacher_term(std::uint64_t n, std::uint64_t k, unsigned digits) {
    if (n == 0 || k == 0) {
        throw Error(Errc::InvalidArgument, "rademacher_term needs n >= 1 and k >= 1");
    }
    PrecisionScope scope(digits);
    const Real a = kloosterman_like_sum(n, k, digits);
    if (a == 0) {
        return Real(0);
    }
    using boost::multiprecision::cosh;
    using boost::multiprecision::sinh;
    using boost::multiprecision::sqrt;
    const Real pi = boost::math::constants::pi<Real>();
    const Real u = Real(n) - Real(1) / 24;
    const Real c = pi / Real(k) * sqrt(Real(2) / 3);
    const Real root_u = sqrt(u);
    const Real x = c * root_u;
    const Real derivative = c * cosh(x) / (2 * u) - sinh(x) / (2 * u * root_u);
    return a * sqrt(Real(k)) * derivative / (pi * sqrt(Real(2)));
}

RademacherResult rademacher_p(std::uint64_t n, std::optional<std::uint64_t> k_max,
                              unsigned digits) {
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "rademacher_p needs n >= 1");
    }
    if (k_max && *k_max == 0) {
        throw Error(Errc::InvalidArgument, "k_max must be positive");
    }
    PrecisionScope scope(digits);
    RademacherResult out;
    out.n = n;
    out.digits = digits;
    out.partial_sum = 0;

    // Hard stop for the heuristic mode; the series converges long before.
    const std::uint64_t cap = k_max ? *k_max
                                    : 20 + 2 * static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    const Real half = Real(1) / 2;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        Real term = rademacher_term(n, k, digits);
        out.partial_sum += term;
        out.terms.push_back({k, std::move(term)});

        out.rounded = nearest_integer(out.partial_sum);
        out.distance = boost::multiprecision::abs(out.partial_sum - Real(out.rounded));
        out.tail_estimate = remainder_bound(n, k);
        out.precision_error = (boost::multiprecision::abs(out.partial_sum) + 1) *
                              pow10(-static_cast<long>(digits)) * Real(k + 1);
        out.certified = out.distance + out.tail_estimate + out.precision_error < half;

        if (out.precision_error >= Real(1) / 10) {
            throw Error(Errc::PrecisionExhausted,
                        "p(" + std::to_string(n) + ") needs more than " + std::to_string(digits) +
                            " digits");
        }
        // A_k(n) vanishes for many k; a zero term says nothing about the tail.
        const Real &last = out.terms.back().value;
        if (!k_max && k >= 5 && last != 0 && boost::multiprecision::abs(last) < Real(1) / 10 &&
            out.certified) {
            break;
        }
    }
    return out;
}

bool CongruenceReport::all_zero() const {
    for (const CongruenceCheck &c : checks) {
        if (c.residue != 0) {
            return false;
        }
    }
    return true;
}

namespace {

CongruenceCheck check_argument(std::uint64_t argument, std::uint64_t modulus) {
    const BigInt residue = p_exact(argument) % modulus;
    return {argument, residue.convert_to<std::uint64_t>()};
}

}  // namespace

CongruenceReport scan_congruences(const CongruenceFamily &family, std::size_t count) {
    if (family.modulus == 0) {
        throw Error(Errc::InvalidArgument, "modulus must be positive");
    }
    CongruenceReport report{family, {}};
    for (std::size_t m = 0; m < count; ++m) {
        report.checks.push_back(check_argument(family.lambda + m * family.step, family.modulus));
    }
    return report;
}

CongruenceReport scan_congruences_up_to(const CongruenceFamily &family,
                                        std::uint64_t max_argument) {
    if (family.modulus == 0 || family.step == 0) {
        throw Error(Errc::InvalidArgument, "modulus and step must be positive");
    }
    CongruenceReport report{family, {}};
    for (std::uint64_t arg = family.lambda; arg <= max_argument; arg += family.step) {
        report.checks.push_back(check_argument(arg, family.modulus));
    }
    return report;
}

std::vector<NamedList> classical_congruence_lists() {
    return {
        {{5, 4, 5, "p(4), p(9), p(14), p(19), ... mod 5"}, 4},
        {{7, 5, 7, "p(5), p(12), p(19), p(26), ... mod 7"}, 4},
        {{11, 6, 11, "p(6), p(17), p(28), p(39), ... mod 11"}, 4},
        {{25, 24, 25, "p(24), p(49), p(74), p(99), ... mod 25"}, 4},
        {{35, 19, 35, "p(19), p(54), p(89), p(124), ... mod 35"}, 4},
        {{49, 47, 49, "p(47), p(96), p(145), p(194), ... mod 49"}, 4},
        {{55, 39, 55, "p(39), p(94), p(149), ... mod 55"}, 3},
        {{77, 61, 77, "p(61), p(138), ... mod 77"}, 2},
        {{121, 116, 121, "p(116), ... mod 121"}, 1},
        {{125, 99, 125, "p(99), ... mod 125"}, 1},
    };
}

std::vector<CongruenceFamily> ramanujan_families() {
    return {
        {5, 4, 5, "p(5m+4) mod 5"},
        {7, 5, 7, "p(7m+5) mod 7"},
        {25, 24, 25, "p(25m+24) mod 25"},
        {49, 47, 49, "p(49m+47) mod 49"},
    };
}

CongruenceFamily atkin_family(std::uint64_t delta) {
    if (delta == 0) {
        throw Error(Errc::InvalidArgument, "delta must be positive");
    }
    std::uint64_t rest = delta;
    unsigned exponents[3] = {0, 0, 0};
    const std::uint64_t primes[3] = {5, 7, 11};
    for (int i = 0; i < 3; ++i) {
        while (rest % primes[i] == 0) {
            rest /= primes[i];
            ++exponents[i];
        }
    }
    if (rest != 1) {
        throw Error(Errc::InvalidArgument,
                    std::to_string(delta) + " is not of the form 5^a 7^b 11^c");
    }
    // 24 is invertible modulo any such delta; search the residue directly.
    std::uint64_t lambda = 0;
    while ((24 * lambda) % delta != 1 % delta) {
        ++lambda;
    }
    const unsigned seven_exponent = exponents[1] == 0 ? 0 : (exponents[1] + 2) / 2;
    std::uint64_t modulus = 1;
    for (unsigned i = 0; i < exponents[0]; ++i) modulus *= 5;
    for (unsigned i = 0; i < seven_exponent; ++i) modulus *= 7;
    for (unsigned i = 0; i < exponents[2]; ++i) modulus *= 11;
    return {modulus, lambda, delta,
            "delta = " + std::to_string(delta) + ", 24 lambda = 1 mod delta, lambda = " +
                std::to_string(lambda)};
}

CongruenceCheck chowla_check() {
    return check_argument(243, 343);
}

}  // namespace partition_lab
