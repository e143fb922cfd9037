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

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "partition_lab/error.h"

namespace partition_lab {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(Errc::InvalidArgument, "a series needs at least the constant coefficient");
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t exponent, long sign) {
    TruncatedSeries s(order);
    if (exponent <= order) {
        s.coeffs_[exponent] = sign;
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    std::vector<BigInt> c(coeffs_.begin(),
                          coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

void TruncatedSeries::multiply_geometric(std::size_t step) {
    if (step == 0) {
        throw Error(Errc::InvalidArgument, "1/(1 - q^0) diverges");
    }
    // c / (1 - q^step) = c + q^step * (c / (1 - q^step)): one running sum.
    for (std::size_t e = step; e < coeffs_.size(); ++e) {
        coeffs_[e] += coeffs_[e - step];
    }
}

void TruncatedSeries::multiply_finite_geometric(std::size_t step, std::size_t terms) {
    if (step == 0) {
        throw Error(Errc::InvalidArgument, "factor step must be positive");
    }
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        std::size_t e = i;
        for (std::size_t k = 0; k <= terms && e < coeffs_.size(); ++k, e += step) {
            out[e] += coeffs_[i];
        }
    }
    coeffs_ = std::move(out);
}

void TruncatedSeries::multiply_one_minus(std::size_t step) {
    // Descending so every read sees the unmodified coefficient.
    for (std::size_t e = coeffs_.size(); e-- > step;) {
        coeffs_[e] -= coeffs_[e - step];
    }
}

PartSet PartSet::all_positive() {
    return PartSet(Kind::AllPositive, {});
}

PartSet PartSet::odds() {
    return PartSet(Kind::Odds, {});
}

PartSet PartSet::explicit_set(std::vector<Part> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.front() == 0) {
        throw Error(Errc::NonPositivePart, "part sets hold positive integers only");
    }
    return PartSet(Kind::Explicit, std::move(members));
}

bool PartSet::contains(Part v) const {
    switch (kind_) {
        case Kind::AllPositive:
            return v >= 1;
        case Kind::Odds:
            return v % 2 == 1;
        case Kind::Explicit:
            return std::binary_search(members_.begin(), members_.end(), v);
    }
    return false;
}

std::vector<Part> PartSet::members_up_to(Part bound) const {
    std::vector<Part> out;
    switch (kind_) {
        case Kind::AllPositive:
            for (Part v = 1; v <= bound; ++v) {
                out.push_back(v);
            }
            break;
        case Kind::Odds:
            for (Part v = 1; v <= bound; v += 2) {
                out.push_back(v);
            }
            break;
        case Kind::Explicit:
            for (Part v : members_) {
                if (v > bound) {
                    break;
                }
                out.push_back(v);
            }
            break;
    }
    return out;
}

TruncatedSeries series_product_unrestricted(const PartSet &parts, std::size_t order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (Part v : parts.members_up_to(order)) {
        s.multiply_geometric(v);
    }
    return s;
}

TruncatedSeries series_product_bounded_direct(const PartSet &parts, Part d, std::size_t order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (Part v : parts.members_up_to(order)) {
        s.multiply_finite_geometric(v, d);
    }
    return s;
}

TruncatedSeries series_product_bounded_quotient(const PartSet &parts, Part d, std::size_t order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (Part v : parts.members_up_to(order)) {
        if ((d + 1) * v <= order) {
            s.multiply_one_minus((d + 1) * v);
        }
        s.multiply_geometric(v);
    }
    return s;
}

TruncatedSeries series_product_bounded(const PartSet &parts, Part d, std::size_t order) {
    if (d == 0) {
        throw Error(Errc::InvalidArgument, "multiplicity bound must be positive");
    }
    TruncatedSeries direct = series_product_bounded_direct(parts, d, order);
    const TruncatedSeries quotient = series_product_bounded_quotient(parts, d, order);
    if (direct != quotient) {
        throw Error(Errc::FormMismatch, "finite-geometric and quotient products disagree");
    }
    return direct;
}

namespace {

class ProductCache {
   public:
    using Key = std::tuple<PartSet, Part, std::size_t>;

    std::shared_ptr<const TruncatedSeries> find(const Key &key) const {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : it->second;
    }

    std::shared_ptr<const TruncatedSeries> insert(const Key &key,
                                                  std::shared_ptr<const TruncatedSeries> value) {
        std::unique_lock lock(mutex_);
        return entries_.try_emplace(key, std::move(value)).first->second;
    }

   private:
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const TruncatedSeries>> entries_;
};

ProductCache &product_cache() {
    static ProductCache cache;
    return cache;
}

}  // namespace

std::shared_ptr<const TruncatedSeries> memoized_product(const PartSet &parts, Part d,
                                                        std::size_t order) {
    ProductCache::Key key{parts, d, order};
    if (auto hit = product_cache().find(key)) {
        return hit;
    }
    auto computed = std::make_shared<const TruncatedSeries>(
        d == 0 ? series_product_unrestricted(parts, order)
               : series_product_bounded(parts, d, order));
    return product_cache().insert(key, std::move(computed));
}

BigInt p_exact(Part n) {
    // Round the order up to a power of two so nearby queries share one entry.
    std::size_t order = 64;
    while (order < n) {
        order *= 2;
    }
    return memoized_product(PartSet::all_positive(), 0, order)->coeff(n);
}

BigInt p_exact_recurrence(Part n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (Part m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (Part k = 1;; ++k) {
            const Part g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            const Part g2 = k * (3 * k + 1) / 2;
            BigInt term = p[m - g1];
            if (g2 <= m) {
                term += p[m - g2];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[m] = std::move(acc);
    }
    return p[n];
}

}  // namespace partition_lab
