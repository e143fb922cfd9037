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

#include "partition_lab/enumeration.h"

#include <utility>

#include "partition_lab/error.h"
#include "partition_lab/partition.h"

namespace partition_lab {

PartitionStream::PartitionStream(Mode mode, Part target, Predicate keep)
    : mode_(mode), target_(target), keep_(std::move(keep)) {
}

PartitionStream PartitionStream::of_size(Part n) {
    return PartitionStream(Mode::Size, n, nullptr);
}

PartitionStream PartitionStream::of_size(Part n, Predicate keep) {
    return PartitionStream(Mode::Size, n, std::move(keep));
}

PartitionStream PartitionStream::of_dimension(Part d) {
    if (d == 0) {
        throw Error(Errc::InvalidArgument, "dimension must be positive");
    }
    return PartitionStream(Mode::Dimension, d, nullptr);
}

PartitionStream PartitionStream::self_conjugate_of_dimension(Part d) {
    if (d == 0) {
        throw Error(Errc::InvalidArgument, "dimension must be positive");
    }
    return PartitionStream(Mode::Dimension, d, is_self_conjugate_oracle);
}

bool PartitionStream::advance() {
    if (!started_) {
        started_ = true;
        if (mode_ == Mode::Size) {
            if (target_ > 0) {
                cursor_.assign(1, target_);
            }
        } else {
            cursor_.assign(target_, target_);
        }
        return true;
    }
    if (mode_ == Mode::Size) {
        // Find the rightmost part > 1, lower it by one and refill the tail
        // greedily with copies of the lowered value.
        Part freed = 0;
        while (!cursor_.empty() && cursor_.back() == 1) {
            cursor_.pop_back();
            ++freed;
        }
        if (cursor_.empty()) {
            return false;
        }
        const Part v = --cursor_.back();
        ++freed;
        while (freed >= v) {
            cursor_.push_back(v);
            freed -= v;
        }
        if (freed > 0) {
            cursor_.push_back(freed);
        }
        return true;
    }
    // Dimension: fixed length d, first part pinned at d, the remaining d-1
    // parts range over non-increasing sequences in [1, d].
    std::size_t i = cursor_.size();
    while (i > 1 && cursor_[i - 1] == 1) {
        --i;
    }
    if (i <= 1) {
        return false;
    }
    const Part v = --cursor_[i - 1];
    for (std::size_t j = i; j < cursor_.size(); ++j) {
        cursor_[j] = v;
    }
    return true;
}

std::optional<Partition> PartitionStream::next() {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        Partition p = Partition::from_parts(cursor_);
        if (!keep_ || keep_(p)) {
            return p;
        }
    }
    return std::nullopt;
}

PartitionStream partitions_of(Part n) {
    return PartitionStream::of_size(n);
}

PartitionStream partitions_of_dimension(Part d) {
    return PartitionStream::of_dimension(d);
}

PartitionStream self_conjugate_of_dimension(Part d) {
    return PartitionStream::self_conjugate_of_dimension(d);
}

std::uint64_t count(PartitionStream stream) {
    std::uint64_t total = 0;
    while (stream.next()) {
        ++total;
    }
    return total;
}

std::vector<Partition> materialize(PartitionStream stream) {
    std::vector<Partition> out;
    while (auto p = stream.next()) {
        out.push_back(std::move(*p));
    }
    return out;
}

bool satisfies(const Partition &p, Restriction r) {
    switch (r) {
        case Restriction::None:
            return true;
        case Restriction::OddPartsOnly:
            for (Part v : p) {
                if (v % 2 == 0) {
                    return false;
                }
            }
            return true;
        case Restriction::DistinctParts:
            for (std::size_t i = 1; i < p.length(); ++i) {
                if (p[i] == p[i - 1]) {
                    return false;
                }
            }
            return true;
    }
    return false;
}

std::uint64_t count_restricted(Part n, Restriction r) {
    if (n > kMaxExhaustiveSize) {
        throw Error(Errc::TooLargeForExhaustion,
                    "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxExhaustiveSize));
    }
    if (r == Restriction::None) {
        return count(partitions_of(n));
    }
    return count(PartitionStream::of_size(n, [r](const Partition &p) { return satisfies(p, r); }));
}

}  // namespace partition_lab
