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

#ifndef PARTITION_LAB_ENUMERATION_H
#define PARTITION_LAB_ENUMERATION_H

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

#include "partition_lab/partition.h"

namespace partition_lab {

/// Exhaustion guard for count_restricted.
inline constexpr Part kMaxExhaustiveSize = 60;

/// A resumable generator of partitions in decreasing lexicographic order.
///
/// The cursor is the last partition produced; `next()` advances it in place.
/// A stream is single-consumer. Independent streams may be used from
/// different threads.
class PartitionStream {
   public:
    using Predicate = std::function<bool(const Partition &)>;

    /// Every partition of n. n = 0 yields the empty partition once.
    static PartitionStream of_size(Part n);
    /// Every partition of n accepted by `keep`.
    static PartitionStream of_size(Part n, Predicate keep);
    /// Every partition whose first part and length both equal d (d >= 1).
    static PartitionStream of_dimension(Part d);
    /// The self-conjugate partitions of dimension d.
    static PartitionStream self_conjugate_of_dimension(Part d);

    std::optional<Partition> next();

    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition *;
        using reference = const Partition &;

        iterator() = default;
        explicit iterator(PartitionStream *stream) : stream_(stream) {
            ++*this;
        }
        reference operator*() const {
            return *current_;
        }
        pointer operator->() const {
            return &*current_;
        }
        iterator &operator++() {
            current_ = stream_->next();
            if (!current_) {
                stream_ = nullptr;
            }
            return *this;
        }
        void operator++(int) {
            ++*this;
        }
        friend bool operator==(const iterator &a, const iterator &b) {
            return a.stream_ == b.stream_;
        }

       private:
        PartitionStream *stream_ = nullptr;
        std::optional<Partition> current_;
    };

    iterator begin() {
        return iterator(this);
    }
    iterator end() {
        return iterator();
    }

   private:
    enum class Mode { Size, Dimension };
    PartitionStream(Mode mode, Part target, Predicate keep);
    bool advance();

    Mode mode_;
    Part target_;
    Predicate keep_;
    std::vector<Part> cursor_;
    bool started_ = false;
    bool done_ = false;
};

PartitionStream partitions_of(Part n);
PartitionStream partitions_of_dimension(Part d);
PartitionStream self_conjugate_of_dimension(Part d);

/// Drains a stream.
std::uint64_t count(PartitionStream stream);
std::vector<Partition> materialize(PartitionStream stream);

enum class Restriction { None, OddPartsOnly, DistinctParts };

bool satisfies(const Partition &p, Restriction r);

/// Counts partitions of n satisfying `r` by exhaustion.
/// Throws Errc::TooLargeForExhaustion for n > kMaxExhaustiveSize.
std::uint64_t count_restricted(Part n, Restriction r);

}  // namespace partition_lab

#endif  // PARTITION_LAB_ENUMERATION_H
