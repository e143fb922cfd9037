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

#ifndef PARTITION_LAB_PARTITION_H
#define PARTITION_LAB_PARTITION_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace partition_lab {

using Part = std::uint64_t;

/// An integer partition: a non-increasing sequence of positive parts,
/// stored largest-first. The empty sequence is the empty partition.
///
/// Instances are immutable once built. Construction goes through the
/// validating factories below; `from_parts` rejects unordered input while
/// `from_unordered` sorts it.
class Partition {
   public:
    Partition() = default;

    static Partition from_parts(std::span<const std::int64_t> raw);
    static Partition from_parts(std::initializer_list<std::int64_t> raw);
    static Partition from_parts(std::vector<Part> parts);
    static Partition from_unordered(std::span<const std::int64_t> raw);
    static Partition from_unordered(std::vector<Part> parts);

    const std::vector<Part> &parts() const noexcept {
        return parts_;
    }
    std::size_t length() const noexcept {
        return parts_.size();
    }
    bool empty() const noexcept {
        return parts_.empty();
    }
    /// Sum of the parts.
    Part size() const noexcept;
    /// Largest part, or 0 for the empty partition.
    Part first_part() const noexcept {
        return parts_.empty() ? 0 : parts_.front();
    }
    Part operator[](std::size_t i) const {
        return parts_[i];
    }
    auto begin() const noexcept {
        return parts_.begin();
    }
    auto end() const noexcept {
        return parts_.end();
    }

    bool operator==(const Partition &) const = default;
    std::strong_ordering operator<=>(const Partition &) const = default;

   private:
    explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    }
    std::vector<Part> parts_;
};

struct Run {
    Part value;
    Part multiplicity;
    bool operator==(const Run &) const = default;
};

/// Run-length form of a partition: (distinct part, multiplicity) pairs with
/// strictly decreasing values.
class MultiplicityForm {
   public:
    MultiplicityForm() = default;
    static MultiplicityForm from_runs(std::vector<Run> runs);

    const std::vector<Run> &runs() const noexcept {
        return runs_;
    }
    bool empty() const noexcept {
        return runs_.empty();
    }
    /// Number of parts of the expanded partition.
    Part total_multiplicity() const noexcept;

    bool operator==(const MultiplicityForm &) const = default;

   private:
    explicit MultiplicityForm(std::vector<Run> runs) : runs_(std::move(runs)) {
    }
    std::vector<Run> runs_;
};

MultiplicityForm to_multiplicities(const Partition &p);
Partition from_multiplicities(const MultiplicityForm &m);

/// Transpose of the diagram: part k of the result counts parts of `p` >= k.
Partition conjugate(const Partition &p);

/// Ground truth: conjugate and compare.
bool is_self_conjugate_oracle(const Partition &p);

/// d when the first part equals the number of parts, absent otherwise.
/// Throws Errc::EmptyPartition.
std::optional<Part> dimension(const Partition &p);

/// Multiset union of parts, re-sorted.
Partition add(const Partition &a, const Partition &b);
inline Partition operator+(const Partition &a, const Partition &b) {
    return add(a, b);
}

/// Contiguous slices of `p` split before each cut index. Cuts must be
/// strictly increasing and lie in [1, length - 1].
std::vector<Partition> split_contiguous(const Partition &p, std::span<const std::size_t> cuts);

/// One row of '#' per part, newline-terminated.
std::string render_young(const Partition &p);
/// One row of space-separated '*' per part, newline-terminated.
std::string render_ferrers(const Partition &p);

/// "[4,3,2,2,1]"
std::string to_string(const Partition &p);

}  // namespace partition_lab

#endif  // PARTITION_LAB_PARTITION_H
