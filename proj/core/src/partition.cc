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

#include <algorithm>
#include <functional>
#include <numeric>

#include "partition_lab/error.h"

namespace partition_lab {

namespace {

std::vector<Part> checked_positive(std::span<const std::int64_t> raw) {
    std::vector<Part> parts;
    parts.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] <= 0) {
            throw Error(Errc::NonPositivePart,
                        "part " + std::to_string(i) + " is " + std::to_string(raw[i]));
        }
        parts.push_back(static_cast<Part>(raw[i]));
    }
    return parts;
}

}  // namespace

Partition Partition::from_parts(std::span<const std::int64_t> raw) {
    return from_parts(checked_positive(raw));
}

Partition Partition::from_parts(std::initializer_list<std::int64_t> raw) {
    return from_parts(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

Partition Partition::from_parts(std::vector<Part> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) {
            throw Error(Errc::NonPositivePart, "part " + std::to_string(i) + " is 0");
        }
        if (i > 0 && parts[i - 1] < parts[i]) {
            throw Error(Errc::NotNonIncreasing, "part " + std::to_string(i) + " (" +
                                                    std::to_string(parts[i]) + ") exceeds part " +
                                                    std::to_string(i - 1) + " (" +
                                                    std::to_string(parts[i - 1]) + ")");
        }
    }
    return Partition(std::move(parts));
}

Partition Partition::from_unordered(std::span<const std::int64_t> raw) {
    return from_unordered(checked_positive(raw));
}

Partition Partition::from_unordered(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return from_parts(std::move(parts));
}

Part Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), Part{0});
}

MultiplicityForm MultiplicityForm::from_runs(std::vector<Run> runs) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].value == 0 || runs[i].multiplicity == 0) {
            throw Error(Errc::InvalidMultiplicities,
                        "run " + std::to_string(i) + " has a zero value or multiplicity");
        }
        if (i > 0 && runs[i - 1].value <= runs[i].value) {
            throw Error(Errc::InvalidMultiplicities,
                        "run values must strictly decrease at run " + std::to_string(i));
        }
    }
    return MultiplicityForm(std::move(runs));
}

Part MultiplicityForm::total_multiplicity() const noexcept {
    Part total = 0;
    for (const Run &r : runs_) {
        total += r.multiplicity;
    }
    return total;
}

MultiplicityForm to_multiplicities(const Partition &p) {
    std::vector<Run> runs;
    for (Part v : p) {
        if (!runs.empty() && runs.back().value == v) {
            ++runs.back().multiplicity;
        } else {
            runs.push_back({v, 1});
        }
    }
    return MultiplicityForm::from_runs(std::move(runs));
}

Partition from_multiplicities(const MultiplicityForm &m) {
    std::vector<Part> parts;
    parts.reserve(m.total_multiplicity());
    for (const Run &r : m.runs()) {
        parts.insert(parts.end(), r.multiplicity, r.value);
    }
    return Partition::from_parts(std::move(parts));
}

Partition conjugate(const Partition &p) {
    // Column k (1-based) has as many cells as there are parts >= k; since
    // parts are sorted, walk k upward while shrinking the row count.
    std::vector<Part> out;
    out.reserve(p.first_part());
    std::size_t rows = p.length();
    for (Part k = 1; k <= p.first_part(); ++k) {
        while (rows > 0 && p[rows - 1] < k) {
            --rows;
        }
        out.push_back(rows);
    }
    return Partition::from_parts(std::move(out));
}

bool is_self_conjugate_oracle(const Partition &p) {
    return conjugate(p) == p;
}

std::optional<Part> dimension(const Partition &p) {
    if (p.empty()) {
        throw Error(Errc::EmptyPartition, "dimension of the empty partition");
    }
    if (p.first_part() == p.length()) {
        return p.first_part();
    }
    return std::nullopt;
}

Partition add(const Partition &a, const Partition &b) {
    std::vector<Part> merged;
    merged.reserve(a.length() + b.length());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged),
               std::greater<>());
    return Partition::from_parts(std::move(merged));
}

std::vector<Partition> split_contiguous(const Partition &p, std::span<const std::size_t> cuts) {
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
        if (c <= prev || c >= p.length()) {
            throw Error(Errc::CutOutOfRange, "cut " + std::to_string(c) +
                                                 " outside (previous, length) = (" +
                                                 std::to_string(prev) + ", " +
                                                 std::to_string(p.length()) + ")");
        }
        prev = c;
    }
    std::vector<Partition> out;
    out.reserve(cuts.size() + 1);
    std::size_t start = 0;
    auto slice = [&](std::size_t stop) {
        out.push_back(Partition::from_parts(
            std::vector<Part>(p.begin() + static_cast<std::ptrdiff_t>(start),
                              p.begin() + static_cast<std::ptrdiff_t>(stop))));
        start = stop;
    };
    for (std::size_t c : cuts) {
        slice(c);
    }
    slice(p.length());
    return out;
}

std::string render_young(const Partition &p) {
    std::string out;
    for (Part v : p) {
        out.append(v, '#');
        out.push_back('\n');
    }
    return out;
}

std::string render_ferrers(const Partition &p) {
    std::string out;
    for (Part v : p) {
        for (Part i = 0; i < v; ++i) {
            if (i > 0) {
                out.push_back(' ');
            }
            out.push_back('*');
        }
        out.push_back('\n');
    }
    return out;
}

std::string to_string(const Partition &p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(p[i]);
    }
    out.push_back(']');
    return out;
}

}  // namespace partition_lab
