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

#ifndef PARTITION_LAB_SELF_CONJUGATE_H
#define PARTITION_LAB_SELF_CONJUGATE_H

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "partition_lab/partition.h"

namespace partition_lab {

using Rational = boost::multiprecision::mpq_rational;

/// One comparison of the multiplicity test: a distinct part value against
/// the sum of the first `terms` multiplicities (largest values first).
struct PrefixCheck {
    Part part_value;
    std::size_t terms;
    Part multiplicity_sum;
    bool holds;
};

/// The comparisons of the multiplicity test in order, largest distinct value
/// first, stopping after the first one that fails.
///
/// With distinct values v_0 > v_1 > ... > v_n and multiplicities
/// m_0, ..., m_n, the partition is self-conjugate exactly when
/// v_j == m_0 + m_1 + ... + m_{n-j} for every j. No diagram is built.
std::vector<PrefixCheck> theorem_checks(const MultiplicityForm &m);

/// Decides self-conjugacy from multiplicities alone.
bool is_self_conjugate_theorem(const MultiplicityForm &m);

/// First part equals the number of parts. Necessary for self-conjugacy.
/// Throws Errc::EmptyPartition.
bool check_size_equality(const Partition &p);

enum class ShapeKind { Empty, PureDurfeeSquare, FancyTriangle, FancyL, Other };

std::string_view shape_kind_name(ShapeKind kind);

struct ShapeClass {
    ShapeKind kind = ShapeKind::Empty;
    Part dim = 0;  // 0 for Empty and Other
    bool operator==(const ShapeClass &) const = default;
};

std::string to_string(const ShapeClass &s);

/// Matches square > triangle > L in that priority; [1] is a square and
/// [2,1] a triangle.
ShapeClass classify_shape(const Partition &p);

/// The partition a special shape stands for. Other has no canonical form.
Partition shape_partition(const ShapeClass &s);

/// Drops the first j rows and the first j columns.
/// Throws Errc::FrameTooWide unless p has >= j parts and first part >= j.
Partition remove_outer_frame(const Partition &p, Part j);

/// A symmetric partition seen as unit-width L frames around a core.
///
/// `frames` lists the arm length of each peeled frame, outermost first.
/// `egg` is Empty, PureDurfeeSquare or FancyTriangle. When the input is not
/// self-conjugate, peeling stops and `residual` holds the partition left at
/// that point (frames peeled so far are kept, `egg` is left Empty).
struct NestEggDecomposition {
    std::vector<Part> frames;
    ShapeClass egg;
    std::optional<Partition> residual;
    bool operator==(const NestEggDecomposition &) const = default;
};

NestEggDecomposition decompose_nest_egg(const Partition &p);

/// Wraps the egg in its frames, innermost first. Each arm must exceed both
/// the first part and the length of what it wraps.
/// Throws Errc::InconsistentFrames otherwise, or when a residual is present.
Partition recompose(const NestEggDecomposition &d);

/// Areas between the step function of the diagram (value p[i] on [i, i+1))
/// and the diagonal y = x over [0, length].
struct AreaBalance {
    Rational below;  // integral of min(f(x), x)
    Rational above;  // integral of max(f(x) - x, 0)
    bool balanced() const {
        return below == above;
    }
};

/// Throws Errc::EmptyPartition.
AreaBalance area_balance(const Partition &p);

}  // namespace partition_lab

#endif  // PARTITION_LAB_SELF_CONJUGATE_H
