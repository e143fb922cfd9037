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

#include "partition_lab/self_conjugate.h"

#include <algorithm>

#include "partition_lab/error.h"

namespace partition_lab {

std::vector<PrefixCheck> theorem_checks(const MultiplicityForm &m) {
    const auto &runs = m.runs();
    std::vector<Part> prefix(runs.size() + 1, 0);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        prefix[i + 1] = prefix[i] + runs[i].multiplicity;
    }
    std::vector<PrefixCheck> checks;
    checks.reserve(runs.size());
    for (std::size_t j = 0; j < runs.size(); ++j) {
        const std::size_t terms = runs.size() - j;
        const PrefixCheck check{runs[j].value, terms, prefix[terms], runs[j].value == prefix[terms]};
        checks.push_back(check);
        if (!check.holds) {
            break;
        }
    }
    return checks;
}

bool is_self_conjugate_theorem(const MultiplicityForm &m) {
    const auto &runs = m.runs();
    Part prefix = 0;
    // Walk from the smallest distinct value upward: it must equal the
    // multiplicity of the largest value, the next one that plus the
    // multiplicity of the second largest, and so on.
    for (std::size_t i = 0; i < runs.size(); ++i) {
        prefix += runs[i].multiplicity;
        if (runs[runs.size() - 1 - i].value != prefix) {
            return false;
        }
    }
    return true;
}

bool check_size_equality(const Partition &p) {
    if (p.empty()) {
        throw Error(Errc::EmptyPartition, "size equality needs a non-empty partition");
    }
    return p.first_part() == p.length();
}

std::string_view shape_kind_name(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Empty:
            return "Empty";
        case ShapeKind::PureDurfeeSquare:
            return "PureDurfeeSquare";
        case ShapeKind::FancyTriangle:
            return "FancyTriangle";
        case ShapeKind::FancyL:
            return "FancyL";
        case ShapeKind::Other:
            return "Other";
    }
    return "Other";
}

std::string to_string(const ShapeClass &s) {
    std::string out(shape_kind_name(s.kind));
    if (s.kind != ShapeKind::Empty && s.kind != ShapeKind::Other) {
        out += "(" + std::to_string(s.dim) + ")";
    }
    return out;
}

ShapeClass classify_shape(const Partition &p) {
    if (p.empty()) {
        return {ShapeKind::Empty, 0};
    }
    const Part d = p.first_part();
    if (p.length() != d) {
        return {ShapeKind::Other, 0};
    }
    const auto &parts = p.parts();
    if (std::all_of(parts.begin(), parts.end(), [d](Part v) { return v == d; })) {
        return {ShapeKind::PureDurfeeSquare, d};
    }
    bool staircase = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] != d - i) {
            staircase = false;
            break;
        }
    }
    if (staircase) {
        return {ShapeKind::FancyTriangle, d};
    }
    if (std::all_of(parts.begin() + 1, parts.end(), [](Part v) { return v == 1; })) {
        return {ShapeKind::FancyL, d};
    }
    return {ShapeKind::Other, 0};
}

Partition shape_partition(const ShapeClass &s) {
    std::vector<Part> parts;
    switch (s.kind) {
        case ShapeKind::Empty:
            break;
        case ShapeKind::PureDurfeeSquare:
            parts.assign(s.dim, s.dim);
            break;
        case ShapeKind::FancyTriangle:
            for (Part v = s.dim; v >= 1; --v) {
                parts.push_back(v);
            }
            break;
        case ShapeKind::FancyL:
            parts.assign(s.dim, 1);
            if (!parts.empty()) {
                parts.front() = s.dim;
            }
            break;
        case ShapeKind::Other:
            throw Error(Errc::InvalidArgument, "shape Other has no canonical partition");
    }
    return Partition::from_parts(std::move(parts));
}

Partition remove_outer_frame(const Partition &p, Part j) {
    if (j == 0 || p.length() < j || p.first_part() < j) {
        throw Error(Errc::FrameTooWide, "frame of width " + std::to_string(j) + " does not fit " +
                                            to_string(p));
    }
    std::vector<Part> inner;
    for (std::size_t i = j; i < p.length() && p[i] > j; ++i) {
        inner.push_back(p[i] - j);
    }
    return Partition::from_parts(std::move(inner));
}

NestEggDecomposition decompose_nest_egg(const Partition &p) {
    NestEggDecomposition out;
    Partition current = p;
    while (true) {
        const ShapeClass shape = classify_shape(current);
        if (shape.kind == ShapeKind::Empty || shape.kind == ShapeKind::PureDurfeeSquare ||
            shape.kind == ShapeKind::FancyTriangle) {
            out.egg = shape;
            return out;
        }
        if (!is_self_conjugate_theorem(to_multiplicities(current))) {
            out.egg = {ShapeKind::Empty, 0};
            out.residual = current;
            return out;
        }
        out.frames.push_back(current.first_part());
        current = remove_outer_frame(current, 1);
    }
}

Partition recompose(const NestEggDecomposition &d) {
    if (d.residual) {
        throw Error(Errc::InconsistentFrames, "decomposition carries a residual");
    }
    if (d.egg.kind == ShapeKind::FancyL || d.egg.kind == ShapeKind::Other) {
        throw Error(Errc::InconsistentFrames, "egg must be empty, a square or a triangle");
    }
    std::vector<Part> parts = shape_partition(d.egg).parts();
    for (auto it = d.frames.rbegin(); it != d.frames.rend(); ++it) {
        const Part arm = *it;
        const Part inner_first = parts.empty() ? 0 : parts.front();
        if (arm <= inner_first || arm <= parts.size()) {
            throw Error(Errc::InconsistentFrames,
                        "arm " + std::to_string(arm) + " cannot wrap a core of first part " +
                            std::to_string(inner_first) + " and length " +
                            std::to_string(parts.size()));
        }
        std::vector<Part> wrapped;
        wrapped.reserve(arm);
        wrapped.push_back(arm);
        for (Part v : parts) {
            wrapped.push_back(v + 1);
        }
        wrapped.resize(arm, 1);
        parts = std::move(wrapped);
    }
    return Partition::from_parts(std::move(parts));
}

AreaBalance area_balance(const Partition &p) {
    if (p.empty()) {
        throw Error(Errc::EmptyPartition, "area balance needs a non-empty partition");
    }
    AreaBalance out{Rational(0), Rational(0)};
    // On [i, i+1) the step is the constant c and the diagonal crosses it at
    // x = c; clamp the crossing into the cell and integrate both pieces.
    for (std::size_t i = 0; i < p.length(); ++i) {
        const Rational lo(static_cast<long>(i));
        const Rational hi = lo + 1;
        const Rational c(static_cast<long>(p[i]));
        const Rational t = std::clamp(c, lo, hi);
        // [lo, t]: diagonal below the step.  [t, hi]: step below the diagonal.
        const Rational diag_area = (t * t - lo * lo) / 2;
        out.below += diag_area + c * (hi - t);
        out.above += c * (t - lo) - diag_area;
    }
    return out;
}

}  // namespace partition_lab
