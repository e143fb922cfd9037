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

#include "cli/commands.h"

#include <mpfr.h>

#include <algorithm>
#include <charconv>
#include <sstream>

#include "CLI11.hpp"
#include "cli/literal.h"
#include "json.hpp"
#include "partition_lab/enumeration.h"
#include "partition_lab/error.h"
#include "partition_lab/self_conjugate.h"
#include "partition_lab/series.h"

namespace partition_lab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    bool json = false;
    std::optional<unsigned> digits;
    std::optional<std::uint64_t> kmax;
    std::optional<std::string> method;
    std::optional<std::uint64_t> limit;
};

json envelope(const char *command) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

json parts_json(const Partition &p) {
    return json(p.parts());
}

void emit(std::ostream &out, const json &j) {
    out << j.dump(2) << "\n";
}

std::string method_or(const GlobalOptions &g, const std::string &fallback,
                      std::initializer_list<const char *> allowed) {
    const std::string m = g.method.value_or(fallback);
    for (const char *a : allowed) {
        if (m == a) {
            return m;
        }
    }
    std::string list;
    for (const char *a : allowed) {
        list += list.empty() ? a : std::string("|") + a;
    }
    throw UsageError("--method must be one of " + list + ", got '" + m + "'");
}

unsigned resolve_digits(const GlobalOptions &g, const std::optional<std::string> &env) {
    if (g.digits) {
        return *g.digits;
    }
    if (env) {
        unsigned v = 0;
        const char *end = env->data() + env->size();
        auto [ptr, ec] = std::from_chars(env->data(), end, v);
        if (env->empty() || ec != std::errc() || ptr != end) {
            throw UsageError("PARTITION_LAB_DIGITS must be a positive integer, got '" + *env + "'");
        }
        return v;
    }
    return kDefaultDigits;
}

std::string sum_expression(const MultiplicityForm &m, std::size_t terms) {
    std::string s;
    for (std::size_t i = 0; i < terms; ++i) {
        if (i > 0) s += "+";
        s += std::to_string(m.runs()[i].multiplicity);
    }
    return s;
}

int cmd_check(const std::string &literal, const GlobalOptions &g, std::ostream &out,
              std::ostream &err) {
    const std::string method = method_or(g, "both", {"theorem", "oracle", "both"});
    const Partition p = parse_partition_literal(literal);
    const MultiplicityForm m = to_multiplicities(p);
    const bool use_theorem = method != "oracle";
    const bool use_oracle = method != "theorem";
    const std::vector<PrefixCheck> checks = theorem_checks(m);
    const bool theorem = is_self_conjugate_theorem(m);
    const bool oracle = is_self_conjugate_oracle(p);
    if (method == "both" && theorem != oracle) {
        err << "internal error: multiplicity test and conjugation disagree on " << to_string(p)
            << "\n";
        return kExitUsage;
    }
    const bool verdict = use_theorem ? theorem : oracle;

    if (g.json) {
        json j = envelope("check");
        j["partition"] = parts_json(p);
        j["method"] = method;
        if (use_theorem) {
            json runs = json::array();
            for (const Run &r : m.runs()) {
                runs.push_back({{"value", r.value}, {"multiplicity", r.multiplicity}});
            }
            j["multiplicities"] = runs;
            json ledger = json::array();
            for (const PrefixCheck &c : checks) {
                json terms = json::array();
                for (std::size_t i = 0; i < c.terms; ++i) terms.push_back(m.runs()[i].multiplicity);
                ledger.push_back({{"part", c.part_value},
                                  {"terms", terms},
                                  {"sum", c.multiplicity_sum},
                                  {"holds", c.holds}});
            }
            j["ledger"] = ledger;
            j["theorem"] = theorem;
        }
        if (use_oracle) {
            j["oracle"] = oracle;
        }
        j["self_conjugate"] = verdict;
        emit(out, j);
    } else {
        out << "partition: " << to_string(p) << "\n";
        if (use_theorem) {
            out << "multiplicities:";
            for (std::size_t i = 0; i < m.runs().size(); ++i) {
                out << (i == 0 ? " " : ", ") << "x_" << i << "=" << m.runs()[i].multiplicity
                    << " (" << m.runs()[i].value << ")";
            }
            out << "\n";
            for (const PrefixCheck &c : checks) {
                if (c.holds) {
                    out << "  " << c.part_value << " = " << sum_expression(m, c.terms) << "\n";
                } else {
                    out << "  " << c.part_value << " != " << sum_expression(m, c.terms) << " = "
                        << c.multiplicity_sum << "\n";
                }
            }
            out << "theorem: " << (theorem ? "self-conjugate" : "not self-conjugate") << "\n";
        }
        if (use_oracle) {
            out << "oracle: " << (oracle ? "self-conjugate" : "not self-conjugate") << "\n";
        }
    }
    return verdict ? kExitOk : kExitNegative;
}

int cmd_diagram(const std::string &literal, const std::string &style, bool conj,
                const GlobalOptions &g, std::ostream &out) {
    if (style != "young" && style != "ferrers") {
        throw UsageError("--style must be young or ferrers, got '" + style + "'");
    }
    Partition p = parse_partition_literal(literal);
    if (conj) {
        p = conjugate(p);
    }
    const std::string text = style == "young" ? render_young(p) : render_ferrers(p);
    if (g.json) {
        json j = envelope("diagram");
        j["partition"] = parts_json(p);
        j["style"] = style;
        j["conjugate"] = conj;
        j["diagram"] = text;
        emit(out, j);
    } else {
        out << text;
    }
    return kExitOk;
}

int cmd_decompose(const std::string &literal, const GlobalOptions &g, std::ostream &out) {
    const Partition p = parse_partition_literal(literal);
    const NestEggDecomposition d = decompose_nest_egg(p);
    const std::vector<std::size_t> widths = merge_unit_frames(d.frames);
    if (g.json) {
        json j = envelope("decompose");
        j["partition"] = parts_json(p);
        j["frames"] = d.frames;
        j["widths"] = widths;
        if (d.residual) {
            j["egg"] = nullptr;
            j["residual"] = parts_json(*d.residual);
        } else {
            j["egg"] = {{"kind", shape_kind_name(d.egg.kind)}, {"dim", d.egg.dim}};
            j["residual"] = nullptr;
        }
        emit(out, j);
    } else {
        auto join = [](const auto &xs) {
            if (xs.empty()) return std::string("(none)");
            std::string s;
            for (const auto &x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
            return s;
        };
        out << "partition: " << to_string(p) << "\n";
        out << "frames: " << join(d.frames) << "\n";
        out << "nest widths: " << join(widths) << "\n";
        if (d.residual) {
            out << "residual: " << to_string(*d.residual) << "\n";
            out << "verdict: not self-conjugate\n";
        } else {
            out << "egg: " << to_string(d.egg) << "\n";
        }
    }
    return d.residual ? kExitNegative : kExitOk;
}

int cmd_count_sc(Part d_max, const GlobalOptions &g, std::ostream &out) {
    if (d_max == 0 || d_max > kMaxDimension) {
        throw UsageError("count-sc needs 1 <= d_max <= " + std::to_string(kMaxDimension));
    }
    bool all_match = true;
    json rows = json::array();
    std::ostringstream text;
    text << "d  enumerated  2^(d-1)  match\n";
    for (Part d = 1; d <= d_max; ++d) {
        const std::uint64_t counted = count(self_conjugate_of_dimension(d));
        const std::uint64_t formula = std::uint64_t{1} << (d - 1);
        const bool match = counted == formula;
        all_match = all_match && match;
        rows.push_back({{"d", d}, {"enumerated", counted}, {"formula", formula}, {"match", match}});
        text << d << "  " << counted << "  " << formula << "  " << (match ? "yes" : "NO") << "\n";
    }
    if (g.json) {
        json j = envelope("count-sc");
        j["rows"] = rows;
        j["all_match"] = all_match;
        emit(out, j);
    } else {
        out << text.str();
    }
    return all_match ? kExitOk : kExitNegative;
}

int cmd_pfn(std::uint64_t n, bool trace, const GlobalOptions &g,
            const std::optional<std::string> &digits_env, std::ostream &out) {
    const std::string method =
        method_or(g, "series", {"series", "recurrence", "rademacher", "enumerate"});
    json j = envelope("pfn");
    j["n"] = n;
    j["method"] = method;
    BigInt value;
    std::optional<RademacherResult> rad;
    if (method == "series") {
        value = p_exact(n);
    } else if (method == "recurrence") {
        value = p_exact_recurrence(n);
    } else if (method == "enumerate") {
        if (n > kMaxEnumerateSize) {
            throw UsageError("enumerate is limited to n <= " + std::to_string(kMaxEnumerateSize));
        }
        value = count(partitions_of(n));
    } else {
        const unsigned digits = resolve_digits(g, digits_env);
        if (n == 0) {
            throw UsageError("the Rademacher series needs n >= 1");
        }
        rad = rademacher_p(n, g.kmax, digits);
        value = rad->rounded;
    }
    j["value"] = value.str();

    if (g.json) {
        if (rad) {
            j["digits"] = rad->digits;
            j["k_used"] = rad->k_used();
            j["partial_sum"] = format_signed_fixed(rad->partial_sum, 12);
            j["distance"] = format_signed_fixed(rad->distance, 12);
            j["certified"] = rad->certified;
            if (trace) {
                json terms = json::array();
                for (const RademacherTerm &t : rad->terms) {
                    terms.push_back({{"k", t.k}, {"term", format_signed_fixed(t.value, 12)}});
                }
                j["terms"] = terms;
            }
        }
        emit(out, j);
        return kExitOk;
    }
    if (rad && trace) {
        std::vector<std::string> cells;
        std::size_t width = 0;
        for (const RademacherTerm &t : rad->terms) {
            cells.push_back(format_signed_fixed(t.value, 3));
            width = std::max(width, cells.back().size());
        }
        const std::string sum = format_signed_fixed(rad->partial_sum, 3).substr(1);
        width = std::max(width, sum.size());
        out << "k  term\n";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << rad->terms[i].k << "  " << std::string(width - cells[i].size(), ' ') << cells[i]
                << "\n";
        }
        out << "sum " << std::string(width - sum.size(), ' ') << sum << "\n";
        out << "distance to nearest integer: " << format_signed_fixed(rad->distance, 3).substr(1)
            << (rad->certified ? " (certified)" : " (not certified)") << "\n";
    }
    out << "p(" << n << ") = " << value.str() << "\n";
    return kExitOk;
}

struct SuiteResult {
    json families = json::array();
    bool pass = true;
};

void append_report(const char *suite, const CongruenceReport &r, std::ostream &text,
                   SuiteResult &acc) {
    json checks = json::array();
    for (const CongruenceCheck &c : r.checks) {
        checks.push_back({{"argument", c.argument}, {"residue", c.residue}});
        text << suite << "  p(" << c.argument << ") mod " << r.family.modulus << " = "
             << c.residue << "  " << (c.residue == 0 ? "ok" : "FAIL") << "\n";
    }
    const bool pass = r.all_zero();
    acc.pass = acc.pass && pass;
    acc.families.push_back({{"suite", suite},
                            {"description", r.family.description},
                            {"modulus", r.family.modulus},
                            {"lambda", r.family.lambda},
                            {"step", r.family.step},
                            {"checks", checks},
                            {"pass", pass}});
}

int cmd_congruences(const std::string &suite, const GlobalOptions &g, std::ostream &out) {
    static const std::vector<std::string> kSuites = {"lists", "ramanujan", "atkin", "chowla",
                                                     "all"};
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw UsageError("suite must be lists, ramanujan, atkin, chowla or all, got '" + suite +
                         "'");
    }
    const std::uint64_t limit = g.limit.value_or(500);
    if (limit == 0 || limit > kMaxCongruenceLimit) {
        throw UsageError("--limit must be in [1, " + std::to_string(kMaxCongruenceLimit) + "]");
    }
    const bool all = suite == "all";
    std::ostringstream text;
    SuiteResult acc;
    if (all || suite == "lists") {
        for (const NamedList &l : classical_congruence_lists()) {
            CongruenceReport r = scan_congruences(l.family, l.listed);
            std::erase_if(r.checks, [&](const CongruenceCheck &c) { return c.argument > limit; });
            append_report("lists", r, text, acc);
        }
    }
    if (all || suite == "ramanujan") {
        for (const CongruenceFamily &f : ramanujan_families()) {
            append_report("ramanujan", scan_congruences_up_to(f, limit), text, acc);
        }
    }
    if (all || suite == "atkin") {
        for (std::uint64_t delta : {5, 7, 25, 49, 35, 55, 77, 121, 125}) {
            CongruenceReport r = scan_congruences_up_to(atkin_family(delta), limit);
            if (r.checks.size() > 3) {
                r.checks.resize(3);
            }
            append_report("atkin", r, text, acc);
        }
    }
    json chowla_json = nullptr;
    if (all || suite == "chowla") {
        const CongruenceCheck c = chowla_check();
        const bool nonzero = c.residue != 0;
        acc.pass = acc.pass && nonzero;
        chowla_json = {{"argument", c.argument},
                       {"modulus", 343},
                       {"value", p_exact(c.argument).str()},
                       {"residue", c.residue},
                       {"nonzero", nonzero}};
        text << "chowla  p(" << c.argument << ") mod 343 = " << c.residue << "  "
             << (nonzero ? "nonzero, as expected" : "FAIL: expected nonzero") << "\n";
    }
    if (g.json) {
        json j = envelope("congruences");
        j["suite"] = suite;
        j["limit"] = limit;
        j["families"] = acc.families;
        j["chowla"] = chowla_json;
        j["pass"] = acc.pass;
        emit(out, j);
    } else {
        out << text.str();
        out << "result: " << (acc.pass ? "all checks passed" : "FAILED") << "\n";
    }
    return acc.pass ? kExitOk : kExitNegative;
}

int cmd_euler(Part n_max, const GlobalOptions &g, std::ostream &out) {
    if (n_max == 0 || n_max > kMaxEulerOrder) {
        throw UsageError("euler needs 1 <= n_max <= " + std::to_string(kMaxEulerOrder));
    }
    const auto odd = memoized_product(PartSet::odds(), 0, n_max);
    const auto distinct = memoized_product(PartSet::all_positive(), 1, n_max);
    bool all_match = true;
    json rows = json::array();
    std::ostringstream text;
    text << "n  p(O,n)  p(D,n)  match\n";
    for (Part n = 1; n <= n_max; ++n) {
        const BigInt &a = odd->coeff(n);
        const BigInt &b = distinct->coeff(n);
        const bool match = a == b;
        all_match = all_match && match;
        rows.push_back({{"n", n}, {"odd", a.str()}, {"distinct", b.str()}, {"match", match}});
        text << n << "  " << a.str() << "  " << b.str() << "  " << (match ? "yes" : "NO") << "\n";
    }
    if (g.json) {
        json j = envelope("euler");
        j["rows"] = rows;
        j["all_match"] = all_match;
        emit(out, j);
    } else {
        out << text.str();
    }
    return all_match ? kExitOk : kExitNegative;
}

int cmd_area(const std::string &literal, const GlobalOptions &g, std::ostream &out) {
    const Partition p = parse_partition_literal(literal);
    if (p.empty()) {
        throw UsageError("area needs a non-empty partition");
    }
    const AreaBalance a = area_balance(p);
    if (g.json) {
        json j = envelope("area");
        j["partition"] = parts_json(p);
        j["below"] = a.below.str();
        j["above"] = a.above.str();
        j["balanced"] = a.balanced();
        emit(out, j);
    } else {
        out << "partition: " << to_string(p) << "\n";
        out << "below: " << a.below.str() << "\n";
        out << "above: " << a.above.str() << "\n";
        out << "verdict: " << (a.balanced() ? "balanced" : "unbalanced") << "\n";
    }
    return a.balanced() ? kExitOk : kExitNegative;
}

int cmd_enumerate(std::optional<Part> n, std::optional<Part> dim, bool self_conj,
                  const std::string &restrict_name, const GlobalOptions &g, std::ostream &out) {
    Restriction restriction = Restriction::None;
    if (restrict_name == "odd") {
        restriction = Restriction::OddPartsOnly;
    } else if (restrict_name == "distinct") {
        restriction = Restriction::DistinctParts;
    } else if (restrict_name != "none") {
        throw UsageError("--restrict must be none, odd or distinct");
    }
    if (n.has_value() == dim.has_value()) {
        throw UsageError("enumerate needs exactly one of <n> or --dimension");
    }
    std::optional<PartitionStream> stream;
    if (n) {
        if (*n > kMaxEnumerateSize) {
            throw UsageError("enumerate is limited to n <= " + std::to_string(kMaxEnumerateSize));
        }
        stream = PartitionStream::of_size(*n, [=](const Partition &p) {
            return satisfies(p, restriction) && (!self_conj || is_self_conjugate_oracle(p));
        });
    } else {
        if (*dim == 0 || *dim > kMaxDimension) {
            throw UsageError("--dimension must be in [1, " + std::to_string(kMaxDimension) + "]");
        }
        if (restriction != Restriction::None) {
            throw UsageError("--restrict applies to enumeration by size only");
        }
        stream = self_conj ? self_conjugate_of_dimension(*dim) : partitions_of_dimension(*dim);
    }
    json list = json::array();
    std::uint64_t total = 0;
    while (auto p = stream->next()) {
        ++total;
        if (g.json) {
            list.push_back(parts_json(*p));
        } else {
            out << to_string(*p) << "\n";
        }
    }
    if (g.json) {
        json j = envelope("enumerate");
        j["partitions"] = list;
        j["count"] = total;
        emit(out, j);
    }
    return kExitOk;
}

}  // namespace

std::vector<std::size_t> merge_unit_frames(std::span<const Part> arms) {
    std::vector<std::size_t> widths;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        if (i > 0 && arms[i - 1] == arms[i] + 1) {
            ++widths.back();
        } else {
            widths.push_back(1);
        }
    }
    return widths;
}

std::string format_signed_fixed(const Real &value, int decimals) {
    const int size = mpfr_snprintf(nullptr, 0, "%+.*RNf", decimals, value.backend().data());
    std::string s(static_cast<std::size_t>(size) + 1, '\0');
    mpfr_snprintf(s.data(), s.size(), "%+.*RNf", decimals, value.backend().data());
    s.resize(static_cast<std::size_t>(size));
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.front() = '+';
    }
    return s;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const std::optional<std::string> &digits_env) {
    CLI::App app{"Integer partition toolkit: self-conjugacy, nest-and-egg shapes, p(n)",
                 "partition-lab"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_flag("--json", g.json, "Emit one JSON object instead of text");
    app.add_option("--digits", g.digits, "Working precision in decimal digits (pfn)")
        ->check(CLI::Range(20u, 100000u));
    app.add_option("--kmax", g.kmax, "Number of Rademacher terms (pfn)")->check(CLI::PositiveNumber);
    app.add_option("--method", g.method, "Method for check or pfn");
    app.add_option("--limit", g.limit, "Largest p(n) argument (congruences)");

    std::string literal;
    std::string style = "young";
    bool conj = false;
    bool trace = false;
    Part part_arg = 0;
    std::uint64_t n_arg = 0;
    std::string suite = "all";
    std::optional<Part> enum_n;
    std::optional<Part> enum_dim;
    bool enum_sc = false;
    std::string restrict_name = "none";

    auto *check = app.add_subcommand("check", "Decide self-conjugacy from multiplicities");
    check->add_option("partition", literal, "Partition literal, e.g. 5^2,3,2^2")->required();
    auto *diagram = app.add_subcommand("diagram", "Render a Young or Ferrers diagram");
    diagram->add_option("partition", literal)->required();
    diagram->add_option("--style", style, "young or ferrers");
    diagram->add_flag("--conjugate", conj, "Render the conjugate instead");
    auto *decompose = app.add_subcommand("decompose", "Nest-and-egg decomposition");
    decompose->add_option("partition", literal)->required();
    auto *count_sc = app.add_subcommand("count-sc", "Count self-conjugate partitions by dimension");
    count_sc->add_option("d_max", part_arg)->required();
    auto *pfn = app.add_subcommand("pfn", "The partition function p(n)");
    pfn->add_option("n", n_arg)->required();
    pfn->add_flag("--trace", trace, "Print the Rademacher term table");
    auto *congruences = app.add_subcommand("congruences", "Verify partition congruences");
    congruences->add_option("suite", suite, "lists, ramanujan, atkin, chowla or all");
    auto *euler = app.add_subcommand("euler", "Compare odd-part and distinct-part counts");
    euler->add_option("n_max", part_arg)->required();
    auto *area = app.add_subcommand("area", "Areas on either side of the diagonal");
    area->add_option("partition", literal)->required();
    auto *enumerate = app.add_subcommand("enumerate", "List partitions in decreasing-lex order");
    enumerate->add_option("n", enum_n);
    enumerate->add_option("--dimension", enum_dim);
    enumerate->add_flag("--self-conjugate", enum_sc);
    enumerate->add_option("--restrict", restrict_name, "none, odd or distinct");

    for (CLI::App *sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<const char *> argv{"partition-lab"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "partition-lab: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(literal, g, out, err);
        if (*diagram) return cmd_diagram(literal, style, conj, g, out);
        if (*decompose) return cmd_decompose(literal, g, out);
        if (*count_sc) return cmd_count_sc(part_arg, g, out);
        if (*pfn) return cmd_pfn(n_arg, trace, g, digits_env, out);
        if (*congruences) return cmd_congruences(suite, g, out);
        if (*euler) return cmd_euler(part_arg, g, out);
        if (*area) return cmd_area(literal, g, out);
        if (*enumerate) return cmd_enumerate(enum_n, enum_dim, enum_sc, restrict_name, g, out);
    } catch (const LiteralError &e) {
        err << "partition-lab: cannot parse partition: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "partition-lab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "partition-lab: " << e.what() << "\n";
        if (e.code() == Errc::PrecisionExhausted) {
            err << "partition-lab: pass a larger --digits value\n";
        }
        return kExitUsage;
    }
    err << "partition-lab: no subcommand\n";
    return kExitUsage;
}

}  // namespace partition_lab::cli
