#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scae/category_io.hpp"
#include "scae/errors.hpp"
#include "scae/group.hpp"
#include "scae/modular_data.hpp"
#include "scae/simple_current.hpp"

namespace scae {

/// Builds the level-k category, or loads it from `cache_dir` when a file is already there.
inline ModularCategoryData cached_build(Family family, int rank, int level,
                                        const std::optional<std::filesystem::path>& cache_dir)
{
    if (!cache_dir) return build_wzw_data(family, rank, level);
    const auto path = *cache_dir / (std::string(1, family_char(family)) + std::to_string(rank) + "-" +
                                    std::to_string(level) + ".json");
    if (std::filesystem::exists(path)) return load_category(path);
    std::filesystem::create_directories(*cache_dir);
    auto data = build_wzw_data(family, rank, level);
    save_category(data, path);
    return data;
}

struct GoldenCheck {
    std::string name;
    bool passed = false;
    std::string detail; // expected vs. actual on mismatch, or a note
};

struct GoldenReport {
    std::string example;
    std::vector<GoldenCheck> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.passed; });
    }
};

inline const std::vector<std::string>& golden_examples()
{
    static const std::vector<std::string> names{"sl4-2", "sl6-2", "so8-2", "sl4-4-negative"};
    return names;
}

namespace golden_detail {

using Swap = std::pair<std::string, std::string>;

/// Permutation that exchanges each listed pair and fixes everything else.
inline Permutation swaps(const ModularCategoryData& data, const std::vector<Swap>& pairs)
{
    Permutation p = identity_permutation(data.size());
    for (const auto& [a, b] : pairs) {
        const Index i = data.index_of(a), j = data.index_of(b);
        p[i] = j;
        p[j] = i;
    }
    return p;
}

inline std::string render_moves(const ModularCategoryData& data, const Permutation& p)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [x, y] : moved_objects(p)) {
        s += (first ? "" : ", ") + data.ring.label(x) + (p[y] == x ? " <-> " : " -> ") + data.ring.label(y);
        first = false;
    }
    return s + "}";
}

class Recorder {
public:
    explicit Recorder(std::string example) { report_.example = std::move(example); }

    void expect(const std::string& name, bool ok, const std::string& detail = {})
    {
        report_.checks.push_back({name, ok, detail});
    }

    template <class T>
    void expect_eq(const std::string& name, const T& expected, const T& actual)
    {
        if (expected == actual) {
            expect(name, true);
        } else {
            expect(name, false, "expected " + show(expected) + ", got " + show(actual));
        }
    }

    void expect_perm(const ModularCategoryData& data, const std::string& name, const Permutation& expected,
                     const Permutation& actual)
    {
        if (expected == actual) {
            expect(name, true, render_moves(data, actual));
        } else {
            expect(name, false, "expected " + render_moves(data, expected) + ", got " + render_moves(data, actual));
        }
    }

    void note(const std::string& name, const std::string& detail) { expect(name, true, detail); }

    GoldenReport take() { return std::move(report_); }

private:
    static std::string show(const std::string& s) { return s; }
    static std::string show(const RationalAngle& a) { return a.str(); }
    static std::string show(bool b) { return b ? "true" : "false"; }
    template <class T>
    static std::string show(const T& v)
    {
        return std::to_string(v);
    }

    GoldenReport report_;
};

inline std::string invertible_labels(const ModularCategoryData& data)
{
    std::vector<std::string> labels;
    for (Index g : invertibles(data.ring)) labels.push_back(data.ring.label(g));
    std::sort(labels.begin(), labels.end());
    std::string s;
    for (const auto& l : labels) s += (s.empty() ? "" : " ") + l;
    return s;
}

inline GoldenReport sl4_2(const std::optional<std::filesystem::path>& cache)
{
    Recorder r("sl4-2");
    const auto data = cached_build(Family::A, 3, 2, cache);
    r.expect_eq<std::size_t>("simple count", 10, data.size());
    const Index g = data.index_of("2L1");
    const auto p = profile(data, g);
    r.expect_eq<std::int64_t>("order of 2L1", 4, p.M);
    r.expect_eq("q of 2L1", RationalAngle(3, 4), p.q);
    r.expect_eq<std::int64_t>("A of 2L1", 2, p.A);
    const auto zetas = admissible_zetas(p);
    r.expect_eq<std::size_t>("admissible zeta count", 2, zetas.size());

    const auto minus_i = construct_autoeq(data, g, RationalAngle(3, 4));
    const auto plus_i = construct_autoeq(data, g, RationalAngle(1, 4));
    r.expect_perm(data, "F(2L1, -i)", swaps(data, {{"L1", "L1+L2"}, {"2L1", "2L3"}, {"L3", "L2+L3"}}),
                  minus_i.permutation);
    r.expect_perm(data, "F(2L1, i)", swaps(data, {{"L1", "L3"}, {"2L1", "2L3"}, {"L1+L2", "L2+L3"}}),
                  plus_i.permutation);
    r.expect_eq("F(2L1, i) braided", true, plus_i.braided);
    r.expect_eq("F(2L1, i) is charge conjugation", true, plus_i.permutation == data.ring.dual_permutation());

    const auto g2 = construct_autoeq(data, data.index_of("2L2"), RationalAngle(1, 2));
    r.expect_eq("F(g, i)^2 = Id", true,
                compose(plus_i, plus_i) == identity_permutation(data.size()));
    r.expect_eq("F(g, -i)^2 = Id", true,
                compose(minus_i, minus_i) == identity_permutation(data.size()));
    r.expect_perm(data, "F(g, i) o F(g, -i) = F(g^2, -1)", g2.permutation, compose(plus_i, minus_i));
    const auto group = generated_group({plus_i, minus_i, g2}, data.size());
    r.expect_eq<std::string>("generated group", "Z2 x Z2", group.isomorphism_type);
    return r.take();
}

inline GoldenReport sl6_2(const std::optional<std::filesystem::path>& cache)
{
    Recorder r("sl6-2");
    const auto data = cached_build(Family::A, 5, 2, cache);
    r.expect_eq<std::size_t>("simple count", 21, data.size());
    r.expect_eq<std::string>("invertibles", "0 2L1 2L2 2L3 2L4 2L5", invertible_labels(data));

    struct Row {
        const char* label;
        std::int64_t M;
        RationalAngle q;
        bool exists;
    };
    const Row table[] = {{"2L1", 6, RationalAngle(5, 6), false},
                         {"2L2", 3, RationalAngle(1, 3), true},
                         {"2L3", 2, RationalAngle(1, 2), true},
                         {"2L4", 3, RationalAngle(1, 3), true},
                         {"2L5", 6, RationalAngle(5, 6), false}};
    for (const auto& row : table) {
        const auto p = profile(data, data.index_of(row.label));
        const std::string l = row.label;
        r.expect_eq("order of " + l, row.M, p.M);
        r.expect_eq("q of " + l, row.q, p.q);
        r.expect_eq("gcd(A+1, M) = 1 for " + l, row.exists, exists_autoequivalence(p));
    }

    const Index l1 = data.index_of("L1");
    const auto f2 = construct_autoeq(data, data.index_of("2L2"), RationalAngle(2, 3));
    const auto f3 = construct_autoeq(data, data.index_of("2L3"), RationalAngle(1, 2));
    const auto f4 = construct_autoeq(data, data.index_of("2L4"), RationalAngle(2, 3));
    r.expect_eq<std::string>("F(2L2)(L1)", "L2+L3", data.ring.label(f2.permutation[l1]));
    r.expect_eq<std::string>("F(2L4)(L1)", "L2+L3", data.ring.label(f4.permutation[l1]));
    r.expect_eq<std::string>("F(2L3)(L1)", "L3+L4", data.ring.label(f3.permutation[l1]));
    r.expect_perm(data, "F(2L2) = F(2L4) as permutations", f2.permutation, f4.permutation);
    r.expect_eq("F(2L3, -1) braided", true, f3.braided);
    r.note("braided flags", std::string("F(2L2) ") + (f2.braided ? "braided" : "not braided") + ", F(2L4) " +
                                (f4.braided ? "braided" : "not braided"));
    for (const auto* f : {&f2, &f3, &f4}) {
        r.expect_eq<std::int64_t>("order bound for " + data.ring.label(f->g), 2, f->order_bound);
    }
    r.expect_eq<std::string>("F(2L2) o F(2L3) (L1)", "L5", data.ring.label(compose(f2, f3)[l1]));
    r.expect_eq<std::string>("F(2L3) o F(2L2) (L1)", "L5", data.ring.label(compose(f3, f2)[l1]));
    const auto group = generated_group({f2, f3}, data.size());
    r.expect_eq<std::string>("generated group", "Z2 x Z2", group.isomorphism_type);
    return r.take();
}

inline GoldenReport so8_2(const std::optional<std::filesystem::path>& cache)
{
    Recorder r("so8-2");
    const auto data = cached_build(Family::D, 4, 2, cache);
    r.expect_eq<std::size_t>("simple count", 11, data.size());
    r.expect_eq<std::string>("invertibles", "0 2L1 2L3 2L4", invertible_labels(data));

    const std::pair<const char*, std::vector<golden_detail::Swap>> expected[] = {
        {"2L1", {{"L4", "L1+L3"}, {"L3", "L1+L4"}}},
        {"2L3", {{"L1+L3", "L4"}, {"L1", "L3+L4"}}},
        {"2L4", {{"L3", "L1+L4"}, {"L1", "L3+L4"}}},
    };
    std::vector<CurrentAutoEq> fs;
    for (const auto& [label, pairs] : expected) {
        const Index g = data.index_of(label);
        const auto p = profile(data, g);
        const std::string l = label;
        r.expect_eq<std::int64_t>("order of " + l, 2, p.M);
        r.expect_eq("q of " + l, RationalAngle::zero(), p.q);
        fs.push_back(construct_autoeq(data, g, RationalAngle(1, 2)));
        r.expect_perm(data, "F(" + l + ")", swaps(data, pairs), fs.back().permutation);
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const std::string pair = data.ring.label(fs[i].g) + ", " + data.ring.label(fs[j].g);
            r.expect_eq("commute_test(" + pair + ")", true, commute_test(data, fs[i].g, fs[j].g));
            r.expect_eq("F(" + pair + ") commute", true, compose(fs[i], fs[j]) == compose(fs[j], fs[i]));
        }
    }
    r.expect_perm(data, "F(2L1) o F(2L3) = F(2L4)", fs[2].permutation, compose(fs[0], fs[1]));
    const auto group = generated_group(fs, data.size());
    r.expect_eq<std::string>("generated group", "Z2 x Z2", group.isomorphism_type);
    r.expect("caveat emitted", !group.caveat.empty(), group.caveat);
    return r.take();
}

inline GoldenReport sl4_4_negative(const std::optional<std::filesystem::path>& cache)
{
    Recorder r("sl4-4-negative");
    const auto data = cached_build(Family::A, 3, 4, cache);
    r.expect_eq<std::size_t>("simple count", 35, data.size());
    const auto all = all_autoequivalences(data);
    r.expect("some auto-equivalence is constructible", !all.empty(), std::to_string(all.size()) + " constructed");
    std::string hits;
    for (const auto& f : all) {
        if (f.permutation == data.ring.dual_permutation()) {
            hits += (hits.empty() ? "" : ", ") + data.ring.label(f.g) + " zeta=" + f.zeta.str();
        }
    }
    r.expect("no auto-equivalence equals duality", hits.empty(), hits.empty() ? "" : "matches: " + hits);
    return r.take();
}

} // namespace golden_detail

/// Golden checks for one of the named worked examples.
inline GoldenReport reproduce(const std::string& example,
                              const std::optional<std::filesystem::path>& cache_dir = std::nullopt)
{
    if (example == "sl4-2") return golden_detail::sl4_2(cache_dir);
    if (example == "sl6-2") return golden_detail::sl6_2(cache_dir);
    if (example == "so8-2") return golden_detail::so8_2(cache_dir);
    if (example == "sl4-4-negative") return golden_detail::sl4_4_negative(cache_dir);
    std::string known;
    for (const auto& n : golden_examples()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown example '" + example + "' (known: " + known + ")");
}

} // namespace scae
