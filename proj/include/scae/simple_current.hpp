#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "scae/errors.hpp"
#include "scae/fusion_ring.hpp"
#include "scae/modular_data.hpp"
#include "scae/rational_angle.hpp"

namespace scae {

/**
 * @brief The auto-equivalence X_m -> g^m (x) X_m built from an invertible g and
 * a primitive M-th root zeta with zeta^A = q^2.
 *
 * Only the action on simples is modeled. Two instances with equal
 * permutations are treated as equal, which ignores possible differences in
 * tensor structure.
 */
struct CurrentAutoEq {
    std::string category;
    Index g = 0;
    std::int64_t M = 1;
    RationalAngle zeta;
    RationalAngle q;
    std::int64_t A = 1;
    Permutation permutation;
    bool braided = false;
    bool pivotal = false;
    std::int64_t order_bound = 1;
};

inline InvertibleProfile profile(const ModularCategoryData& data, Index g)
{
    require_invertible(data.ring, g);
    InvertibleProfile p;
    p.g = g;
    p.M = invertible_order(data.ring, g);
    p.q = self_braiding(data, g);
    p.q_squared = p.q + p.q;
    if (p.M % p.q_squared.order() != 0) {
        throw MathError("q^2 = " + p.q_squared.str() + " for " + data.ring.label(g) + " is not an " +
                        std::to_string(p.M) + "-th root of unity");
    }
    p.A = p.M / p.q_squared.order();
    return p;
}

/// Rejects data where some invertible grades non-faithfully: then g^N with
/// N < M would lie in the symmetric centre, so the category is not modular.
inline void require_faithful_gradings(const ModularCategoryData& data)
{
    for (Index g : invertibles(data.ring)) {
        const InvertibleProfile p = profile(data, g);
        const std::int64_t n = grading_support(data, p);
        if (n != p.M) {
            throw MathError("grading by " + data.ring.label(g) + " is supported on Z/" + std::to_string(n) +
                            " only; " + data.ring.label(g) + "^" + std::to_string(n) +
                            " lies in the symmetric centre");
        }
    }
}

/// Primitive M-th roots zeta with zeta^A = q^2, ascending by numerator.
inline std::vector<RationalAngle> admissible_zetas(const InvertibleProfile& p)
{
    std::vector<RationalAngle> out;
    for (std::int64_t j = 0; j < p.M; ++j) {
        if (std::gcd(j, p.M) != 1) continue;
        const RationalAngle z(j, p.M);
        if (p.A * z == p.q_squared) out.push_back(z);
    }
    return out;
}

/// The functor is an equivalence iff multiplication by A+1 is invertible on Z/M.
inline bool exists_autoequivalence(const InvertibleProfile& p) { return std::gcd(p.A + 1, p.M) == 1; }

/// Closed-form braided criterion: (M, q, zeta) is one of
/// (1, 1, 1), (2, -1, -1), (3, w^{+-1}, w^{-+1}), (4, +-i, -+i).
inline bool classify_braided(const InvertibleProfile& p, const RationalAngle& zeta)
{
    switch (p.M) {
    case 1:
        return p.q.is_zero() && zeta.is_zero();
    case 2:
        return p.q == RationalAngle(1, 2) && zeta == RationalAngle(1, 2);
    case 3:
    case 4:
        return p.q.order() == p.M && zeta == -p.q;
    default:
        return false;
    }
}

/// zeta^{mn} q^{mn} = 1 for every m, n in Z/M.
inline bool braided_symbol_condition(const RationalAngle& zeta, const RationalAngle& q, std::int64_t M)
{
    const RationalAngle prod = zeta + q;
    for (std::int64_t m = 0; m < M; ++m) {
        for (std::int64_t n = 0; n < M; ++n) {
            if (!((m * n) * prod).is_zero()) return false;
        }
    }
    return true;
}

inline bool classify_pivotal(const ModularCategoryData& data, Index g)
{
    require_invertible(data.ring, g);
    detail::require_unit_dimension(data, g);
    return std::abs(data.qdim[g] - 1.0) <= kDimensionTolerance;
}

/// Least K >= 1 with (A+1)^K = 1 mod A*M.
inline std::int64_t order_bound(const InvertibleProfile& p)
{
    if (!exists_autoequivalence(p)) {
        throw MathError("gcd(A+1, M) = " + std::to_string(std::gcd(p.A + 1, p.M)) + " != 1 (A = " +
                        std::to_string(p.A) + ", M = " + std::to_string(p.M) + ")");
    }
    const std::int64_t mod = p.A * p.M;
    if (mod == 1) return 1;
    const std::int64_t base = (p.A + 1) % mod;
    if (std::gcd(base, mod) != 1) {
        throw MathError("A+1 is not a unit modulo A*M");
    }
    std::int64_t x = base;
    std::int64_t k = 1;
    while (x != 1) {
        x = (x * base) % mod;
        ++k;
    }
    return k;
}

/// True when g and h braid symmetrically (trivial double braiding).
inline bool commute_test(const ModularCategoryData& data, Index g, Index h)
{
    require_invertible(data.ring, h);
    return monodromy(data, g, h).is_zero();
}

/// 6j symbol of the pointed subcategory generated by g: 1 if n+p < M, q^{Mm} otherwise.
inline RationalAngle alpha_symbol(std::int64_t m, std::int64_t n, std::int64_t p, const RationalAngle& q, std::int64_t M)
{
    if (m < 0 || n < 0 || p < 0 || m >= M || n >= M || p >= M) {
        throw InputError("alpha_symbol: grades must lie in [0, M)");
    }
    return n + p < M ? RationalAngle::zero() : (M * m) * q;
}

/// All associator symbols of the pointed part are trivial, i.e. q^M = 1.
inline bool hexagon_holds(const RationalAngle& q, std::int64_t M) { return (M * q).is_zero(); }

/// eps = q^{-sum_{i=1}^{K-1} sum_{j=i}^{2i-1} (A+1)^j}, the scalar correcting F^K -> Id.
inline RationalAngle epsilon_scalar(const RationalAngle& q, std::int64_t A, std::int64_t K)
{
    if (K < 1) throw InputError("epsilon_scalar: K must be >= 1");
    const std::int64_t mod = q.den();
    const std::int64_t base = (A + 1) % mod;
    std::int64_t exponent = 0;
    for (std::int64_t i = 1; i < K; ++i) {
        std::int64_t pw = 1;
        for (std::int64_t j = 0; j < i; ++j) pw = (pw * base) % mod;
        for (std::int64_t j = i; j <= 2 * i - 1; ++j) {
            exponent = (exponent + pw) % mod;
            pw = (pw * base) % mod;
        }
    }
    return (-exponent) * q;
}

inline std::string zeta_list(const std::vector<RationalAngle>& zs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < zs.size(); ++i) s += (i ? ", " : "") + zs[i].str();
    return s + "}";
}

inline CurrentAutoEq construct_autoeq(const ModularCategoryData& data, Index g, const RationalAngle& zeta)
{
    const InvertibleProfile p = profile(data, g);
    if (!exists_autoequivalence(p)) {
        throw MathError("gcd(A+1, M) = " + std::to_string(std::gcd(p.A + 1, p.M)) + " != 1 for " +
                        data.ring.label(g) + " (A = " + std::to_string(p.A) + ", M = " + std::to_string(p.M) + ")");
    }
    const auto zetas = admissible_zetas(p);
    if (zetas.empty()) {
        throw MathError("inconsistent data: no admissible zeta for " + data.ring.label(g) +
                        " although gcd(A+1, M) = 1");
    }
    if (std::find(zetas.begin(), zetas.end(), zeta) == zetas.end()) {
        throw MathError("zeta = " + zeta.str() + " is not admissible for " + data.ring.label(g) +
                        "; admissible: " + zeta_list(zetas));
    }

    const auto grades = grading(data, p, zeta);
    const Permutation step = fuse_permutation(data.ring, g);
    std::vector<Permutation> powers{identity_permutation(data.size())};
    for (std::int64_t m = 1; m < p.M; ++m) powers.push_back(compose_permutations(step, powers.back()));

    CurrentAutoEq f;
    f.category = data.name;
    f.g = g;
    f.M = p.M;
    f.zeta = zeta;
    f.q = p.q;
    f.A = p.A;
    f.permutation.resize(data.size());
    for (Index x = 0; x < data.size(); ++x) f.permutation[x] = powers[static_cast<std::size_t>(grades[x])][x];
    f.braided = classify_braided(p, zeta);
    if (f.braided != braided_symbol_condition(zeta, p.q, p.M)) {
        throw MathError("braided table and symbol condition disagree for " + data.ring.label(g));
    }
    f.pivotal = classify_pivotal(data, g);
    f.order_bound = order_bound(p);
    return f;
}

/// Every (g, zeta) pair for which the construction applies, in index/zeta order.
inline std::vector<CurrentAutoEq> all_autoequivalences(const ModularCategoryData& data)
{
    std::vector<CurrentAutoEq> out;
    for (Index g : invertibles(data.ring)) {
        const InvertibleProfile p = profile(data, g);
        if (!exists_autoequivalence(p)) continue;
        for (const auto& z : admissible_zetas(p)) out.push_back(construct_autoeq(data, g, z));
    }
    return out;
}

/// Permutation of `outer` applied after `inner`.
inline Permutation compose(const CurrentAutoEq& outer, const CurrentAutoEq& inner)
{
    if (outer.category != inner.category) {
        throw InputError("cannot compose auto-equivalences of " + outer.category + " and " + inner.category);
    }
    return compose_permutations(outer.permutation, inner.permutation);
}

/// Unordered pairs {x, p(x)} with x < p(x); valid for involutions, and for
/// general permutations lists each x with its image.
inline std::vector<std::pair<Index, Index>> moved_objects(const Permutation& p)
{
    std::vector<std::pair<Index, Index>> out;
    for (Index x = 0; x < p.size(); ++x) {
        if (p[x] == x) continue;
        if (p[p[x]] == x && p[x] < x) continue;
        out.emplace_back(x, p[x]);
    }
    return out;
}

} // namespace scae
