#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "scae/errors.hpp"
#include "scae/fusion_ring.hpp"
#include "scae/labels.hpp"
#include "scae/lie_data.hpp"
#include "scae/rational_angle.hpp"

namespace scae {

inline constexpr double kDimensionTolerance = 1e-9;

/// Where a category came from: a level-k affine Lie algebra, or external data.
struct WzwSource {
    Family family = Family::A;
    int rank = 0;
    int level = 0;

    friend bool operator==(const WzwSource&, const WzwSource&) = default;
};

/**
 * Fusion ring plus the ribbon data needed by the simple-current machinery:
 * twist theta_a (as an angle) and quantum dimension d_a of each simple.
 */
struct ModularCategoryData {
    std::string name;                 // identity used to reject cross-category composition
    std::optional<WzwSource> source;  // empty for external data
    FusionRing ring;
    std::vector<RationalAngle> twist;
    std::vector<double> qdim;

    std::size_t size() const { return ring.size(); }

    Index index_of(const std::string& label) const
    {
        if (auto i = ring.find(label)) return *i;
        if (source) {
            // accept any spelling of the same Dynkin labels
            const Weight w = parse_weight(label, source->rank);
            if (auto i = ring.find(render_weight(w))) return *i;
        }
        throw InputError("unknown simple object '" + label + "' in " + name);
    }
};

/// Data attached to one invertible object g.
struct InvertibleProfile {
    Index g = 0;
    std::int64_t M = 1;          // order of g
    RationalAngle q;             // self-braiding eigenvalue
    RationalAngle q_squared;
    std::int64_t A = 1;          // M / |q^2|
};

/// Throws MathError on the first violated invariant.
inline void validate(const ModularCategoryData& data)
{
    const auto& ring = data.ring;
    if (data.twist.size() != ring.size() || data.qdim.size() != ring.size()) {
        throw InputError("twist/qdim lists must have one entry per simple");
    }
    if (ring.size() == 0) throw InputError("category has no simple objects");
    if (!data.twist[ring.unit()].is_zero()) throw MathError("twist of the unit must be 1");
    if (std::abs(data.qdim[ring.unit()] - 1.0) > kDimensionTolerance) throw MathError("dimension of the unit must be 1");
    for (Index a = 0; a < ring.size(); ++a) {
        if (data.twist[ring.dual(a)] != data.twist[a]) {
            throw MathError("twist of " + ring.label(a) + " differs from its dual");
        }
        if (is_invertible(ring, a) && std::abs(std::abs(data.qdim[a]) - 1.0) > kDimensionTolerance) {
            throw MathError("invertible " + ring.label(a) + " has |dim| != 1");
        }
    }
}

/// Level-k category of a simple Lie algebra: Kac-Walton fusion, twists from
/// conformal weights mod 1, quantum dimensions from the sine product.
inline ModularCategoryData build_wzw_data(const LieAlgebraSpec& spec, int level)
{
    if (level < 1) throw InputError("level must be >= 1");
    const std::vector<Weight> weights = alcove_weights(spec, level);
    const std::size_t n = weights.size();
    std::map<Weight, Index> index;
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) {
        index.emplace(weights[i], i);
        labels.push_back(render_weight(weights[i]));
    }

    // upper-triangular pairs, computed in parallel; the weight-diagram cache is shared
    std::vector<std::pair<Index, Index>> pairs;
    for (Index a = 0; a < n; ++a)
        for (Index b = a; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<WeightMultiset> products(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            products[i] = fusion_coefficients(spec, level, weights[pairs[i].first], weights[pairs[i].second]);
        }
    };
    const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::vector<std::vector<Channel>> table(n * n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [a, b] = pairs[i];
        for (const auto& [w, m] : products[i]) {
            table[a * n + b].push_back({index.at(w), m});
            if (a != b) table[b * n + a].push_back({index.at(w), m});
        }
    }
    Permutation dual(n, n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n && dual[a] == n; ++b) {
            const auto& fiber = table[a * n + b];
            if (!fiber.empty() && fiber.front().target == 0) dual[a] = b;
        }
        if (dual[a] == n) throw MathError("no dual found for " + labels[a]);
    }

    ModularCategoryData data;
    data.name = spec.name() + "@" + std::to_string(level);
    data.source = WzwSource{spec.family, spec.rank, level};
    data.ring = FusionRing(labels, 0, dual);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (const auto& ch : table[a * n + b]) data.ring.add(a, b, ch.target, ch.multiplicity);
    for (const auto& w : weights) {
        const Rational h = conformal_weight(spec, level, w);
        data.twist.emplace_back(h.numerator(), h.denominator());
        data.qdim.push_back(quantum_dimension(spec, level, w));
    }
    return data;
}

inline ModularCategoryData build_wzw_data(Family family, int rank, int level)
{
    return build_wzw_data(LieAlgebraSpec::make(family, rank), level);
}

namespace detail {
inline void require_unit_dimension(const ModularCategoryData& data, Index g)
{
    if (std::abs(std::abs(data.qdim[g]) - 1.0) > kDimensionTolerance) {
        throw MathError("invertible " + data.ring.label(g) + " has |dim| = " + std::to_string(data.qdim[g]));
    }
}
} // namespace detail

/**
 * Eigenvalue q of the self-braiding of an invertible g. The partial trace of
 * the braiding on g (x) g gives theta_g = q d_g, so q = theta_g sgn(d_g).
 */
inline RationalAngle self_braiding(const ModularCategoryData& data, Index g)
{
    require_invertible(data.ring, g);
    detail::require_unit_dimension(data, g);
    return data.qdim[g] < 0 ? data.twist[g] + RationalAngle(1, 2) : data.twist[g];
}

/// Double braiding of invertible g with a simple X, via the balancing
/// identity theta_{gX} / (theta_g theta_X). Valid because g (x) X is simple.
inline RationalAngle monodromy(const ModularCategoryData& data, Index g, Index x)
{
    require_invertible(data.ring, g);
    const Index gx = data.ring.product(g, x).front().target;
    return data.twist[gx] - data.twist[g] - data.twist[x];
}

/// Grade of every simple in Z/M: X lies in C_m when the monodromy equals zeta^m.
inline std::vector<std::int64_t> grading(const ModularCategoryData& data, const InvertibleProfile& p,
                                         const RationalAngle& zeta)
{
    if (!is_primitive_root(zeta, p.M)) {
        throw MathError("zeta = " + zeta.str() + " is not a primitive " + std::to_string(p.M) + "-th root of unity");
    }
    std::vector<std::int64_t> grades(data.size());
    for (Index x = 0; x < data.size(); ++x) {
        const RationalAngle mono = monodromy(data, p.g, x);
        std::int64_t m = 0;
        while (m < p.M && m * zeta != mono) ++m;
        if (m == p.M) {
            throw MathError("monodromy of " + data.ring.label(p.g) + " with " + data.ring.label(x) + " is " +
                            mono.str() + ", not a power of zeta = " + zeta.str());
        }
        grades[x] = m;
    }
    return grades;
}

/// Order N of the subgroup of Z/M actually hit by the grading.
inline std::int64_t grading_support(const ModularCategoryData& data, const InvertibleProfile& p)
{
    std::int64_t n = 1;
    for (Index x = 0; x < data.size(); ++x) n = std::lcm(n, monodromy(data, p.g, x).order());
    if (p.M % n != 0) throw MathError("grading support does not divide the order of " + data.ring.label(p.g));
    return n;
}

} // namespace scae
