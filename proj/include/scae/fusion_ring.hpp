#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scae/errors.hpp"

namespace scae {

using Index = std::size_t;
using Permutation = std::vector<Index>;

/// One fusion channel a (x) b -> c with multiplicity N.
struct Channel {
    Index target = 0;
    std::int64_t multiplicity = 0;

    friend bool operator==(const Channel&, const Channel&) = default;
};

/**
 * Based ring on a finite set of simple objects. N^c_{ab} is stored sparsely:
 * one small channel list per ordered pair (a, b), sorted by target.
 */
class FusionRing {
public:
    FusionRing() = default;

    FusionRing(std::vector<std::string> labels, Index unit, Permutation dual)
        : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)),
          channels_(labels_.size() * labels_.size())
    {
        if (dual_.size() != labels_.size()) throw InputError("dual permutation has wrong length");
        if (!labels_.empty() && unit_ >= labels_.size()) throw InputError("unit index out of range");
        for (Index d : dual_) {
            if (d >= labels_.size()) throw InputError("dual index out of range");
        }
    }

    std::size_t size() const { return labels_.size(); }
    Index unit() const { return unit_; }
    Index dual(Index a) const { return dual_.at(a); }
    const Permutation& dual_permutation() const { return dual_; }
    const std::string& label(Index a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<Index> find(const std::string& label) const
    {
        for (Index i = 0; i < labels_.size(); ++i) {
            if (labels_[i] == label) return i;
        }
        return std::nullopt;
    }

    /// Adds N to N^c_{ab}.
    void add(Index a, Index b, Index c, std::int64_t n)
    {
        check(a);
        check(b);
        check(c);
        if (n == 0) return;
        auto& fiber = channels_[a * size() + b];
        auto it = fiber.begin();
        while (it != fiber.end() && it->target < c) ++it;
        if (it != fiber.end() && it->target == c) {
            it->multiplicity += n;
        } else {
            fiber.insert(it, Channel{c, n});
        }
    }

    const std::vector<Channel>& product(Index a, Index b) const
    {
        check(a);
        check(b);
        return channels_[a * size() + b];
    }

    std::int64_t coefficient(Index a, Index b, Index c) const
    {
        for (const auto& ch : product(a, b)) {
            if (ch.target == c) return ch.multiplicity;
        }
        return 0;
    }

    friend bool operator==(const FusionRing&, const FusionRing&) = default;

private:
    void check(Index a) const
    {
        if (a >= size()) throw InputError("simple index " + std::to_string(a) + " out of range");
    }

    std::vector<std::string> labels_;
    Index unit_ = 0;
    Permutation dual_;
    std::vector<std::vector<Channel>> channels_;
};

/// Result of an axiom check; `violation` names the first failing identity.
struct AxiomReport {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
};

/// Unit, duality, involution and associativity axioms, checked exhaustively.
inline AxiomReport verify_axioms(const FusionRing& ring)
{
    const std::size_t n = ring.size();
    const Index u = ring.unit();
    auto fail = [](std::string msg) { return AxiomReport{false, std::move(msg)}; };
    auto idx = [](Index a) { return std::to_string(a); };

    for (Index a = 0; a < n; ++a) {
        if (ring.dual(ring.dual(a)) != a) return fail("dual is not an involution at " + idx(a));
        for (const auto& ch : ring.product(a, a)) {
            if (ch.multiplicity < 0) return fail("negative coefficient at (" + idx(a) + "," + idx(a) + ")");
        }
    }
    for (Index a = 0; a < n; ++a) {
        for (Index c = 0; c < n; ++c) {
            const std::int64_t expect = a == c ? 1 : 0;
            if (ring.coefficient(a, u, c) != expect) {
                return fail("unit axiom N^" + idx(c) + "_{" + idx(a) + ",unit} != " + std::to_string(expect));
            }
            if (ring.coefficient(u, a, c) != expect) {
                return fail("unit axiom N^" + idx(c) + "_{unit," + idx(a) + "} != " + std::to_string(expect));
            }
        }
        for (Index b = 0; b < n; ++b) {
            for (const auto& ch : ring.product(a, b)) {
                if (ch.multiplicity < 0) return fail("negative coefficient at (" + idx(a) + "," + idx(b) + ")");
            }
            const std::int64_t expect = b == ring.dual(a) ? 1 : 0;
            if (ring.coefficient(a, b, u) != expect) {
                return fail("duality axiom N^unit_{" + idx(a) + "," + idx(b) + "} != " + std::to_string(expect));
            }
        }
    }
    // sum_e N^e_ab N^d_ec = sum_f N^f_bc N^d_af
    std::vector<std::int64_t> lhs(n), rhs(n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            for (Index c = 0; c < n; ++c) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (const auto& e : ring.product(a, b)) {
                    for (const auto& d : ring.product(e.target, c)) lhs[d.target] += e.multiplicity * d.multiplicity;
                }
                for (const auto& f : ring.product(b, c)) {
                    for (const auto& d : ring.product(a, f.target)) rhs[d.target] += f.multiplicity * d.multiplicity;
                }
                if (lhs != rhs) {
                    return fail("associativity fails at (" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
                }
            }
        }
    }
    return {};
}

/// a is invertible iff a (x) a* contains the unit once and a (x) - permutes the simples.
inline bool is_invertible(const FusionRing& ring, Index a)
{
    if (ring.coefficient(a, ring.dual(a), ring.unit()) != 1) return false;
    std::int64_t total = 0;
    for (Index b = 0; b < ring.size(); ++b) {
        for (const auto& ch : ring.product(a, b)) total += ch.multiplicity;
    }
    return total == static_cast<std::int64_t>(ring.size());
}

inline std::vector<Index> invertibles(const FusionRing& ring)
{
    std::vector<Index> out;
    for (Index a = 0; a < ring.size(); ++a) {
        if (is_invertible(ring, a)) out.push_back(a);
    }
    return out;
}

inline void require_invertible(const FusionRing& ring, Index g)
{
    if (g >= ring.size() || !is_invertible(ring, g)) {
        throw MathError("object " + (g < ring.size() ? ring.label(g) : std::to_string(g)) + " is not invertible");
    }
}

/// X -> the unique simple summand of g (x) X.
inline Permutation fuse_permutation(const FusionRing& ring, Index g)
{
    require_invertible(ring, g);
    Permutation p(ring.size());
    for (Index x = 0; x < ring.size(); ++x) p[x] = ring.product(g, x).front().target;
    return p;
}

inline std::int64_t invertible_order(const FusionRing& ring, Index g)
{
    const Permutation p = fuse_permutation(ring, g);
    std::int64_t m = 1;
    for (Index x = g; x != ring.unit(); x = p[x]) ++m;
    return m;
}

inline bool is_ring_automorphism(const FusionRing& ring, const Permutation& pi)
{
    const std::size_t n = ring.size();
    if (pi.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (Index x : pi) {
        if (x >= n || hit[x]) return false;
        hit[x] = true;
    }
    if (n > 0 && pi[ring.unit()] != ring.unit()) return false;
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const auto& src = ring.product(a, b);
            const auto& dst = ring.product(pi[a], pi[b]);
            if (src.size() != dst.size()) return false;
            for (const auto& ch : src) {
                if (ring.coefficient(pi[a], pi[b], pi[ch.target]) != ch.multiplicity) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Permutation helpers

inline Permutation identity_permutation(std::size_t n)
{
    Permutation p(n);
    for (Index i = 0; i < n; ++i) p[i] = i;
    return p;
}

/// (outer o inner)(x) = outer(inner(x)).
inline Permutation compose_permutations(const Permutation& outer, const Permutation& inner)
{
    if (outer.size() != inner.size()) throw InputError("permutation size mismatch");
    Permutation p(inner.size());
    for (Index i = 0; i < inner.size(); ++i) p[i] = outer[inner[i]];
    return p;
}

inline Permutation permutation_power(const Permutation& p, std::int64_t k)
{
    Permutation r = identity_permutation(p.size());
    for (std::int64_t i = 0; i < k; ++i) r = compose_permutations(p, r);
    return r;
}

inline std::int64_t permutation_order(const Permutation& p)
{
    const Permutation id = identity_permutation(p.size());
    Permutation r = p;
    std::int64_t k = 1;
    while (r != id) {
        r = compose_permutations(p, r);
        ++k;
    }
    return k;
}

} // namespace scae
