#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "scae/errors.hpp"
#include "scae/fusion_ring.hpp"
#include "scae/simple_current.hpp"

namespace scae {

/// Finite group given by its multiplication table; element 0 is the identity.
struct CayleyTable {
    std::size_t order = 0;
    std::vector<std::size_t> mul; // mul[a * order + b] = a * b

    std::size_t operator()(std::size_t a, std::size_t b) const { return mul[a * order + b]; }

    static CayleyTable from_rule(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& rule)
    {
        CayleyTable t{n, std::vector<std::size_t>(n * n)};
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t.mul[a * n + b] = rule(a, b);
        return t;
    }
};

struct PermutationGroup {
    std::vector<Permutation> elements; // elements[0] is the identity
    CayleyTable table;                 // table(i, j) = elements[i] o elements[j]
    std::string isomorphism_type;
    std::string caveat;
};

inline constexpr std::size_t kDefaultGroupCap = 1024;

inline const char* kPermutationLevelCaveat =
    "equality is tested on the action on simple objects only; auto-equivalences with the same "
    "permutation may still differ in their tensor structure";

// ---------------------------------------------------------------------------
// Small-group catalog and isomorphism testing

namespace group_detail {

inline std::size_t element_order(const CayleyTable& t, std::size_t x)
{
    std::size_t k = 1;
    for (std::size_t y = x; y != 0; y = t(y, x)) ++k;
    return k;
}

inline std::vector<std::size_t> order_profile(const CayleyTable& t)
{
    std::vector<std::size_t> v;
    for (std::size_t x = 0; x < t.order; ++x) v.push_back(element_order(t, x));
    std::sort(v.begin(), v.end());
    return v;
}

/// Greedy generating set: each generator lies outside the subgroup of the previous ones.
inline std::vector<std::size_t> generators(const CayleyTable& t)
{
    std::vector<std::size_t> gens;
    std::vector<bool> in(t.order, false);
    in[0] = true;
    auto close = [&]() {
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < t.order; ++x)
            if (in[x]) members.push_back(x);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t g : gens) {
                const std::size_t y = t(members[i], g);
                if (!in[y]) {
                    in[y] = true;
                    members.push_back(y);
                }
            }
        }
    };
    // prefer high-order elements for short generating sets
    std::vector<std::size_t> by_order(t.order);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](std::size_t a, std::size_t b) { return element_order(t, a) > element_order(t, b); });
    for (std::size_t x : by_order) {
        if (in[x]) continue;
        gens.push_back(x);
        close();
    }
    return gens;
}

/// Tries to extend gen_i -> images[i] to an isomorphism G -> H.
inline bool extends_to_isomorphism(const CayleyTable& g, const CayleyTable& h, const std::vector<std::size_t>& gens,
                                   const std::vector<std::size_t>& images)
{
    const std::size_t none = g.order;
    std::vector<std::size_t> phi(g.order, none);
    phi[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const std::size_t x = queue[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const std::size_t y = g(x, gens[k]);
            const std::size_t img = h(phi[x], images[k]);
            if (phi[y] == none) {
                phi[y] = img;
                queue.push_back(y);
            } else if (phi[y] != img) {
                return false;
            }
        }
    }
    std::vector<bool> hit(h.order, false);
    for (std::size_t x = 0; x < g.order; ++x) {
        if (phi[x] == none || hit[phi[x]]) return false;
        hit[phi[x]] = true;
    }
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b)
            if (phi[g(a, b)] != h(phi[a], phi[b])) return false;
    return true;
}

} // namespace group_detail

inline bool is_isomorphic(const CayleyTable& g, const CayleyTable& h)
{
    using namespace group_detail;
    if (g.order != h.order || order_profile(g) != order_profile(h)) return false;
    const auto gens = generators(g);
    std::vector<std::size_t> images(gens.size());
    // backtrack over order-preserving images of the generators
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == gens.size()) return extends_to_isomorphism(g, h, gens, images);
        const std::size_t want = element_order(g, gens[k]);
        for (std::size_t y = 0; y < h.order; ++y) {
            if (element_order(h, y) != want) continue;
            images[k] = y;
            if (self(self, k + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

namespace group_detail {

inline CayleyTable cyclic(std::size_t n)
{
    return CayleyTable::from_rule(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

inline CayleyTable direct(const CayleyTable& g, const CayleyTable& h)
{
    const std::size_t m = h.order;
    return CayleyTable::from_rule(g.order * m, [&](std::size_t a, std::size_t b) {
        return g(a / m, b / m) * m + h(a % m, b % m);
    });
}

/// Z_n x| Z_m where the generator of Z_m acts by multiplication by r (r^m = 1 mod n).
inline CayleyTable semidirect(std::size_t n, std::size_t m, std::size_t r)
{
    return CayleyTable::from_rule(n * m, [=](std::size_t x, std::size_t y) {
        const std::size_t a = x / m, b = x % m, c = y / m, d = y % m;
        std::size_t rb = 1;
        for (std::size_t i = 0; i < b; ++i) rb = rb * r % n;
        return ((a + rb * c) % n) * m + (b + d) % m;
    });
}

/// Dicyclic group <a, x | a^{2n}, x^2 = a^n, x a x^-1 = a^-1> of order 4n.
inline CayleyTable dicyclic(std::size_t n)
{
    const std::size_t n2 = 2 * n;
    return CayleyTable::from_rule(2 * n2, [=](std::size_t x, std::size_t y) {
        const std::size_t k = x / 2, e = x % 2, l = y / 2, f = y % 2;
        std::size_t kk = e ? (k + n2 - l) % n2 : (k + l) % n2;
        if (e && f) kk = (kk + n) % n2;
        return kk * 2 + (e + f) % 2;
    });
}

/// Z_4 o D_4 realised as i^k X^a Z^b with XZ = -ZX.
inline CayleyTable pauli()
{
    return CayleyTable::from_rule(16, [](std::size_t x, std::size_t y) {
        const std::size_t k = x / 4, a = (x / 2) % 2, b = x % 2;
        const std::size_t l = y / 4, c = (y / 2) % 2, d = y % 2;
        return ((k + l + 2 * b * c) % 4) * 4 + ((a + c) % 2) * 2 + (b + d) % 2;
    });
}

/// (Z_2 x Z_2) x| Z_4 with the generator swapping the two factors.
inline CayleyTable swap_by_z4()
{
    return CayleyTable::from_rule(16, [](std::size_t x, std::size_t y) {
        const std::size_t v1 = x / 8, v2 = (x / 4) % 2, b = x % 4;
        std::size_t w1 = y / 8, w2 = (y / 4) % 2;
        const std::size_t d = y % 4;
        if (b % 2) std::swap(w1, w2);
        return ((v1 + w1) % 2) * 8 + ((v2 + w2) % 2) * 4 + (b + d) % 4;
    });
}

inline CayleyTable alternating4()
{
    // even permutations of {0,1,2,3}, enumerated in lexicographic order
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
        if (inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return CayleyTable::from_rule(perms.size(), [&](std::size_t a, std::size_t b) {
        std::array<int, 4> c{};
        for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    });
}

} // namespace group_detail

struct NamedGroup {
    std::string name;
    CayleyTable table;
};

/// Every group of order at most 16, up to isomorphism.
inline const std::vector<NamedGroup>& small_group_catalog()
{
    using namespace group_detail;
    static const std::vector<NamedGroup> catalog = [] {
        const auto z = [](std::size_t n) { return cyclic(n); };
        std::vector<NamedGroup> c{
            {"trivial", z(1)},
            {"Z2", z(2)},
            {"Z3", z(3)},
            {"Z4", z(4)},
            {"Z2 x Z2", direct(z(2), z(2))},
            {"Z5", z(5)},
            {"Z6", z(6)},
            {"S3", semidirect(3, 2, 2)},
            {"Z7", z(7)},
            {"Z8", z(8)},
            {"Z2 x Z4", direct(z(2), z(4))},
            {"Z2 x Z2 x Z2", direct(z(2), direct(z(2), z(2)))},
            {"D4", semidirect(4, 2, 3)},
            {"Q8", dicyclic(2)},
            {"Z9", z(9)},
            {"Z3 x Z3", direct(z(3), z(3))},
            {"Z10", z(10)},
            {"D5", semidirect(5, 2, 4)},
            {"Z11", z(11)},
            {"Z12", z(12)},
            {"Z2 x Z6", direct(z(2), z(6))},
            {"A4", alternating4()},
            {"D6", semidirect(6, 2, 5)},
            {"Dic3", dicyclic(3)},
            {"Z13", z(13)},
            {"Z14", z(14)},
            {"D7", semidirect(7, 2, 6)},
            {"Z15", z(15)},
            {"Z16", z(16)},
            {"Z4 x Z4", direct(z(4), z(4))},
            {"Z2 x Z8", direct(z(2), z(8))},
            {"Z2 x Z2 x Z4", direct(z(2), direct(z(2), z(4)))},
            {"Z2 x Z2 x Z2 x Z2", direct(z(2), direct(z(2), direct(z(2), z(2))))},
            {"D8", semidirect(8, 2, 7)},
            {"SD16", semidirect(8, 2, 3)},
            {"Q16", dicyclic(4)},
            {"M16", semidirect(8, 2, 5)},
            {"Z4 : Z4", semidirect(4, 4, 3)},
            {"Z2 x D4", direct(z(2), semidirect(4, 2, 3))},
            {"Z2 x Q8", direct(z(2), dicyclic(2))},
            {"Z4 o D4", pauli()},
            {"(Z2 x Z2) : Z4", swap_by_z4()},
        };
        return c;
    }();
    return catalog;
}

/// Catalog name of the group, or a generic description beyond order 16.
inline std::string identify_group(const CayleyTable& t)
{
    for (const auto& g : small_group_catalog()) {
        if (g.table.order == t.order && is_isomorphic(g.table, t)) return g.name;
    }
    bool abelian = true;
    for (std::size_t a = 0; a < t.order && abelian; ++a)
        for (std::size_t b = 0; b < t.order && abelian; ++b) abelian = t(a, b) == t(b, a);
    return std::string(abelian ? "abelian" : "non-abelian") + " group of order " + std::to_string(t.order);
}

// ---------------------------------------------------------------------------
// Closure of a set of permutations

inline PermutationGroup generate_permutation_group(const std::vector<Permutation>& gens, std::size_t degree,
                                                   std::size_t cap = kDefaultGroupCap)
{
    for (const auto& g : gens) {
        if (g.size() != degree) throw InputError("generator has wrong degree");
    }
    PermutationGroup G;
    std::map<Permutation, std::size_t> index;
    G.elements.push_back(identity_permutation(degree));
    index.emplace(G.elements[0], 0);
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        for (const auto& g : gens) {
            Permutation p = compose_permutations(g, G.elements[i]);
            if (index.count(p)) continue;
            if (G.elements.size() >= cap) {
                throw MathError("group closure exceeds the cap of " + std::to_string(cap) + " elements");
            }
            index.emplace(p, G.elements.size());
            G.elements.push_back(std::move(p));
        }
    }
    const std::size_t n = G.elements.size();
    G.table = CayleyTable::from_rule(n, [&](std::size_t a, std::size_t b) {
        return index.at(compose_permutations(G.elements[a], G.elements[b]));
    });
    G.isomorphism_type = identify_group(G.table);
    G.caveat = kPermutationLevelCaveat;
    return G;
}

/// Group generated by the permutations of the given auto-equivalences.
/// `degree` is the number of simples, used when the list is empty.
inline PermutationGroup generated_group(const std::vector<CurrentAutoEq>& autoeqs, std::size_t degree,
                                        std::size_t cap = kDefaultGroupCap)
{
    std::vector<Permutation> gens;
    for (const auto& f : autoeqs) {
        if (f.category != autoeqs.front().category) {
            throw InputError("generators come from different categories");
        }
        gens.push_back(f.permutation);
    }
    return generate_permutation_group(gens, degree, cap);
}

} // namespace scae
