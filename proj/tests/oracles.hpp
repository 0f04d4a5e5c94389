#pragma once

// Reference computations that share no code with the library: weights are
// handled in orthonormal epsilon coordinates, Weyl groups are (signed)
// permutations of those coordinates, characters of sl(n+1) come from
// semistandard tableaux, and fusion rules come from the Verlinde formula.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

using Labels = std::vector<int>;
using Vec = std::vector<double>;

struct RootSystem {
    char family;   // 'A' or 'D'
    int rank;

    int dual_coxeter() const { return family == 'A' ? rank + 1 : 2 * rank - 2; }
    int dim() const { return family == 'A' ? rank + 1 : rank; }

    Vec fundamental(int i) const
    {
        Vec v(static_cast<std::size_t>(dim()), 0.0);
        if (family == 'A') {
            for (int j = 0; j <= i; ++j) v[j] = 1.0;
            const double mean = static_cast<double>(i + 1) / dim();
            for (double& x : v) x -= mean;
        } else if (i < rank - 2) {
            for (int j = 0; j <= i; ++j) v[j] = 1.0;
        } else {
            for (int j = 0; j < rank; ++j) v[j] = 0.5;
            if (i == rank - 2) v[rank - 1] = -0.5;
        }
        return v;
    }

    Vec embed(const Labels& w) const
    {
        Vec v(static_cast<std::size_t>(dim()), 0.0);
        for (int i = 0; i < rank; ++i) {
            const Vec f = fundamental(i);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += w[i] * f[j];
        }
        return v;
    }

    /// Weyl group as (permutation, signs, determinant).
    struct Element {
        std::vector<int> perm;
        std::vector<int> sign;
        int det;
    };

    std::vector<Element> weyl_group() const
    {
        std::vector<Element> out;
        std::vector<int> perm(static_cast<std::size_t>(dim()));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
            const int psign = inversions % 2 ? -1 : 1;
            if (family == 'A') {
                out.push_back({perm, std::vector<int>(perm.size(), 1), psign});
                continue;
            }
            for (int mask = 0; mask < (1 << rank); ++mask) {
                if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
                std::vector<int> s(static_cast<std::size_t>(rank));
                for (int j = 0; j < rank; ++j) s[j] = (mask >> j) & 1 ? -1 : 1;
                out.push_back({perm, s, psign});
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }

    static Vec act(const Element& w, const Vec& v)
    {
        Vec out(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) out[w.perm[j]] = w.sign[j] * v[j];
        return out;
    }
};

inline double dot(const Vec& a, const Vec& b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Alcove weights: (w, theta) <= k, with theta's comarks hard-coded per family.
inline std::vector<Labels> alcove(const RootSystem& rs, int level)
{
    std::vector<int> comark(static_cast<std::size_t>(rs.rank), 1);
    if (rs.family == 'D')
        for (int i = 1; i < rs.rank - 2; ++i) comark[i] = 2;
    std::vector<Labels> out;
    Labels w(static_cast<std::size_t>(rs.rank), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rs.rank) {
            out.push_back(w);
            return;
        }
        for (int c = 0; c * comark[i] <= left; ++c) {
            w[i] = c;
            rec(i + 1, left - c * comark[i]);
        }
        w[i] = 0;
    };
    rec(0, level);
    return out;
}

/// Modular data from the Kac-Peterson formula.
struct ModularOracle {
    std::vector<Labels> weights;
    std::vector<std::vector<std::complex<double>>> S;
    std::vector<double> h; // conformal weights

    ModularOracle(const RootSystem& rs, int level) : weights(alcove(rs, level))
    {
        const double kh = level + rs.dual_coxeter();
        const Labels ones(static_cast<std::size_t>(rs.rank), 1);
        const Vec rho = rs.embed(ones);
        const auto W = rs.weyl_group();
        const std::size_t n = weights.size();
        std::vector<Vec> shifted;
        for (const auto& w : weights) {
            Vec v = rs.embed(w);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += rho[j];
            shifted.push_back(v);
            h.push_back((dot(v, v) - dot(rho, rho)) / (2 * kh));
        }
        S.assign(n, std::vector<std::complex<double>>(n));
        for (std::size_t a = 0; a < n; ++a) {
            for (const auto& g : W) {
                const Vec wa = RootSystem::act(g, shifted[a]);
                for (std::size_t b = 0; b < n; ++b) {
                    S[a][b] += static_cast<double>(g.det) *
                               std::exp(std::complex<double>(0, -2 * std::numbers::pi * dot(wa, shifted[b]) / kh));
                }
            }
        }
        double norm = 0;
        for (std::size_t b = 0; b < n; ++b) norm += std::norm(S[0][b]);
        norm = std::sqrt(norm);
        for (auto& row : S)
            for (auto& x : row) x /= norm;
    }

    std::int64_t verlinde(std::size_t a, std::size_t b, std::size_t c) const
    {
        std::complex<double> s = 0;
        for (std::size_t x = 0; x < weights.size(); ++x) s += S[a][x] * S[b][x] * std::conj(S[c][x]) / S[0][x];
        return std::llround(s.real());
    }

    double qdim(std::size_t a) const { return (S[a][0] / S[0][0]).real(); }
};

// --- sl(n+1) characters from semistandard tableaux --------------------------

/// Weight multiset (Dynkin labels) of the irreducible sl(n+1) module.
inline std::map<Labels, std::int64_t> sl_character(const Labels& lambda)
{
    const int n = static_cast<int>(lambda.size());
    std::vector<int> rows(static_cast<std::size_t>(n), 0); // partition
    for (int i = n - 1, acc = 0; i >= 0; --i) rows[i] = acc += lambda[i];
    std::vector<std::vector<int>> tab;
    for (int r : rows) tab.emplace_back(static_cast<std::size_t>(r), 0);
    std::map<Labels, std::int64_t> out;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < rows[r]; ++c) cells.emplace_back(r, c);
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            std::vector<int> content(static_cast<std::size_t>(n + 1), 0);
            for (const auto& row : tab)
                for (int x : row) ++content[x];
            Labels w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) w[i] = content[i] - content[i + 1];
            ++out[w];
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 0;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int x = lo; x <= n; ++x) {
            tab[r][c] = x;
            fill(idx + 1);
        }
    };
    fill(0);
    return out;
}

/// Decomposes V_lambda (x) V_mu by peeling highest weights off the product character.
inline std::map<Labels, std::int64_t> sl_tensor(const Labels& lambda, const Labels& mu)
{
    const int n = static_cast<int>(lambda.size());
    std::map<Labels, std::int64_t> product;
    const auto a = sl_character(lambda), b = sl_character(mu);
    for (const auto& [x, mx] : a)
        for (const auto& [y, my] : b) {
            Labels s(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) s[i] = x[i] + y[i];
            product[s] += mx * my;
        }
    // height (w, 2 rho^vee) via the inverse Cartan matrix of A_n
    auto height = [&](const Labels& w) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<std::int64_t>(i + 1) * (n - i) * w[i];
        return s;
    };
    std::map<Labels, std::int64_t> out;
    while (true) {
        const Labels* top = nullptr;
        for (const auto& [w, m] : product) {
            if (m != 0 && (!top || height(w) > height(*top))) top = &w;
        }
        if (!top) break;
        const Labels nu = *top;
        const std::int64_t m = product[nu];
        out[nu] += m;
        for (const auto& [w, c] : sl_character(nu)) product[w] -= m * c;
    }
    return out;
}

inline std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    return count;
}

} // namespace oracle
