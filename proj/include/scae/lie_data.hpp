#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <set>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "scae/errors.hpp"

namespace scae {

// Compare Rational only against Rational: boost 1.74 mixed comparisons recurse
// under C++20 rewritten operators.
using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// A weight written in the fundamental-weight basis (Dynkin labels).
struct Weight {
    std::vector<int> labels;

    Weight() = default;
    explicit Weight(std::vector<int> l) : labels(std::move(l)) {}
    Weight(std::initializer_list<int> l) : labels(l) {}

    static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    std::size_t size() const { return labels.size(); }
    int operator[](std::size_t i) const { return labels[i]; }
    int& operator[](std::size_t i) { return labels[i]; }

    bool is_dominant() const
    {
        return std::all_of(labels.begin(), labels.end(), [](int x) { return x >= 0; });
    }

    bool is_zero() const
    {
        return std::all_of(labels.begin(), labels.end(), [](int x) { return x == 0; });
    }

    Weight& operator+=(const Weight& o)
    {
        for (std::size_t i = 0; i < labels.size(); ++i) labels[i] += o.labels[i];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        for (std::size_t i = 0; i < labels.size(); ++i) labels[i] -= o.labels[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int n, Weight a)
    {
        for (int& x : a.labels) x *= n;
        return a;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Multiset of weights: weight -> multiplicity.
using WeightMultiset = std::map<Weight, std::int64_t>;

enum class Family { A, B, C, D, E, F, G };

inline char family_char(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

inline Family parse_family(const std::string& s)
{
    if (s.size() == 1) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
    }
    throw InputError("unsupported Lie family '" + s + "'");
}

struct PositiveRoot {
    std::vector<int> coords; // simple-root coordinates
    Weight labels;           // Dynkin labels
    int height = 0;
};

/**
 * @brief Root data of a simple Lie algebra.
 *
 * Everything is derived from the Cartan matrix a_ij = <alpha_i^vee, alpha_j>,
 * so the algorithms below are type-agnostic. The invariant form is normalized
 * so long roots have squared length 2.
 */
struct LieAlgebraSpec {
    Family family = Family::A;
    int rank = 0;
    IntMatrix cartan;
    std::vector<Rational> symmetrizer;   // (alpha_i, alpha_i) / 2
    RationalMatrix gram;                 // (Lambda_i, Lambda_j)
    std::vector<Rational> rho_pairing;   // (Lambda_i, 2 rho)
    int dual_coxeter = 0;
    std::vector<int> comark;             // (Lambda_i, theta)
    std::vector<PositiveRoot> positive_roots;
    Weight highest_root;

    std::string name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

    /// Dynkin labels of the simple root alpha_i (column i of the Cartan matrix).
    Weight simple_root(int i) const
    {
        Weight w = Weight::zero(rank);
        for (int j = 0; j < rank; ++j) w[j] = cartan[j][i];
        return w;
    }

    Weight rho() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 1)); }

    /// (w, alpha) for a positive root given in simple-root coordinates.
    Rational root_pairing(const Weight& w, const PositiveRoot& alpha) const
    {
        Rational s = 0;
        for (int i = 0; i < rank; ++i) {
            if (alpha.coords[i] != 0) s += Rational(w[i] * alpha.coords[i]) * symmetrizer[i];
        }
        return s;
    }

    /// sum_i comark_i w_i, i.e. (w, theta).
    std::int64_t level_of(const Weight& w) const
    {
        std::int64_t s = 0;
        for (int i = 0; i < rank; ++i) s += static_cast<std::int64_t>(comark[i]) * w[i];
        return s;
    }

    void check_rank(const Weight& w) const
    {
        if (static_cast<int>(w.size()) != rank) {
            throw InputError("weight has " + std::to_string(w.size()) + " labels, " + name() +
                             " has rank " + std::to_string(rank));
        }
    }

    static LieAlgebraSpec from_cartan(Family family, IntMatrix cartan);
    static LieAlgebraSpec make(Family family, int rank);
};

namespace detail {

inline RationalMatrix invert(const IntMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].numerator() == 0) ++piv;
        if (piv == n) throw InputError("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        const Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].numerator() == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

inline void link(IntMatrix& c, int i, int j, int aij = -1, int aji = -1)
{
    c[i][j] = aij;
    c[j][i] = aji;
}

inline IntMatrix cartan_matrix(Family f, int r)
{
    auto require = [&](bool ok) {
        if (!ok) {
            throw InputError(std::string("unsupported Lie type ") + family_char(f) + std::to_string(r));
        }
    };
    require(r >= 1);
    IntMatrix c(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    // Bourbaki numbering throughout
    switch (f) {
    case Family::A:
        for (int i = 0; i + 1 < r; ++i) link(c, i, i + 1);
        break;
    case Family::B:
        require(r >= 2);
        for (int i = 0; i + 2 < r; ++i) link(c, i, i + 1);
        link(c, r - 2, r - 1, -1, -2); // alpha_r short
        break;
    case Family::C:
        require(r >= 2);
        for (int i = 0; i + 2 < r; ++i) link(c, i, i + 1);
        link(c, r - 2, r - 1, -2, -1); // alpha_r long
        break;
    case Family::D:
        require(r >= 3);
        for (int i = 0; i + 3 < r; ++i) link(c, i, i + 1);
        link(c, r - 3, r - 2);
        link(c, r - 3, r - 1);
        break;
    case Family::E:
        require(r >= 6 && r <= 8);
        link(c, 0, 2);
        link(c, 1, 3);
        for (int i = 2; i + 1 < r; ++i) link(c, i, i + 1);
        break;
    case Family::F:
        require(r == 4);
        link(c, 0, 1);
        link(c, 1, 2, -1, -2);
        link(c, 2, 3);
        break;
    case Family::G:
        require(r == 2);
        link(c, 0, 1, -3, -1); // alpha_1 short
        break;
    }
    return c;
}

inline std::vector<Rational> symmetrize(const IntMatrix& c)
{
    const int n = static_cast<int>(c.size());
    std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
    d[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || c[i][j] == 0 || d[j].numerator() != 0) continue;
            d[j] = d[i] * Rational(c[i][j], c[j][i]);
            queue.push_back(j);
        }
    }
    if (std::any_of(d.begin(), d.end(), [](const Rational& x) { return x.numerator() == 0; })) {
        throw InputError("Cartan matrix is not indecomposable");
    }
    const Rational mx = *std::max_element(d.begin(), d.end());
    for (auto& x : d) x /= mx;
    return d;
}

inline std::vector<PositiveRoot> positive_roots(const IntMatrix& c)
{
    const int n = static_cast<int>(c.size());
    std::vector<PositiveRoot> roots;
    std::map<std::vector<int>, std::size_t> seen;
    auto add = [&](std::vector<int> coords) {
        if (seen.count(coords)) return;
        PositiveRoot r;
        r.labels = Weight::zero(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) r.labels[i] += c[i][j] * coords[j];
            r.height += coords[i];
        }
        r.coords = std::move(coords);
        seen.emplace(r.coords, roots.size());
        roots.push_back(std::move(r));
    };
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[i] = 1;
        add(e);
    }
    // roots are discovered in order of height, so every beta - alpha_i is
    // already present when beta is processed
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> down = roots[idx].coords;
            int p = 0;
            while (true) {
                --down[i];
                if (down[i] < 0 || !seen.count(down)) break;
                ++p;
            }
            const int q = p - roots[idx].labels[i];
            if (q > 0) {
                std::vector<int> up = roots[idx].coords;
                ++up[i];
                add(std::move(up));
            }
        }
    }
    return roots;
}

} // namespace detail

inline LieAlgebraSpec LieAlgebraSpec::from_cartan(Family family, IntMatrix cartan)
{
    LieAlgebraSpec s;
    s.family = family;
    s.rank = static_cast<int>(cartan.size());
    s.cartan = std::move(cartan);
    s.symmetrizer = detail::symmetrize(s.cartan);
    const RationalMatrix inv = detail::invert(s.cartan);
    s.gram.assign(s.rank, std::vector<Rational>(s.rank));
    for (int i = 0; i < s.rank; ++i)
        for (int k = 0; k < s.rank; ++k) s.gram[i][k] = inv[k][i] * s.symmetrizer[k];
    s.rho_pairing.assign(s.rank, Rational(0));
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) s.rho_pairing[i] += 2 * s.gram[i][j];
    s.positive_roots = detail::positive_roots(s.cartan);
    const auto top = std::max_element(s.positive_roots.begin(), s.positive_roots.end(),
                                      [](const PositiveRoot& a, const PositiveRoot& b) { return a.height < b.height; });
    s.highest_root = top->labels;
    s.comark.assign(s.rank, 0);
    s.dual_coxeter = 1;
    for (int i = 0; i < s.rank; ++i) {
        Rational v = 0;
        for (int j = 0; j < s.rank; ++j) v += s.gram[i][j] * s.highest_root[j];
        if (v.denominator() != 1) throw InputError("non-integral comark");
        s.comark[i] = static_cast<int>(v.numerator());
        s.dual_coxeter += s.comark[i];
    }
    return s;
}

inline LieAlgebraSpec LieAlgebraSpec::make(Family family, int rank)
{
    return from_cartan(family, detail::cartan_matrix(family, rank));
}

// ---------------------------------------------------------------------------
// Inner products, reflections, alcoves

inline Rational inner_product(const LieAlgebraSpec& spec, const Weight& a, const Weight& b)
{
    spec.check_rank(a);
    spec.check_rank(b);
    Rational s = 0;
    for (int i = 0; i < spec.rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < spec.rank; ++j) {
            if (b[j] != 0) s += Rational(a[i] * b[j]) * spec.gram[i][j];
        }
    }
    return s;
}

/// Simple reflection s_i in Dynkin labels: w - w_i alpha_i.
inline Weight reflect(const LieAlgebraSpec& spec, Weight w, int i)
{
    const int wi = w[i];
    for (int j = 0; j < spec.rank; ++j) w[j] -= wi * spec.cartan[j][i];
    return w;
}

struct SignedWeight {
    Weight weight;
    int sign = 1;
    bool on_wall = false;
};

/// Moves w into the closed dominant chamber, tracking (-1)^length.
inline SignedWeight reflect_to_dominant(const LieAlgebraSpec& spec, Weight w)
{
    int sign = 1;
    while (true) {
        int i = 0;
        while (i < spec.rank && w[i] >= 0) ++i;
        if (i == spec.rank) break;
        w = reflect(spec, std::move(w), i);
        sign = -sign;
    }
    const bool wall = std::any_of(w.labels.begin(), w.labels.end(), [](int x) { return x == 0; });
    return {std::move(w), sign, wall};
}

inline bool in_alcove(const LieAlgebraSpec& spec, int level, const Weight& w)
{
    return static_cast<int>(w.size()) == spec.rank && w.is_dominant() && spec.level_of(w) <= level;
}

/// Dominant weights with sum comark_i * lambda_i <= level, in lexicographic order.
inline std::vector<Weight> alcove_weights(const LieAlgebraSpec& spec, int level)
{
    std::vector<Weight> out;
    Weight w = Weight::zero(spec.rank);
    // odometer in lexicographic order (last label varies fastest)
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i == spec.rank) {
            out.push_back(w);
            return;
        }
        for (int x = 0; x * spec.comark[i] <= budget; ++x) {
            w[i] = x;
            self(self, i + 1, budget - x * spec.comark[i]);
        }
        w[i] = 0;
    };
    if (level >= 0) rec(rec, 0, level);
    return out;
}

// ---------------------------------------------------------------------------
// Weight diagrams (Freudenthal)

inline std::int64_t weyl_dimension(const LieAlgebraSpec& spec, const Weight& lambda)
{
    spec.check_rank(lambda);
    const Weight shifted = lambda + spec.rho();
    Rational d = 1;
    for (const auto& a : spec.positive_roots) d *= spec.root_pairing(shifted, a) / spec.root_pairing(spec.rho(), a);
    if (d.denominator() != 1) throw MathError("non-integral Weyl dimension");
    return d.numerator();
}

/// Weyl orbit of a weight.
inline std::vector<Weight> weyl_orbit(const LieAlgebraSpec& spec, const Weight& w)
{
    std::set<Weight> seen{w};
    std::vector<Weight> out{w};
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        for (int i = 0; i < spec.rank; ++i) {
            if (out[idx][i] == 0) continue;
            Weight r = reflect(spec, out[idx], i);
            if (seen.insert(r).second) out.push_back(std::move(r));
        }
    }
    return out;
}

struct WeightDiagram {
    Weight highest;
    std::map<Weight, std::int64_t> dominant; // dominant weights only
    WeightMultiset all;                      // full diagram
    std::int64_t dimension = 0;
};

namespace detail {

inline WeightDiagram compute_weight_diagram(const LieAlgebraSpec& spec, const Weight& lambda)
{
    if (!lambda.is_dominant()) throw InputError("highest weight must be dominant");
    WeightDiagram diag;
    diag.highest = lambda;

    // Dominant weights of V_lambda: closed under subtracting positive roots
    // while staying dominant (covers in dominance order are positive roots).
    std::vector<Weight> dom{lambda};
    std::set<Weight> seen{lambda};
    for (std::size_t idx = 0; idx < dom.size(); ++idx) {
        for (const auto& a : spec.positive_roots) {
            Weight w = dom[idx] - a.labels;
            if (w.is_dominant() && seen.insert(w).second) dom.push_back(std::move(w));
        }
    }

    const Weight rho = spec.rho();
    auto norm_shift = [&](const Weight& w) {
        const Weight s = w + rho;
        return inner_product(spec, s, s);
    };
    const Rational top = norm_shift(lambda);
    std::vector<std::pair<Rational, Weight>> order;
    order.reserve(dom.size());
    for (const auto& w : dom) order.emplace_back(norm_shift(w), w);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });

    auto mult_of = [&](const Weight& w) -> std::int64_t {
        const Weight d = reflect_to_dominant(spec, w).weight;
        const auto it = diag.dominant.find(d);
        return it == diag.dominant.end() ? 0 : it->second;
    };

    for (const auto& [nrm, mu] : order) {
        if (mu == lambda) {
            diag.dominant[mu] = 1;
            continue;
        }
        // weights strictly above mu in dominance have strictly larger norm,
        // so every multiplicity read below is already final
        Rational sum = 0;
        for (const auto& a : spec.positive_roots) {
            Weight w = mu;
            while (true) {
                w += a.labels;
                if (!seen.count(reflect_to_dominant(spec, w).weight)) break;
                const std::int64_t m = mult_of(w);
                if (m != 0) sum += Rational(m) * spec.root_pairing(w, a);
            }
        }
        const Rational m = 2 * sum / (top - nrm);
        if (m.denominator() != 1 || m.numerator() < 0) throw MathError("Freudenthal recursion produced a non-integer");
        if (m.numerator() > 0) diag.dominant[mu] = m.numerator();
    }

    for (const auto& [mu, m] : diag.dominant) {
        for (auto& w : weyl_orbit(spec, mu)) {
            diag.all[w] = m;
            diag.dimension += m;
        }
    }
    return diag;
}

class WeightDiagramCache {
public:
    std::shared_ptr<const WeightDiagram> get(const LieAlgebraSpec& spec, const Weight& lambda)
    {
        Key key{spec.cartan, lambda};
        {
            std::shared_lock lock(mutex_);
            const auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        auto diag = std::make_shared<const WeightDiagram>(compute_weight_diagram(spec, lambda));
        std::unique_lock lock(mutex_);
        // a concurrent insert of the same key computed the same diagram; keep the first
        return cache_.emplace(std::move(key), std::move(diag)).first->second;
    }

    static WeightDiagramCache& instance()
    {
        static WeightDiagramCache cache;
        return cache;
    }

private:
    using Key = std::pair<IntMatrix, Weight>;
    std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const WeightDiagram>> cache_;
};

} // namespace detail

/// Memoized weight diagram of V_lambda.
inline std::shared_ptr<const WeightDiagram> weight_diagram(const LieAlgebraSpec& spec, const Weight& lambda)
{
    spec.check_rank(lambda);
    return detail::WeightDiagramCache::instance().get(spec, lambda);
}

inline WeightMultiset weight_multiplicities(const LieAlgebraSpec& spec, const Weight& lambda)
{
    return weight_diagram(spec, lambda)->all;
}

// ---------------------------------------------------------------------------
// Tensor products and fusion

namespace detail {

inline void drop_zeros(WeightMultiset& m)
{
    for (auto it = m.begin(); it != m.end();) {
        if (it->second < 0) throw MathError("negative multiplicity after cancellation");
        it = it->second == 0 ? m.erase(it) : std::next(it);
    }
}

} // namespace detail

/// Racah-Speiser decomposition of V_lambda (x) V_mu.
inline WeightMultiset tensor_decompose(const LieAlgebraSpec& spec, const Weight& lambda, const Weight& mu)
{
    spec.check_rank(lambda);
    spec.check_rank(mu);
    if (!lambda.is_dominant() || !mu.is_dominant()) throw InputError("tensor_decompose needs dominant weights");
    // walk the smaller diagram
    const bool swap = weyl_dimension(spec, lambda) < weyl_dimension(spec, mu);
    const Weight& outer = swap ? mu : lambda;
    const Weight& inner = swap ? lambda : mu;
    const auto diag = weight_diagram(spec, inner);
    const Weight shift = outer + spec.rho();
    WeightMultiset out;
    for (const auto& [nu, m] : diag->all) {
        const SignedWeight r = reflect_to_dominant(spec, shift + nu);
        if (r.on_wall) continue;
        out[r.weight - spec.rho()] += r.sign * m;
    }
    detail::drop_zeros(out);
    return out;
}

/// Folds a dominant weight into the level-k alcove under the shifted affine
/// Weyl action. Returns sign 0 for weights fixed by some reflection.
inline std::pair<Weight, int> affine_fold(const LieAlgebraSpec& spec, int level, const Weight& weight)
{
    const std::int64_t shifted_level = level + spec.dual_coxeter;
    Weight w = weight + spec.rho();
    int sign = 1;
    while (true) {
        int i = 0;
        while (i < spec.rank && w[i] >= 0) ++i;
        if (i < spec.rank) {
            w = reflect(spec, std::move(w), i);
            sign = -sign;
            continue;
        }
        const std::int64_t t = spec.level_of(w);
        if (t <= shifted_level) break;
        // affine reflection through (x, theta) = k + h^vee
        const int c = static_cast<int>(t - shifted_level);
        w -= c * spec.highest_root;
        sign = -sign;
    }
    const bool wall = spec.level_of(w) == shifted_level ||
                      std::any_of(w.labels.begin(), w.labels.end(), [](int x) { return x == 0; });
    if (wall) return {Weight::zero(spec.rank), 0};
    return {w - spec.rho(), sign};
}

/// Level-k fusion product of two alcove weights (Kac-Walton).
inline WeightMultiset fusion_coefficients(const LieAlgebraSpec& spec, int level, const Weight& lambda, const Weight& mu)
{
    if (!in_alcove(spec, level, lambda) || !in_alcove(spec, level, mu)) {
        throw InputError("fusion_coefficients: weight outside the level-" + std::to_string(level) + " alcove");
    }
    WeightMultiset out;
    for (const auto& [nu, m] : tensor_decompose(spec, lambda, mu)) {
        const auto [folded, sign] = affine_fold(spec, level, nu);
        if (sign != 0) out[folded] += sign * m;
    }
    detail::drop_zeros(out);
    return out;
}

// ---------------------------------------------------------------------------
// Modular data of the level-k category

/// h_lambda = (lambda, lambda + 2 rho) / (2 (k + h^vee)).
inline Rational conformal_weight(const LieAlgebraSpec& spec, int level, const Weight& lambda)
{
    if (!in_alcove(spec, level, lambda)) throw InputError("conformal_weight: weight outside the alcove");
    const Rational num = inner_product(spec, lambda, lambda + 2 * spec.rho());
    return num / Rational(2 * (level + spec.dual_coxeter));
}

/// Quantum dimension as the sine product over positive roots.
inline double quantum_dimension(const LieAlgebraSpec& spec, int level, const Weight& lambda)
{
    if (!in_alcove(spec, level, lambda)) throw InputError("quantum_dimension: weight outside the alcove");
    const double denom = static_cast<double>(level + spec.dual_coxeter);
    const Weight shifted = lambda + spec.rho();
    const Weight rho = spec.rho();
    double d = 1.0;
    for (const auto& a : spec.positive_roots) {
        const double top = boost::rational_cast<double>(spec.root_pairing(shifted, a));
        const double bot = boost::rational_cast<double>(spec.root_pairing(rho, a));
        d *= std::sin(std::numbers::pi * top / denom) / std::sin(std::numbers::pi * bot / denom);
    }
    return d;
}

} // namespace scae
