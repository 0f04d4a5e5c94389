#include <gtest/gtest.h>

#include "scae/fusion_ring.hpp"

using namespace scae;

namespace {

FusionRing cyclic_ring(Index n)
{
    std::vector<std::string> labels;
    Permutation dual(n);
    for (Index a = 0; a < n; ++a) {
        labels.push_back("g" + std::to_string(a));
        dual[a] = (n - a) % n;
    }
    FusionRing r(labels, 0, dual);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) r.add(a, b, (a + b) % n, 1);
    return r;
}

FusionRing fibonacci_ring()
{
    FusionRing r({"1", "tau"}, 0, {0, 1});
    r.add(0, 0, 0, 1);
    r.add(0, 1, 1, 1);
    r.add(1, 0, 1, 1);
    r.add(1, 1, 0, 1);
    r.add(1, 1, 1, 1);
    return r;
}

FusionRing ising_ring()
{
    FusionRing r({"1", "sigma", "psi"}, 0, {0, 1, 2});
    const std::int64_t table[3][3][3] = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                         {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}},
                                         {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
    for (Index a = 0; a < 3; ++a)
        for (Index b = 0; b < 3; ++b)
            for (Index c = 0; c < 3; ++c) r.add(a, b, c, table[a][b][c]);
    return r;
}

} // namespace

TEST(FusionRing, KnownRingsSatisfyAxioms)
{
    for (Index n = 1; n <= 7; ++n) EXPECT_TRUE(verify_axioms(cyclic_ring(n))) << n;
    EXPECT_TRUE(verify_axioms(fibonacci_ring()));
    EXPECT_TRUE(verify_axioms(ising_ring()));
}

TEST(FusionRing, AxiomViolationsAreReported)
{
    {
        FusionRing r({"1", "a", "b"}, 0, {0, 2, 2});
        const auto rep = verify_axioms(r);
        EXPECT_FALSE(rep);
        EXPECT_NE(rep.violation.find("involution"), std::string::npos);
    }
    {
        FusionRing r = cyclic_ring(3);
        r.add(1, 0, 2, 1);
        const auto rep = verify_axioms(r);
        EXPECT_FALSE(rep);
        EXPECT_NE(rep.violation.find("unit"), std::string::npos);
    }
    {
        // 1 (x) a fine, but a (x) a misses the unit although a is self-dual
        FusionRing r({"1", "a"}, 0, {0, 1});
        r.add(0, 0, 0, 1);
        r.add(0, 1, 1, 1);
        r.add(1, 0, 1, 1);
        r.add(1, 1, 1, 1);
        const auto rep = verify_axioms(r);
        EXPECT_FALSE(rep);
        EXPECT_NE(rep.violation.find("duality"), std::string::npos);
    }
    {
        // a x a = 1 + b, a x b = a, b x b = 1 + a: (a a) b != a (a b)
        FusionRing r({"1", "a", "b"}, 0, {0, 1, 2});
        for (Index x = 0; x < 3; ++x) {
            r.add(0, x, x, 1);
            if (x) r.add(x, 0, x, 1);
        }
        r.add(1, 1, 0, 1);
        r.add(1, 1, 2, 1);
        r.add(1, 2, 1, 1);
        r.add(2, 1, 1, 1);
        r.add(2, 2, 0, 1);
        r.add(2, 2, 1, 1);
        const auto rep = verify_axioms(r);
        EXPECT_FALSE(rep);
        EXPECT_NE(rep.violation.find("associativity"), std::string::npos);
    }
}

TEST(FusionRing, ConstructorRejectsBadShapes)
{
    EXPECT_THROW(FusionRing({"1", "a"}, 0, {0}), InputError);
    EXPECT_THROW(FusionRing({"1", "a"}, 5, {0, 1}), InputError);
    EXPECT_THROW(FusionRing({"1", "a"}, 0, {0, 7}), InputError);
    FusionRing r({"1"}, 0, {0});
    EXPECT_THROW(r.add(0, 1, 0, 1), InputError);
}

TEST(FusionRing, Invertibles)
{
    const auto z5 = cyclic_ring(5);
    EXPECT_EQ(invertibles(z5).size(), 5u);
    EXPECT_EQ(invertible_order(z5, 2), 5);
    EXPECT_EQ(invertible_order(z5, 0), 1);
    EXPECT_EQ(fuse_permutation(z5, 2), (Permutation{2, 3, 4, 0, 1}));

    const auto ising = ising_ring();
    EXPECT_EQ(invertibles(ising), (std::vector<Index>{0, 2}));
    EXPECT_EQ(fuse_permutation(ising, 2), (Permutation{2, 1, 0}));
    EXPECT_THROW(require_invertible(ising, 1), MathError);
    EXPECT_THROW(fuse_permutation(fibonacci_ring(), 1), MathError);
    EXPECT_THROW(require_invertible(ising, 9), MathError);
}

TEST(FusionRing, RingAutomorphisms)
{
    const auto z5 = cyclic_ring(5);
    for (Index k = 1; k < 5; ++k) {
        Permutation mult(5);
        for (Index a = 0; a < 5; ++a) mult[a] = a * k % 5;
        EXPECT_TRUE(is_ring_automorphism(z5, mult)) << k;
    }
    EXPECT_FALSE(is_ring_automorphism(z5, {1, 2, 3, 4, 0}));
    EXPECT_FALSE(is_ring_automorphism(z5, {0, 1, 1, 3, 4}));
    EXPECT_FALSE(is_ring_automorphism(ising_ring(), {0, 2, 1}));
    EXPECT_TRUE(is_ring_automorphism(ising_ring(), {0, 1, 2}));
}

TEST(FusionRing, PermutationHelpers)
{
    const Permutation p{1, 2, 0, 4, 3};
    EXPECT_EQ(permutation_order(p), 6);
    EXPECT_EQ(permutation_power(p, 6), identity_permutation(5));
    EXPECT_EQ(permutation_power(p, 2), compose_permutations(p, p));
    EXPECT_EQ(compose_permutations(Permutation{1, 0, 2}, Permutation{0, 2, 1}), (Permutation{1, 2, 0}));
    EXPECT_THROW(compose_permutations(Permutation{0}, Permutation{0, 1}), InputError);
}

TEST(FusionRing, SparseLookups)
{
    auto r = fibonacci_ring();
    EXPECT_EQ(r.coefficient(1, 1, 1), 1);
    EXPECT_EQ(r.find("tau"), Index{1});
    EXPECT_FALSE(r.find("nope"));
    ASSERT_EQ(r.product(1, 1).size(), 2u);
    EXPECT_EQ(r.product(1, 1)[0].target, 0u);
    EXPECT_EQ(r, fibonacci_ring());
}
