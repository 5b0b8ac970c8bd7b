#include "doctest.h"

#include <cmath>
#include <set>

#include "eiscong/characters.hpp"
#include "eiscong/imquad.hpp"

using namespace eiscong;

namespace {

std::vector<i64> fundamental_discriminants(i64 lo) {
    std::vector<i64> out;
    for (i64 d = -3; d >= lo; --d) {
        if (is_fundamental_discriminant(d))
            out.push_back(d);
    }
    return out;
}

// Oracle: r_f(n) = #{(x, y) : f(x, y) = n} by brute force.
i64 representations(const QuadForm& f, i64 n) {
    i64 count = 0;
    i64 bound = 2 * static_cast<i64>(std::sqrt(static_cast<double>(n))) + 30;
    for (i64 x = -bound; x <= bound; ++x) {
        for (i64 y = -bound; y <= bound; ++y) {
            if (f.a * x * x + f.b * x * y + f.c * y * y == n)
                ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("reduced forms: fixed values") {
    auto G = reduced_forms(-47);
    CHECK(G->h() == 5);
    CHECK(G->w() == 2);
    std::set<std::string> got;
    for (const auto& f : G->forms())
        got.insert(f.to_string());
    CHECK(got == std::set<std::string>{"(1,1,12)", "(2,-1,6)", "(2,1,6)", "(3,-1,4)", "(3,1,4)"});
    CHECK(G->structure() == std::vector<i64>{5});
    CHECK(reduced_forms(-4)->h() == 1);
    CHECK(reduced_forms(-4)->w() == 4);
    CHECK(reduced_forms(-3)->w() == 6);
    CHECK(reduced_forms(-23)->h() == 3);
    CHECK(reduced_forms(-84)->structure() == std::vector<i64>{2, 2});
    CHECK_THROWS_AS(reduced_forms(-16), std::invalid_argument);
    CHECK_THROWS_AS(reduced_forms(5), std::invalid_argument);
}

TEST_CASE("composition: fixed values") {
    QuadForm f{2, 1, 6}, g{2, -1, 6};
    CHECK(compose(f, g) == principal_form(-47));
    CHECK(compose(principal_form(-47), f) == f);
    QuadForm x = f;
    for (int i = 0; i < 4; ++i)
        x = compose(x, f);
    CHECK(x == principal_form(-47));
    CHECK(compose(f, f) != principal_form(-47));
    CHECK_THROWS_AS(compose(f, QuadForm{1, 1, 6}), std::invalid_argument);
    CHECK(reduce(QuadForm{12, 11, 3}).is_reduced());
}

TEST_CASE("group axioms for |d| <= 2000 with h <= 16") {
    int groups = 0;
    for (i64 d : fundamental_discriminants(-2000)) {
        auto G = reduced_forms(d);
        if (G->h() > 16)
            continue;
        ++groups;
        const auto& F = G->forms();
        QuadForm e = principal_form(d);
        bool ok = true;
        for (const auto& x : F) {
            ok &= compose(x, e) == x;
            ok &= compose(x, inverse(x)) == e;
            for (const auto& y : F) {
                auto xy = compose(x, y);
                ok &= xy == compose(y, x);
                for (const auto& z : F)
                    ok &= compose(xy, z) == compose(x, compose(y, z));
            }
        }
        CHECK_MESSAGE(ok, "d=" << d);
    }
    CHECK(groups > 400);
}

TEST_CASE("structure is consistent with element orders") {
    for (i64 d : fundamental_discriminants(-5000)) {
        auto G = reduced_forms(d);
        const auto& n = G->structure();
        i64 prod = 1;
        for (std::size_t i = 0; i < n.size(); ++i) {
            prod *= n[i];
            if (i > 0)
                CHECK(n[i - 1] % n[i] == 0);
        }
        CHECK(prod == G->h());
        // #{x : x^k = 1} = prod gcd(k, n_i) for every k | h.
        for (i64 k : divisors(G->h())) {
            i64 expected = 1;
            for (i64 ni : n)
                expected *= gcd(k, ni);
            i64 count = 0;
            for (std::size_t x = 0; x < static_cast<std::size_t>(G->h()); ++x)
                count += k % G->order(x) == 0;
            CHECK_MESSAGE(count == expected, "d=" << d << " k=" << k);
        }
        // Coordinates reproduce the element.
        for (std::size_t x = 0; x < static_cast<std::size_t>(G->h()); ++x) {
            std::size_t y = 0;
            for (std::size_t i = 0; i < n.size(); ++i)
                y = G->mul(y, G->pow(G->generators()[i], G->coordinates(x)[i]));
            CHECK(y == x);
        }
    }
}

TEST_CASE("splitting") {
    CHECK(splitting(5, -47) == Splitting::Inert);
    CHECK(splitting(47, -47) == Splitting::Ramified);
    CHECK(splitting(2, -47) == Splitting::Split);
    CHECK(splitting(2, -4) == Splitting::Ramified);
    CHECK(splitting(3, -4) == Splitting::Inert);
}

TEST_CASE("prime_to_class") {
    auto G = reduced_forms(-47);
    auto [c, cbar] = prime_to_class(2, *G);
    std::set<std::string> pair{G->forms()[c].to_string(), G->forms()[cbar].to_string()};
    CHECK(pair == std::set<std::string>{"(2,1,6)", "(2,-1,6)"});
    CHECK(G->forms()[c] == QuadForm{2, 1, 6});
    auto [r, rbar] = prime_to_class(47, *G);
    CHECK(r == 0);
    CHECK(rbar == 0);
    CHECK_THROWS_AS(prime_to_class(5, *G), std::invalid_argument);
    for (i64 d : fundamental_discriminants(-600)) {
        auto H = reduced_forms(d);
        for (i64 ell : primes_up_to(150)) {
            if (splitting(ell, d) == Splitting::Inert)
                continue;
            auto [a, b] = prime_to_class(ell, *H);
            CHECK(H->mul(a, b) == 0);
            if (splitting(ell, d) == Splitting::Ramified)
                CHECK(a == b);
            // The class contains a form representing ell.
            CHECK(representations(H->forms()[a], ell) > 0);
        }
    }
}

TEST_CASE("ideal counts match the divisor sum of the Kronecker symbol") {
    for (i64 d : {-3, -4, -7, -8, -15, -20, -23, -47, -71, -84, -104, -199, -327}) {
        auto G = reduced_forms(d);
        for (i64 n = 1; n <= 200; ++n) {
            i64 expected = 0;
            for (i64 t : divisors(n))
                expected += kronecker(d, t);
            CHECK(static_cast<i64>(ideals_of_norm(n, *G).size()) == expected);
        }
    }
}

TEST_CASE("ideal classes match representation numbers of the forms") {
    for (i64 d : {-23, -47, -71, -84, -56, -199}) {
        auto G = reduced_forms(d);
        for (i64 n = 1; n <= 120; ++n) {
            auto ideals = ideals_of_norm(n, *G);
            for (std::size_t c = 0; c < static_cast<std::size_t>(G->h()); ++c) {
                i64 in_class = std::count(ideals.begin(), ideals.end(), c);
                i64 in_inverse = std::count(ideals.begin(), ideals.end(), G->inv(c));
                i64 r = representations(G->forms()[c], n);
                // Ideals of norm n in class C and in C^{-1} are equinumerous.
                CHECK(in_class == in_inverse);
                CHECK_MESSAGE(r == G->w() * in_class, "d=" << d << " n=" << n << " f=" << G->forms()[c].to_string());
            }
        }
    }
}

TEST_CASE("characters_of_order") {
    auto G47 = reduced_forms(-47);
    auto pairs = characters_of_order(G47, 5);
    CHECK(pairs.size() == 2);
    for (const auto& pr : pairs) {
        CHECK(pr.phi.order() == 5);
        CHECK(pr.phi_inverse == pr.phi.inverse());
    }
    CHECK(characters_of_order(reduced_forms(-23), 3).size() == 1);
    auto triv = characters_of_order(G47, 1);
    CHECK(triv.size() == 1);
    CHECK(triv[0].phi.order() == 1);
    CHECK_THROWS_AS(characters_of_order(G47, 3), std::invalid_argument);
    // Class characters are homomorphisms.
    for (i64 d : {-47, -84, -199, -327, -1023}) {
        auto G = reduced_forms(d);
        for (i64 n : divisors(G->exponent())) {
            for (const auto& pr : characters_of_order(G, n)) {
                for (std::size_t x = 0; x < static_cast<std::size_t>(G->h()); ++x) {
                    for (std::size_t y = 0; y < static_cast<std::size_t>(G->h()); ++y)
                        CHECK(pr.phi.evaluate(G->mul(x, y)) == pr.phi.evaluate(x) * pr.phi.evaluate(y));
                }
            }
        }
    }
}
