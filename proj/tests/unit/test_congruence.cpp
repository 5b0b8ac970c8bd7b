#include "doctest.h"

#include <chrono>

#include "eiscong/arith.hpp"
#include "eiscong/characters.hpp"
#include "eiscong/congruence.hpp"
#include "eiscong/modforms.hpp"

using namespace eiscong;

namespace {

// Oracle: in Q(zeta_{p^n}) the prime above p is totally ramified of degree 1,
// so v_P(x) = v_p(N(x)); the real subfield halves it.
int real_valuation_by_norm(const CyclotomicElement& x, i64 p, int n) {
    BigRational N = norm(x.embed(ipow(p, n)));
    int v = 0;
    BigInt num = N.get_num(), den = N.get_den();
    BigInt pp(static_cast<long>(p));
    while (num % pp == 0) {
        num /= pp;
        ++v;
    }
    while (den % pp == 0) {
        den /= pp;
        --v;
    }
    REQUIRE(v % 2 == 0);
    return v / 2;
}

}  // namespace

TEST_CASE("d = -47, p = 5: report") {
    auto r = total_depth(-47, 5, default_sigma(-47, 5));
    CHECK(r.h == 5);
    CHECK(r.n == 1);
    CHECK(r.cyclic);
    CHECK(r.forms.size() == 2);
    for (const auto& f : r.forms) {
        CHECK(f.order == 5);
        CHECK(f.m_lambda == 1);
        CHECK(f.floor == 1);
        CHECK(f.certified);
    }
    CHECK(r.e == 2);
    CHECK(r.total == 2);
    CHECK(r.depth_ratio == 1);
    CHECK(r.depth_bound_holds);
    CHECK(r.lhs == 2);
    CHECK(r.val_class_module == 2);
    auto v = congruence_module_bound(r);
    CHECK(v.pass);
    CHECK(v.lhs == v.target);
}

TEST_CASE("d = -47, p = 5: brute force over all split primes up to 500") {
    auto G = reduced_forms(-47);
    DirichletCharacter chi = kronecker_character(-47);
    for (const auto& pr : characters_of_order(G, 5)) {
        auto eig = cm_prime_eigenvalues(pr.phi, 500);
        int best = 1 << 30;
        for (const auto& [ell, a] : eig) {
            if (ell == 5 || ell == 47 || splitting(ell, -47) != Splitting::Split)
                continue;
            CyclotomicElement x = a - CyclotomicElement::rational(5, 1) - chi.evaluate_in(ell, 10).embed(10);
            CyclotomicElement y = a - CyclotomicElement::rational(5, 2);
            CHECK(x == y.embed(10));
            if (!y.is_zero())
                best = std::min(best, real_valuation_by_norm(y, 5, 1));
        }
        auto scan = depth_m_lambda(pr.phi, 5, 1, default_sigma(-47, 5));
        CHECK(scan.m_lambda == best);
        CHECK(scan.last_prime < 500);
    }
}

TEST_CASE("rejections and scan limits") {
    CHECK_THROWS_AS(total_depth(-23, 3, default_sigma(-23, 3)), std::invalid_argument);  // splits
    CHECK_THROWS_AS(total_depth(-47, 3, default_sigma(-47, 3)), std::invalid_argument);  // 3 does not divide 5
    CHECK_THROWS_AS(total_depth(-23, 23, default_sigma(-23, 23)), std::invalid_argument); // ramified
    auto G = reduced_forms(-47);
    auto phi = characters_of_order(G, 5).front().phi;
    ScanLimits tight;
    tight.max_prime = 10;
    CHECK_THROWS_AS(depth_m_lambda(phi, 5, 1, default_sigma(-47, 5), tight), InconclusiveScan);
}

TEST_CASE("full-coefficient depth is no larger than the prime-index depth") {
    auto G = reduced_forms(-47);
    for (const auto& pr : characters_of_order(G, 5)) {
        int strict = full_coefficient_depth(pr.phi, 5, 1, 200);
        auto scan = depth_m_lambda(pr.phi, 5, 1, default_sigma(-47, 5));
        CHECK(strict <= scan.m_lambda);
        CHECK(strict >= 1);
    }
}

TEST_CASE("bookkeeping: incomplete and floors-only reports") {
    auto r = total_depth(-47, 5, default_sigma(-47, 5));
    auto broken = r;
    broken.forms.pop_back();
    broken.complete = false;
    auto v = congruence_module_bound(broken);
    CHECK_FALSE(v.pass);
    CHECK(v.incomplete);

    DepthOptions floors;
    floors.floors_only = true;
    auto f = total_depth(-47, 5, default_sigma(-47, 5), floors);
    CHECK(f.floors_only);
    CHECK_FALSE(f.exact);
    CHECK(congruence_module_bound(f).pass);
}

TEST_CASE("a cyclic 3-part of order >= 9: floors p^{n-m}") {
    int seen = 0;
    for (i64 d = -3; d >= -5000 && seen < 3; --d) {
        if (!is_fundamental_discriminant(d) || splitting(3, d) != Splitting::Inert)
            continue;
        auto pp = reduced_forms(d)->p_part(3);
        if (pp.size() != 1 || pp[0] < 9)
            continue;
        ++seen;
        auto r = total_depth(d, 3, default_sigma(d, 3));
        CHECK(r.field_level >= 2);
        CHECK(r.e == euler_phi(pp[0]) / 2);
        for (const auto& f : r.forms)
            CHECK(f.m_lambda >= f.floor);
        CHECK(r.depth_bound_holds);
        CHECK(congruence_module_bound(r).pass);
    }
    CHECK(seen > 0);
}

TEST_CASE("invariants for admissible |d| <= 5000, p <= 13") {
    int cases = 0;
    for (i64 d = -3; d >= -5000; --d) {
        if (!is_fundamental_discriminant(d))
            continue;
        auto G = reduced_forms(d);
        for (i64 p : {3, 5, 7, 11, 13}) {
            if (G->h() % p != 0 || splitting(p, d) != Splitting::Inert)
                continue;
            auto sigma = default_sigma(d, p);
            auto r = total_depth(d, p, sigma);
            ++cases;
            CHECK(r.complete);
            for (const auto& f : r.forms)
                CHECK_MESSAGE(f.m_lambda >= f.floor, d << " " << p << " " << f.label);
            if (r.cyclic) {
                CHECK(r.depth_bound_holds);
                CHECK(congruence_module_bound(r).pass);
            }
        }
    }
    CHECK(cases > 100);
}

TEST_CASE("depth does not depend on the admissible Sigma") {
    for (i64 d : {-47, -71, -199, -327, -419, -1031}) {
        auto G = reduced_forms(d);
        for (i64 p : {3, 5, 7}) {
            if (G->h() % p != 0 || splitting(p, d) != Splitting::Inert)
                continue;
            auto base = default_sigma(d, p);
            auto bigger = base;
            int added = 0;
            for (i64 ell = 2; added < 4; ++ell)
                if (is_prime(ell) && splitting(ell, d) == Splitting::Split) {
                    bigger.insert(ell);
                    ++added;
                }
            auto a = total_depth(d, p, base);
            auto b = total_depth(d, p, bigger);
            REQUIRE(a.forms.size() == b.forms.size());
            for (std::size_t i = 0; i < a.forms.size(); ++i)
                CHECK(a.forms[i].m_lambda == b.forms[i].m_lambda);
        }
    }
}

TEST_CASE("m_lambda against the norm oracle over every class") {
    for (i64 d : {-47, -71, -199, -283, -419, -491}) {
        auto G = reduced_forms(d);
        for (i64 p : {3, 5, 7}) {
            if (G->h() % p != 0 || splitting(p, d) != Splitting::Inert)
                continue;
            int n = valuation(G->p_part(p).front(), p);
            for (int m = 1; m <= n; ++m)
                for (const auto& pr : characters_of_order(G, ipow(p, m))) {
                    int best = 1 << 30;
                    for (std::size_t c = 0; c < static_cast<std::size_t>(G->h()); ++c) {
                        CyclotomicElement x = pr.phi.evaluate(c) + pr.phi.evaluate(G->inv(c)) -
                                              CyclotomicElement::rational(pr.phi.order(), 2);
                        if (!x.is_zero())
                            best = std::min(best, real_valuation_by_norm(x, p, n));
                    }
                    CHECK(depth_m_lambda(pr.phi, p, n, default_sigma(d, p)).m_lambda == best);
                }
        }
    }
}
