// Acceptance suite: one line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "eiscong/arith.hpp"
#include "eiscong/congruence.hpp"
#include "eiscong/lambdaadic.hpp"
#include "eiscong/modforms.hpp"
#include "eiscong/verifier.hpp"

using namespace eiscong;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass)
                detail << "failed: ";
            else
                detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

bool run(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < limit_s, "runtime over limit");
    std::cout << "criterion " << id << " [" << name << "]: " << (out.pass ? "PASS" : "FAIL")
              << "  tolerance=exact  runtime=" << std::fixed << std::setprecision(3) << secs << "s (limit "
              << limit_s << "s)  " << out.detail.str() << std::endl;
    return out.pass;
}

std::vector<i64> fundamental_between(i64 lo, i64 hi) {  // lo < d < hi < 0
    std::vector<i64> out;
    for (i64 d = hi - 1; d > lo; --d)
        if (is_fundamental_discriminant(d))
            out.push_back(d);
    return out;
}

std::vector<i64> first_primes_except(i64 p, std::size_t count) {
    std::vector<i64> out;
    for (i64 n = 2; out.size() < count; ++n)
        if (is_prime(n) && n != p)
            out.push_back(n);
    return out;
}

void cm_pipeline(Outcome& o) {
    // Independent form count: reduced forms by direct enumeration.
    i64 count = 0;
    for (i64 a = 1; 3 * a * a <= 47; ++a)
        for (i64 b = -a + 1; b <= a; ++b) {
            if ((b * b + 47) % (4 * a) != 0)
                continue;
            i64 c = (b * b + 47) / (4 * a);
            if (c < a || (c == a && b < 0) || gcd(gcd(a, b < 0 ? -b : b), c) != 1)
                continue;
            ++count;
        }
    auto G = reduced_forms(-47);
    o.require(count == 5 && G->h() == 5, "h(-47) = 5");
    o.require(splitting(5, -47) == Splitting::Inert, "5 inert");
    auto pairs = characters_of_order(G, 5);
    o.require(pairs.size() == 2, "two pairs of order 5");
    auto r = total_depth(-47, 5, default_sigma(-47, 5));
    o.require(r.forms.size() == 2, "two forms in report");
    for (const auto& f : r.forms)
        o.require(f.m_lambda == 1 && f.certified && f.floor == 1, "m_lambda = 1 for " + f.label);
    o.require(r.e == 2, "e = 2");
    o.require(r.depth_ratio == 1 && r.val_h == 1, "(1/e) sum m_lambda = 1 = val_5(h)");
    auto v = congruence_module_bound(r);
    o.require(v.pass && r.lhs == 2 && r.val_class_module == 2, "2 >= val_5(#C_F) = 2 with equality");
    o.detail << "h=5 e=" << r.e << " m_lambda=[" << r.forms[0].m_lambda << "," << r.forms[1].m_lambda
             << "] lhs=" << r.lhs.get_str() << " val5(#C_F)=" << r.val_class_module;
}

void irregular_pair(Outcome& o) {
    BigRational B32 = bernoulli(32);
    int v = padic_valuation(B32.get_num(), 37);
    o.require(v == 1, "37 || numerator of B_32");
    auto chi = teichmuller_character(37).pow(31);
    auto vals = lvalue_valuation(chi, 37);
    o.require(vals.front().prime == canonical_prime_above(37, 36), "canonical prime first");
    o.require(vals.front().valuation == 1, "val L(0, omega^31) = 1 at the canonical prime");
    auto r = check_assumptions(chi, 37, {37});
    o.require(!r.primes.empty() && r.primes[0].cyclicity == Cyclicity::Certified, "A1 Certified");
    o.require(r.principality.omega_power, "branch (ii)");
    o.require(r.verdict == Verdict::Pass, "check-hypotheses verdict");
    o.detail << "v_37(B_32)=" << v << " val L(0,w^31)=" << vals.front().valuation << " at "
             << vals.front().prime.label() << " A1=" << to_string(r.primes[0].cyclicity)
             << " (ii)=" << r.principality.omega_power << " label=" << chi.label();
}

void conductor_157(Outcome& o) {
    auto chi = DirichletCharacter::from_label("157.28");
    o.require(chi.order() == 4 && chi.is_odd() && chi.conductor() == 157, "order 4, odd, conductor 157");
    auto v = lvalue_valuation(chi, 5);
    auto vi = lvalue_valuation(chi.inverse(), 5);
    int good = 0;
    std::string where;
    for (std::size_t i = 0; i < v.size(); ++i) {
        o.require(v[i].prime == vi[i].prime, "matching primes");
        if (v[i].valuation >= 1 && vi[i].valuation == 0) {
            ++good;
            where = v[i].prime.label();
        }
    }
    o.require(v.size() == 2, "two primes above 5 in Q(i)");
    o.require(good == 1, "exactly one prime with val L(0,chi) >= 1 and val L(0,chi^-1) = 0");
    o.detail << "vals=[" << v[0].valuation << "," << v[1].valuation << "] inverse=[" << vi[0].valuation << ","
             << vi[1].valuation << "] at " << where;
}

void class_number_formula(Outcome& o) {
    int n = 0, bad = 0;
    for (i64 d : fundamental_between(-500, 0)) {
        auto G = reduced_forms(d);
        LValue L = l_value(0, kronecker_character(d));
        BigRational target(2 * G->h(), G->w());
        target.canonicalize();
        if (!(L.value == CyclotomicElement::rational(1, target)))
            ++bad;
        ++n;
    }
    o.require(bad == 0, std::to_string(bad) + " mismatches");
    o.detail << n << " discriminants";
}

void specialization_grid(Outcome& o) {
    struct Case {
        DirichletCharacter chi;
        i64 p;
    };
    std::vector<Case> cases;
    for (i64 p : {5, 7, 37})
        cases.push_back({kronecker_character(-47) * teichmuller_character(p), p});
    cases.push_back({teichmuller_character(37).pow(31), 37});
    cases.push_back({DirichletCharacter::from_label("157.28") * teichmuller_character(5), 5});
    int points = 0, bad = 0;
    for (const auto& c : cases)
        for (i64 ell : first_primes_except(c.p, 20))
            for (int k = 1; k <= 6; ++k) {
                ++points;
                if (!specialization_identity(c.chi, ell, k, c.p, 20).holds)
                    ++bad;
            }
    o.require(bad == 0, std::to_string(bad) + " grid points failed");
    o.detail << points << " grid points mod p^20";
}

void oracle_equivalence(Outcome& o) {
    int forms = 0, bad = 0;
    for (i64 d : fundamental_between(-400, 0)) {
        auto G = reduced_forms(d);
        if (G->h() < 3 || G->h() > 10)
            continue;
        i64 B = sturm_bound(-d);
        for (i64 n : divisors(G->exponent())) {
            if (n < 3 || n > 7)
                continue;
            for (const auto& pr : characters_of_order(G, n))
                for (const auto& phi : {pr.phi, pr.phi_inverse}) {
                    ++forms;
                    auto th = theta_series(phi, B);
                    auto ex = eigenform_expand(cm_prime_eigenvalues(phi, B), kronecker_character(d), -d, B);
                    for (i64 k = 0; k <= B; ++k)
                        if (!(th[k] == ex[k])) {
                            ++bad;
                            break;
                        }
                }
        }
    }
    int e1 = 0;
    for (i64 d : {-23, -47, -71}) {
        auto G = reduced_forms(d);
        auto E = eisenstein_E1(kronecker_character(d), 200);
        for (i64 n = 1; n <= 200; ++n) {
            ++e1;
            if (!(E[n] == CyclotomicElement::rational(1, static_cast<long>(ideals_of_norm(n, *G).size()))))
                ++bad;
        }
    }
    o.require(bad == 0, std::to_string(bad) + " mismatches");
    o.require(forms > 0, "no forms compared");
    o.detail << forms << " theta series to the Sturm bound, " << e1 << " E_1 coefficients";
}

CyclotomicElement random_element(std::mt19937_64& rng, i64 m, i64 p) {
    std::uniform_int_distribution<long> coef(-30, 30);
    std::vector<BigRational> c(static_cast<std::size_t>(euler_phi(m)));
    for (auto& x : c)
        x = BigRational(coef(rng) * (rng() % 3 == 0 ? p : 1));
    return CyclotomicElement(m, c);
}

void property_suites(Outcome& o) {
    int checks = 0;
    // Orthogonality.
    for (i64 q = 1; q <= 60; ++q)
        for (const auto& chi : DirichletCharacter::all(q)) {
            CyclotomicElement sum(chi.order());
            for (i64 a = 0; a < q; ++a)
                sum += chi.evaluate(a);
            ++checks;
            o.require(chi.is_trivial() ? sum == CyclotomicElement::rational(1, euler_phi(q)) : sum.is_zero(),
                      "orthogonality " + chi.label());
        }
    // Class group axioms.
    for (i64 d : fundamental_between(-2001, 0)) {
        auto G = reduced_forms(d);
        const std::size_t h = static_cast<std::size_t>(G->h());
        if (h > 16)
            continue;
        for (std::size_t x = 0; x < h; ++x) {
            o.require(G->mul(0, x) == x && G->mul(x, G->inv(x)) == 0, "identity/inverse " + std::to_string(d));
            for (std::size_t y = 0; y < h; ++y) {
                o.require(G->mul(x, y) == G->mul(y, x), "commutativity");
                o.require(G->index_of(compose(G->forms()[x], G->forms()[y])) == G->mul(x, y), "table");
                for (std::size_t z = 0; z < h; ++z)
                    o.require(G->mul(G->mul(x, y), z) == G->mul(x, G->mul(y, z)), "associativity");
            }
        }
        i64 prod = 1;
        for (i64 n : G->structure())
            prod *= n;
        o.require(prod == G->h(), "structure multiplies to h");
        ++checks;
    }
    // Kummer congruences for the p-stabilized zeta values.
    for (i64 p : {5, 7}) {
        int amax = p == 5 ? 2 : 1;
        for (i64 k = 2; k <= 2 * (p - 1); k += 2) {
            if (k % (p - 1) == 0)
                continue;
            auto theta = teichmuller_character(p).pow(k);
            BigRational base = kubota_leopoldt(static_cast<int>(1 - k), theta, p).value[0];
            BigRational zeta = -bernoulli(static_cast<unsigned>(k)) / BigRational(k);
            BigRational stab = (1 - BigRational(eiscong::pow(BigInt(static_cast<long>(p)),
                                                             static_cast<unsigned long>(k - 1)))) * zeta;
            o.require(base == stab, "kubota_leopoldt at an integer point");
            for (int a = 0; a <= amax; ++a) {
                i64 k2 = k + (p - 1) * ipow(p, a);
                BigRational other = kubota_leopoldt(static_cast<int>(1 - k2), theta, p).value[0];
                BigRational diff = base - other;
                ++checks;
                o.require(diff == 0 || padic_valuation(diff, p) >= a + 1, "Kummer p=" + std::to_string(p));
            }
        }
    }
    // Teichmuller identities.
    for (i64 p : {5, 7, 37}) {
        const int M = 20;
        BigInt pM = eiscong::pow(BigInt(static_cast<long>(p)), M);
        auto omega = teichmuller_character(p);
        LocalEmbedding emb(canonical_prime_above(p, p - 1), M);
        for (i64 a = 1; a < p; ++a) {
            BigInt w = teichmuller(a, p, M).residue();
            BigInt wp;
            BigInt e(static_cast<long>(p - 1));
            mpz_powm(wp.get_mpz_t(), w.get_mpz_t(), e.get_mpz_t(), pM.get_mpz_t());
            o.require(wp == 1, "omega(a)^(p-1) = 1");
            o.require(mpz_class(w % p) == a, "omega(a) = a mod p");
            for (i64 b = 1; b < p; ++b) {
                BigInt wb = teichmuller(b, p, M).residue();
                BigInt wab = teichmuller(mod(a * b, p), p, M).residue();
                o.require(mpz_class(w * wb % pM) == wab, "multiplicativity");
            }
            o.require(emb(omega.evaluate(a)).value()[0] == w, "character matches p-adic lift");
            ++checks;
        }
    }
    // Valuation additivity.
    std::mt19937_64 rng(20261015);
    for (auto [p, m] : std::vector<std::pair<i64, i64>>{{5, 4}, {5, 20}, {13, 12}, {37, 36}, {5, 25}}) {
        auto list = primes_above(p, m);
        for (int i = 0; i < 8; ++i) {
            auto x = random_element(rng, m, p), y = random_element(rng, m, p);
            if (x.is_zero() || y.is_zero())
                continue;
            for (const auto& P : list) {
                ++checks;
                o.require(valuation_at(x * y, P) == valuation_at(x, P) + valuation_at(y, P), "additivity");
            }
        }
    }
    o.detail << checks << " property checks";
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run(1, "CM congruence pipeline d=-47 p=5", 1.0, cm_pipeline);
    ok &= run(2, "irregular pair (37,32)", 5.0, irregular_pair);
    ok &= run(3, "conductor 157 character at 5", 5.0, conductor_157);
    ok &= run(4, "class number formula -500<d<0", 30.0, class_number_formula);
    ok &= run(5, "Lambda-adic specialization grid", 60.0, specialization_grid);
    ok &= run(6, "theta = eigenform_expand, E1 ideal counts", 60.0, oracle_equivalence);
    ok &= run(7, "property suites", 600.0, property_suites);
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return ok ? 0 : 1;
}
