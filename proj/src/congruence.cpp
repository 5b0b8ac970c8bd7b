#include "eiscong/congruence.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "eiscong/arith.hpp"
#include "eiscong/characters.hpp"
#include "eiscong/errors.hpp"
#include "eiscong/modforms.hpp"
#include "eiscong/padic.hpp"
#include "eiscong/parallel.hpp"

namespace eiscong {

namespace {

void check_odd_prime(i64 p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

// Exponent t with order == p^t, or -1.
int p_power_exponent(i64 order, i64 p) {
    int t = 0;
    while (order % p == 0) {
        order /= p;
        ++t;
    }
    return order == 1 ? t : -1;
}

CyclotomicElement drop_to_rational(const CyclotomicElement& x) {
    return x.is_rational() ? CyclotomicElement::rational(1, x[0]) : x;
}

// Valuation in Q(zeta_{p^n})^+, nullopt for zero.
std::optional<int> real_valuation(const CyclotomicElement& x, i64 p, int n) {
    CyclotomicElement y = drop_to_rational(x);
    if (y.is_zero())
        return std::nullopt;
    return valuation_real(y, p, n);
}

}  // namespace

std::set<i64> default_sigma(i64 d, i64 p) {
    std::set<i64> s{p};
    for (const auto& pp : factorize(d < 0 ? -d : d))
        s.insert(pp.prime);
    return s;
}

DepthScan depth_m_lambda(const ClassCharacter& phi, i64 p, int n, const std::set<i64>& sigma,
                         const ScanLimits& limits) {
    check_odd_prime(p);
    const int m = p_power_exponent(phi.order(), p);
    if (m < 1)
        throw std::invalid_argument("depth_m_lambda: " + phi.label() + " does not have p-power order");
    if (n < m)
        throw std::invalid_argument("depth_m_lambda: coefficient field too small for " + phi.label());
    const ClassGroup& G = phi.group();
    const i64 d = G.discriminant();
    const std::size_t h = static_cast<std::size_t>(G.h());
    const i64 q = phi.order();

    // a_ell - 2 at a split prime depends only on phi of the class of a prime above ell.
    std::vector<std::optional<std::optional<int>>> memo(static_cast<std::size_t>(q));
    auto class_value = [&](std::size_t c) -> std::optional<int> {
        auto j = static_cast<std::size_t>(phi.exponent_at(c));
        if (!memo[j]) {
            CyclotomicElement z = CyclotomicElement::root_of_unity(q, static_cast<i64>(j));
            memo[j] = real_valuation(z + z.conjugate() - CyclotomicElement::rational(q, 2), p, n);
        }
        return *memo[j];
    };

    DepthScan out;
    out.sturm = sturm_bound(-d);
    std::vector<bool> covered(h, false);
    std::size_t n_covered = 0;
    std::optional<int> best;
    auto consider = [&](std::optional<int> v, i64 ell) {
        if (v && (!best || *v < *best)) {
            best = v;
            out.witness_prime = ell;
        }
    };

    for (i64 ell = 2;; ++ell) {
        if (n_covered == h && ell > out.sturm)
            break;
        if (ell > limits.max_prime)
            throw InconclusiveScan("depth_m_lambda: class coverage for " + phi.label() +
                                   " not reached below " + std::to_string(limits.max_prime));
        if (!is_prime(ell) || sigma.count(ell))
            continue;
        out.last_prime = ell;
        Splitting s = splitting(ell, d);
        if (s == Splitting::Inert)
            continue;  // a_ell = 0 = 1 + chi_d(ell)
        auto [c1, c2] = prime_to_class(ell, G);
        if (s == Splitting::Ramified) {
            // chi_d(ell) = 0, a_ell = phi(l)
            CyclotomicElement x = phi.evaluate_in(c1, q) - CyclotomicElement::rational(q, 1);
            consider(real_valuation(x, p, n), ell);
            continue;
        }
        ++out.split_primes_used;
        for (std::size_t c : {c1, c2})
            if (!covered[c]) {
                covered[c] = true;
                ++n_covered;
            }
        consider(class_value(c1), ell);
    }
    if (!best)
        throw std::logic_error("depth_m_lambda: no finite valuation for " + phi.label());
    if (*best < 1)
        throw std::logic_error("depth_m_lambda: " + phi.label() + " is not congruent to E_1");
    out.m_lambda = *best;
    out.certified = true;
    return out;
}

int full_coefficient_depth(const ClassCharacter& phi, i64 p, int n, i64 bound) {
    check_odd_prime(p);
    QExpansion theta = theta_series(phi, bound);
    QExpansion eis = eisenstein_E1(kronecker_character(phi.group().discriminant()), bound);
    std::optional<int> best;
    for (i64 k = 1; k <= bound; ++k) {
        auto v = real_valuation(theta[k] - drop_to_rational(eis[k]), p, n);
        if (v && (!best || *v < *best))
            best = v;
    }
    if (!best)
        throw InconclusiveScan("full_coefficient_depth: all coefficients agree up to " +
                               std::to_string(bound));
    return *best;
}

CongruenceReport total_depth(i64 d, i64 p, const std::set<i64>& sigma, const DepthOptions& options) {
    check_odd_prime(p);
    Splitting s = splitting(p, d);
    if (s != Splitting::Inert)
        throw std::invalid_argument(std::to_string(p) + " is " + to_string(s) + " in Q(sqrt(" +
                                    std::to_string(d) + ")), not inert");
    auto G = reduced_forms(d);
    if (G->h() % p != 0)
        throw std::invalid_argument(std::to_string(p) + " does not divide h(" + std::to_string(d) +
                                    ") = " + std::to_string(G->h()));

    CongruenceReport r;
    r.d = d;
    r.p = p;
    r.sigma = sigma;
    r.h = G->h();
    r.n = valuation(G->h(), p);
    r.p_part = G->p_part(p);
    r.cyclic = r.p_part.size() == 1;
    r.field_level = p_power_exponent(r.p_part.front(), p);
    r.e = euler_phi(ipow(p, r.field_level)) / 2;
    r.local_degree = r.e;
    r.floors_only = options.floors_only;

    struct Job {
        ClassCharacter phi;
        int m;
    };
    std::vector<Job> jobs;
    for (int m = 1; m <= r.field_level; ++m) {
        auto pairs = characters_of_order(G, ipow(p, m));
        i64 upto_m = 1, upto_prev = 1;
        for (i64 a : r.p_part) {
            int t = p_power_exponent(a, p);
            upto_m *= ipow(p, std::min(t, m));
            upto_prev *= ipow(p, std::min(t, m - 1));
        }
        r.pair_counts.push_back(static_cast<i64>(pairs.size()));
        r.expected_pairs.push_back((upto_m - upto_prev) / 2);
        if (r.pair_counts.back() != r.expected_pairs.back())
            r.complete = false;
        for (auto& pr : pairs)
            jobs.push_back({pr.phi, m});
    }
    if (r.cyclic) {
        for (int m = 1; m <= r.field_level; ++m)
            if (r.expected_pairs[m - 1] != euler_phi(ipow(p, m)) / 2)
                throw std::logic_error("pair count identity failed");
    } else {
        r.notes.push_back("p-part of the class group is not cyclic; the pair-count identity "
                          "phi(p^m)/2 is not asserted");
    }

    r.forms.resize(jobs.size());
    parallel_for(
        jobs.size(),
        [&](std::size_t i) {
            const Job& job = jobs[i];
            FormRecord& rec = r.forms[i];
            rec.label = job.phi.label();
            rec.order = job.phi.order();
            rec.m = job.m;
            rec.floor = ipow(p, r.field_level - job.m);
            if (options.floors_only) {
                rec.m_lambda = static_cast<int>(rec.floor);
                return;
            }
            DepthScan scan = depth_m_lambda(job.phi, p, r.field_level, sigma, options.limits);
            rec.m_lambda = scan.m_lambda;
            rec.witness_prime = scan.witness_prime;
            rec.certified = scan.certified;
        },
        options.limits.threads);

    for (const auto& rec : r.forms) {
        r.total += rec.m_lambda;
        if (!rec.certified)
            r.exact = false;
    }
    r.depth_ratio = BigRational(r.total, r.e);
    r.depth_ratio.canonicalize();
    r.depth_bound_holds = r.depth_ratio >= r.n;
    r.lhs = BigRational(r.local_degree * r.total, r.e);
    r.lhs.canonicalize();
    r.val_h = r.n;
    r.val_class_module = r.local_degree * r.n;
    r.notes.push_back("val_p(#T/J) = ([E:Q_p]/e) sum m_lambda assumes the Eisenstein ideal is principal");
    return r;
}

BoundVerdict congruence_module_bound(const CongruenceReport& report) {
    BoundVerdict v;
    v.lhs = report.lhs;
    v.target = report.val_class_module;
    std::ostringstream os;
    if (!report.complete) {
        v.incomplete = true;
        os << "FAIL: incomplete character enumeration";
    } else {
        v.pass = v.lhs >= v.target;
        os << (v.pass ? "PASS" : "FAIL") << ": " << v.lhs.get_str() << (v.lhs == v.target ? " = " : v.pass ? " > " : " < ")
           << v.target << (report.floors_only ? " (floors only)" : "");
    }
    v.message = os.str();
    return v;
}

}  // namespace eiscong
