#include "eiscong/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "eiscong/arith.hpp"
#include "eiscong/congruence.hpp"
#include "eiscong/imquad.hpp"
#include "eiscong/parallel.hpp"

namespace eiscong {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

const char* to_string(Cyclicity c) { return c == Cyclicity::Certified ? "Certified" : "Unknown"; }

namespace {

void check_odd_prime(i64 p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

// Valuation at P of a nonzero element; -1 stands for zero (congruent to everything).
int valuation_or_zero(const CyclotomicElement& x, const PrimeAbove& P, PrecisionPolicy policy) {
    if (x.is_zero())
        return -1;
    return valuation_at(x, P, policy);
}

ResidualTest residual_at(const DirichletCharacter& chi, i64 ell, const PrimeAbove& P,
                         PrecisionPolicy policy) {
    const i64 n = P.m;
    CyclotomicElement c = chi.evaluate_in(ell, n);
    CyclotomicElement one = CyclotomicElement::rational(n, 1);
    CyclotomicElement l = CyclotomicElement::rational(n, BigRational(ell));
    ResidualTest t;
    t.ell = ell;
    t.valuation_a2 = valuation_or_zero(c * BigRational(ell) - one, P, policy);
    t.valuation_a3 = valuation_or_zero(c - l, P, policy);
    t.a2 = t.valuation_a2 == 0;
    t.a3 = t.valuation_a3 == 0;
    return t;
}

Verdict combine(const std::vector<Verdict>& vs) {
    if (std::find(vs.begin(), vs.end(), Verdict::Pass) != vs.end())
        return Verdict::Pass;
    if (std::find(vs.begin(), vs.end(), Verdict::Unknown) != vs.end())
        return Verdict::Unknown;
    return Verdict::Fail;
}

}  // namespace

HypothesisReport check_assumptions(const DirichletCharacter& chi, i64 p, const std::set<i64>& sigma,
                                   int prime_choice, PrecisionPolicy policy) {
    check_odd_prime(p);
    HypothesisReport r;
    r.character = chi.label();
    r.p = p;
    r.sigma = sigma;
    r.prime_choice = prime_choice;

    if (!chi.is_odd())
        r.precondition_failures.push_back(r.character + " is even");
    if (chi.order() % p == 0)
        r.precondition_failures.push_back("order " + std::to_string(chi.order()) + " is divisible by p");
    if (chi.conductor() % (p * p) == 0)
        r.precondition_failures.push_back("p^2 divides the conductor");
    if (!r.precondition_failures.empty()) {
        r.summary = "precondition failure";
        return r;
    }
    NpDecomposition np = decompose_Np(chi, p);
    const i64 N = np.tame.modulus();
    if (!np.tame.is_primitive())
        r.precondition_failures.push_back("chi_N = " + np.tame.label() + " is not primitive");
    if (!sigma.count(p))
        r.precondition_failures.push_back("p is not in Sigma");
    for (const auto& pp : factorize(N))
        if (!sigma.count(pp.prime))
            r.precondition_failures.push_back(std::to_string(pp.prime) + " divides N but is not in Sigma");
    if (!r.precondition_failures.empty()) {
        r.summary = "precondition failure";
        return r;
    }

    DirichletCharacter omega = teichmuller_character(p);
    DirichletCharacter prim = chi.primitive();
    if (prim == omega) {
        r.excluded = true;
        r.exclusion = "chi = omega";
    } else if (prim == omega.inverse()) {
        r.excluded = true;
        r.exclusion = "chi = omega^-1";
    }
    if (r.excluded) {
        r.summary = "excluded: " + r.exclusion;
        return r;
    }

    r.principality.e = np.wild.order();
    r.principality.small_e = r.principality.e < p - 1;
    r.principality.omega_power = np.tame.is_trivial();
    r.principality.tame_at_p = np.tame.exponent_at(p) != 0;

    auto vals = lvalue_valuation(chi, p, policy);
    auto vals_inv = lvalue_valuation(chi.inverse(), p, policy);
    if (prime_choice >= static_cast<int>(vals.size()))
        throw std::invalid_argument("prime choice " + std::to_string(prime_choice) + " out of range: " +
                                    std::to_string(vals.size()) + " primes above p");
    const i64 n = chi.value_field_order();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        PrimeReport pr;
        pr.prime = vals[i].prime;
        pr.valuation_L = vals[i].valuation;
        pr.valuation_L_inverse = vals_inv[i].valuation;
        pr.a1 = pr.valuation_L > 0;
        pr.cyclicity = pr.valuation_L == 1 ? Cyclicity::Certified : Cyclicity::Unknown;
        pr.cf_chi_zero = pr.valuation_L_inverse == 0;
        if (!np.wild.is_trivial()) {
            pr.dp_nontrivial = true;
            pr.dp_witness = "chi_p = " + np.wild.label() + " is nontrivial";
        } else {
            CyclotomicElement x = np.tame.evaluate_in(p, n) - CyclotomicElement::rational(n, 1);
            int v = valuation_or_zero(x, pr.prime, policy);
            pr.dp_nontrivial = v == 0;
            pr.dp_witness = v < 0 ? "chi_N(p) = 1" : "val(chi_N(p) - 1) = " + std::to_string(v);
        }
        for (i64 ell : sigma)
            if (ell != p && N % ell != 0)
                pr.residual.push_back(residual_at(chi, ell, pr.prime, policy));
        bool residual_ok = std::all_of(pr.residual.begin(), pr.residual.end(),
                                       [](const ResidualTest& t) { return t.a2 && t.a3; });
        if (!pr.a1 || !pr.cf_chi_zero || !pr.dp_nontrivial || !residual_ok)
            pr.verdict = Verdict::Fail;
        else
            pr.verdict = pr.cyclicity == Cyclicity::Certified ? Verdict::Pass : Verdict::Unknown;
        r.primes.push_back(std::move(pr));
    }

    std::vector<Verdict> considered;
    for (std::size_t i = 0; i < r.primes.size(); ++i)
        if (prime_choice < 0 || static_cast<int>(i) == prime_choice)
            considered.push_back(r.primes[i].verdict);
    r.verdict = r.principality.any() ? combine(considered) : Verdict::Fail;
    std::ostringstream os;
    os << to_string(r.verdict);
    if (!r.principality.any())
        os << ": no principality branch holds";
    else {
        os << " at primes:";
        for (std::size_t i = 0; i < r.primes.size(); ++i)
            os << ' ' << i << '=' << to_string(r.primes[i].verdict);
    }
    r.summary = os.str();
    return r;
}

HypothesisReport check_cm_case(i64 d, i64 p, const std::set<i64>& sigma) {
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("check_cm_case: " + std::to_string(d) +
                                    " is not a negative fundamental discriminant");
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("check_cm_case: " + std::to_string(p) + " is not prime");
    DirichletCharacter chi = kronecker_character(d);
    auto G = reduced_forms(d);
    HypothesisReport r;
    r.character = chi.label();
    r.p = p;
    r.sigma = sigma;

    CmBlock cm;
    cm.d = d;
    cm.h = G->h();
    cm.structure = G->structure();
    cm.p_odd = p > 2;
    cm.p_inert = splitting(p, d) == Splitting::Inert;
    cm.p_divides_h = cm.h % p == 0;
    cm.p_part_cyclic = G->p_part(p).size() <= 1;
    BigRational L(2 * cm.h, G->w());
    L.canonicalize();
    cm.valuation_L = valuation(L.get_num().get_si(), p) - valuation(L.get_den().get_si(), p);
    for (i64 ell : sigma) {
        if (ell == p || (-d) % ell == 0)
            continue;
        i64 c = chi.exponent_at(ell) == 0 ? 1 : -1;
        ResidualTest t;
        t.ell = ell;
        t.valuation_a2 = c * ell - 1 == 0 ? -1 : valuation(c * ell - 1, p);
        t.valuation_a3 = c - ell == 0 ? -1 : valuation(c - ell, p);
        t.a2 = t.valuation_a2 == 0;
        t.a3 = t.valuation_a3 == 0;
        cm.residual.push_back(t);
    }
    bool residual_ok = std::all_of(cm.residual.begin(), cm.residual.end(),
                                   [](const ResidualTest& t) { return t.a2 && t.a3; });
    bool ok = cm.p_odd && cm.p_inert && cm.p_divides_h && cm.p_part_cyclic && residual_ok;
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;

    std::ostringstream os;
    os << to_string(r.verdict);
    if (!cm.p_odd)
        os << "; p = 2";
    if (!cm.p_inert)
        os << "; p is " << to_string(splitting(p, d));
    if (!cm.p_divides_h)
        os << "; p does not divide h = " << cm.h;
    else if (!cm.p_part_cyclic)
        os << "; p-part of Cl is not cyclic";
    if (!residual_ok)
        os << "; residual test failed for an extra prime in Sigma";
    r.summary = os.str();
    r.cm = std::move(cm);
    return r;
}

SearchResult search_characters(const SearchOptions& o) {
    check_odd_prime(o.p);
    if (o.order < 2)
        throw std::invalid_argument("search: order must be >= 2");
    if (o.order % o.p == 0)
        throw std::invalid_argument("search: order must be prime to p");
    if (o.conductor_min < 1 || o.conductor_max < o.conductor_min)
        throw std::invalid_argument("search: empty conductor range");
    SearchResult out;
    const std::size_t span = static_cast<std::size_t>(o.conductor_max - o.conductor_min + 1);
    std::vector<std::vector<SearchHit>> per_q(span);

    if (o.order == 2) {
        out.routed_to_cm = true;
        parallel_for(
            span,
            [&](std::size_t i) {
                i64 q = o.conductor_min + static_cast<i64>(i);
                if (!is_fundamental_discriminant(-q))
                    return;
                auto rep = check_cm_case(-q, o.p, default_sigma(-q, o.p));
                if (rep.verdict != Verdict::Pass)
                    return;
                DirichletCharacter chi = kronecker_character(-q);
                per_q[i].push_back({chi.label(), q, chi.conrey_index(), 0, rep.cm->valuation_L});
            },
            o.threads);
    } else {
        parallel_for(
            span,
            [&](std::size_t i) {
                i64 q = o.conductor_min + static_cast<i64>(i);
                for (const auto& chi : DirichletCharacter::all(q)) {
                    if (chi.order() != o.order || !chi.is_odd() || !chi.is_primitive())
                        continue;
                    auto v = lvalue_valuation(chi, o.p);
                    auto vi = lvalue_valuation(chi.inverse(), o.p);
                    for (std::size_t k = 0; k < v.size(); ++k) {
                        if (o.prime_choice >= 0 && static_cast<int>(k) != o.prime_choice)
                            continue;
                        if (v[k].valuation > 0 && vi[k].valuation == 0) {
                            per_q[i].push_back({chi.label(), q, chi.conrey_index(),
                                                static_cast<int>(k), v[k].valuation});
                            break;
                        }
                    }
                }
            },
            o.threads);
    }
    for (auto& hits : per_q) {
        std::sort(hits.begin(), hits.end(),
                  [](const SearchHit& a, const SearchHit& b) { return a.conrey < b.conrey; });
        out.hits.insert(out.hits.end(), hits.begin(), hits.end());
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

i64 parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    i64 v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != value.size())
        throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
    return v;
}

}  // namespace

Config parse_config(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        i64 v = parse_int(key, value);
        if (key == "p")
            c.p = v;
        else if (key == "precision")
            c.precision = static_cast<int>(v);
        else if (key == "precision_cap")
            c.precision_cap = static_cast<int>(v);
        else if (key == "scan_max_prime")
            c.scan_max_prime = v;
        else if (key == "search_conductor_min")
            c.search_conductor_min = v;
        else if (key == "search_conductor_max")
            c.search_conductor_max = v;
        else if (key == "threads")
            c.threads = static_cast<unsigned>(v);
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (c.precision < 1 || c.precision_cap < c.precision)
        throw std::invalid_argument("config: need 1 <= precision <= precision_cap");
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace eiscong
