#ifndef EISCONG_CONGRUENCE_HPP
#define EISCONG_CONGRUENCE_HPP

#include <set>
#include <string>
#include <vector>

#include "eiscong/errors.hpp"
#include "eiscong/imquad.hpp"

namespace eiscong {

/// Default Sigma: {p} together with the primes dividing d.
std::set<i64> default_sigma(i64 d, i64 p);

struct ScanLimits {
    i64 max_prime = 1'000'000;  // give up (InconclusiveScan) beyond this
    unsigned threads = 0;       // 0 = hardware concurrency
};

/// Minimum over scanned primes of valuation_real(a_ell(theta_phi) - 1 - chi_d(ell))
/// in the completion of Q(zeta_{p^n})^+.
struct DepthScan {
    int m_lambda = 0;
    i64 witness_prime = 0;   // a prime attaining the minimum
    i64 sturm = 0;
    i64 last_prime = 0;      // largest prime examined
    i64 split_primes_used = 0;
    bool certified = false;  // every class was realized by a split prime outside Sigma
};

/// m_lambda for theta_phi, phi of p-power order, measured in Q(zeta_{p^n})^+.
/// Throws InconclusiveScan if the class coverage is not reached below
/// limits.max_prime.
DepthScan depth_m_lambda(const ClassCharacter& phi, i64 p, int n, const std::set<i64>& sigma,
                         const ScanLimits& limits = {});

/// Stricter variant: min over 1 <= k <= bound of the valuation of
/// a_k(theta_phi) - a_k(E_1(chi_d)).
int full_coefficient_depth(const ClassCharacter& phi, i64 p, int n, i64 bound);

struct FormRecord {
    std::string label;  // phi label "d:[e...]"
    i64 order = 1;      // p^m
    int m = 0;
    int m_lambda = 0;
    i64 floor = 0;      // p^{n-m}
    i64 witness_prime = 0;
    bool certified = false;
};

struct CongruenceReport {
    i64 d = 0;
    i64 p = 0;
    std::set<i64> sigma;
    i64 h = 0;
    int n = 0;                 // p^n || h
    std::vector<i64> p_part;   // primary factors of the p-part of Cl
    bool cyclic = true;
    int field_level = 0;       // coefficient field Q(zeta_{p^field_level})^+
    i64 e = 1;                 // ramification index, phi(p^field_level)/2
    i64 local_degree = 1;      // [E:Q_p] = e (totally ramified)
    std::vector<FormRecord> forms;
    std::vector<i64> pair_counts;    // per m = 1..field_level
    std::vector<i64> expected_pairs; // phi(p^m)/2 (cyclic case)
    bool complete = true;      // enumeration matches expectation
    bool floors_only = false;  // m_lambda set to the floor, no valuations computed
    bool exact = true;         // every m_lambda is certified
    i64 total = 0;             // sum m_lambda
    BigRational depth_ratio;   // (1/e) sum m_lambda
    bool depth_bound_holds = false;  // depth_ratio >= n
    BigRational lhs;           // ([E:Q_p]/e) sum m_lambda = val_p(#T/J), given J principal
    i64 val_h = 0;             // val_p(h_F)
    i64 val_class_module = 0;  // val_p(#C_F) = [E:Q_p] n
    std::vector<std::string> notes;
};

struct DepthOptions {
    bool floors_only = false;
    ScanLimits limits;
};

/// Congruence report for the CM forms attached to Cl(Q(sqrt d)) at an inert
/// p > 2 dividing h. Throws invalid_argument when p splits or ramifies or does
/// not divide h.
CongruenceReport total_depth(i64 d, i64 p, const std::set<i64>& sigma,
                             const DepthOptions& options = {});

struct BoundVerdict {
    bool pass = false;
    bool incomplete = false;  // failure is bookkeeping, not mathematics
    BigRational lhs;
    i64 target = 0;
    std::string message;
};

/// PASS iff ([E:Q_p]/e) sum m_lambda >= val_p(#C_F) on a complete report.
BoundVerdict congruence_module_bound(const CongruenceReport& report);

}  // namespace eiscong

#endif
