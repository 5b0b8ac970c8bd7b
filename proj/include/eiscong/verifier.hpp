#ifndef EISCONG_VERIFIER_HPP
#define EISCONG_VERIFIER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eiscong/characters.hpp"
#include "eiscong/lfunctions.hpp"

namespace eiscong {

enum class Verdict { Pass, Fail, Unknown };
const char* to_string(Verdict v);

enum class Cyclicity { Certified, Unknown };
const char* to_string(Cyclicity c);

/// Residual tests (2) and (3) for an extra prime ell in Sigma at one prime above p.
struct ResidualTest {
    i64 ell = 0;
    int valuation_a2 = 0;  // of chi(ell) ell - 1
    int valuation_a3 = 0;  // of chi(ell) - ell
    bool a2 = false;       // chi(ell) ell != 1 mod varpi
    bool a3 = false;       // chi(ell) != ell mod varpi
};

/// Everything that depends on the choice of prime above p.
struct PrimeReport {
    PrimeAbove prime;
    int valuation_L = 0;          // val L(0, chi)
    int valuation_L_inverse = 0;  // val L(0, chi^{-1}) at the same prime
    bool a1 = false;              // val_L > 0
    Cyclicity cyclicity = Cyclicity::Unknown;
    bool cf_chi_zero = false;     // val_L_inverse == 0
    bool dp_nontrivial = false;   // chi-bar restricted to D_p is nontrivial
    std::string dp_witness;
    std::vector<ResidualTest> residual;
    Verdict verdict = Verdict::Fail;
};

struct PrincipalityBranches {
    i64 e = 1;              // ramification index of p in Q(chi) = order(chi_p)
    bool small_e = false;   // (i) e < p - 1
    bool omega_power = false;  // (ii) chi = omega^s
    bool tame_at_p = false;    // (iii) chi_N(p) != 1
    bool any() const { return small_e || omega_power || tame_at_p; }
};

struct CmBlock {
    i64 d = 0;
    i64 h = 0;
    std::vector<i64> structure;
    bool p_odd = false;
    bool p_inert = false;
    bool p_divides_h = false;
    bool p_part_cyclic = false;
    int valuation_L = 0;  // v_p(L(0, chi_d)) = v_p(2h/w)
    std::vector<ResidualTest> residual;
};

struct HypothesisReport {
    std::string character;  // "q.n"
    i64 p = 0;
    std::set<i64> sigma;
    int prime_choice = -1;  // -1: any prime above p may carry the verdict
    std::vector<std::string> precondition_failures;
    bool excluded = false;  // chi = omega or omega^{-1}
    std::string exclusion;
    std::vector<PrimeReport> primes;
    PrincipalityBranches principality;
    std::optional<CmBlock> cm;
    Verdict verdict = Verdict::Fail;
    std::string summary;
};

/// Checks the standing assumptions for chi~ at p with the given Sigma.
/// prime_choice >= 0 restricts the verdict to that prime above p.
HypothesisReport check_assumptions(const DirichletCharacter& chi, i64 p, const std::set<i64>& sigma,
                                   int prime_choice = -1, PrecisionPolicy policy = {});

/// CM-case checks for Q(sqrt d) at p.
HypothesisReport check_cm_case(i64 d, i64 p, const std::set<i64>& sigma);

struct SearchOptions {
    i64 order = 4;
    i64 conductor_min = 1;
    i64 conductor_max = 200;
    i64 p = 5;
    int prime_choice = -1;
    unsigned threads = 0;
};

struct SearchHit {
    std::string label;
    i64 conductor = 0;
    i64 conrey = 0;
    int prime_index = 0;  // first prime above p satisfying the target
    int valuation = 0;    // val L(0, chi) there
};

struct SearchResult {
    bool routed_to_cm = false;  // order 2: each hit passed check_cm_case
    std::vector<SearchHit> hits;  // sorted by conductor, then Conrey index
};

/// Odd primitive characters of the given order and conductor range with
/// val L(0, chi) > 0 and val L(0, chi^{-1}) = 0 at a common prime above p.
SearchResult search_characters(const SearchOptions& options);

/// key = value settings; '#' starts a comment.
struct Config {
    std::optional<i64> p;
    int precision = kDefaultPrecision;
    int precision_cap = kPrecisionCap;
    i64 scan_max_prime = 1'000'000;
    i64 search_conductor_min = 1;
    i64 search_conductor_max = 200;
    unsigned threads = 0;
};
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

}  // namespace eiscong

#endif
