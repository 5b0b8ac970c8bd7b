#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "eiscong/arith.hpp"
#include "eiscong/serialize.hpp"

using namespace eiscong;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

enum class Format { Text, Json, Tsv };

struct Globals {
    Format format = Format::Text;
    bool json = false;
    bool tsv = false;
    std::optional<int> precision;
    int prime_choice = -1;
    std::string config_path;
    Config config;

    PrecisionPolicy policy() const {
        PrecisionPolicy p;
        p.initial = precision.value_or(config.precision);
        p.cap = std::max(config.precision_cap, p.initial);
        return p;
    }
};

// Thrown for bad user input discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::set<i64> parse_sigma(const std::string& text) {
    std::set<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t pos = 0;
        i64 v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || pos == 0 || !is_prime(v))
            throw UsageError("--sigma expects a comma-separated list of primes, got '" + item + "'");
        out.insert(v);
    }
    return out;
}

DirichletCharacter parse_character(const std::string& label) {
    try {
        return DirichletCharacter::from_label(label);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad character label: ") + e.what());
    }
}

i64 resolve_p(const std::optional<i64>& flag, const Globals& g) {
    if (flag)
        return *flag;
    if (g.config.p)
        return *g.config.p;
    throw UsageError("-p is required (or set p in the config file)");
}

std::string join(const std::vector<i64>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::set<i64>& v) { return join(std::vector<i64>(v.begin(), v.end())); }

int verdict_code(Verdict v) {
    return v == Verdict::Pass ? kPass : v == Verdict::Unknown ? kInconclusive : kFail;
}

void print_hypotheses(const HypothesisReport& r, Format f) {
    if (f == Format::Json) {
        std::cout << report_to_json(r).dump(2) << '\n';
        return;
    }
    if (f == Format::Tsv) {
        std::cout << "character\tp\tprime\tA1_val\tcyclicity\tCF_chi_zero\tDp\tA2A3\tverdict\n";
        for (const auto& pr : r.primes) {
            bool res = std::all_of(pr.residual.begin(), pr.residual.end(),
                                   [](const ResidualTest& t) { return t.a2 && t.a3; });
            std::cout << r.character << '\t' << r.p << '\t' << pr.prime.label() << '\t' << pr.valuation_L
                      << '\t' << to_string(pr.cyclicity) << '\t' << pr.cf_chi_zero << '\t'
                      << pr.dp_nontrivial << '\t' << res << '\t' << to_string(pr.verdict) << '\n';
        }
        if (r.cm)
            std::cout << r.character << '\t' << r.p << "\t-\t" << r.cm->valuation_L << "\t"
                      << (r.cm->p_part_cyclic ? "Certified" : "Unknown") << "\t-\t" << r.cm->p_inert
                      << "\t-\t" << to_string(r.verdict) << '\n';
        return;
    }
    std::cout << "character " << r.character << "  p = " << r.p << "  Sigma = {" << join(r.sigma) << "}\n";
    for (const auto& s : r.precondition_failures)
        std::cout << "  precondition failed: " << s << '\n';
    if (r.excluded)
        std::cout << "  excluded: " << r.exclusion << '\n';
    for (const auto& pr : r.primes) {
        std::cout << "  prime " << pr.prime.index << " (" << pr.prime.label() << "): A1 val " << pr.valuation_L
                  << " [" << to_string(pr.cyclicity) << "], val L(0,chi^-1) " << pr.valuation_L_inverse
                  << ", Dp " << (pr.dp_nontrivial ? "nontrivial" : "trivial") << " (" << pr.dp_witness << ")";
        for (const auto& t : pr.residual)
            std::cout << ", ell=" << t.ell << " A2 " << (t.a2 ? "ok" : "fails") << " A3 "
                      << (t.a3 ? "ok" : "fails");
        std::cout << " -> " << to_string(pr.verdict) << '\n';
    }
    if (!r.primes.empty())
        std::cout << "  principality: e = " << r.principality.e << ", (i) " << r.principality.small_e
                  << ", (ii) " << r.principality.omega_power << ", (iii) " << r.principality.tame_at_p << '\n';
    if (r.cm) {
        const auto& c = *r.cm;
        std::cout << "  d = " << c.d << ", h = " << c.h << ", Cl = [" << join(c.structure) << "]\n"
                  << "  p odd " << c.p_odd << ", inert " << c.p_inert << ", p | h " << c.p_divides_h
                  << ", p-part cyclic " << c.p_part_cyclic << ", v_p L(0, chi_d) = " << c.valuation_L << '\n';
        for (const auto& t : c.residual)
            std::cout << "  ell=" << t.ell << " A2 " << (t.a2 ? "ok" : "fails") << " A3 " << (t.a3 ? "ok" : "fails")
                      << '\n';
    }
    std::cout << r.summary << '\n';
}

void print_report(const CongruenceReport& r, const BoundVerdict& v, Format f) {
    if (f == Format::Json) {
        json j = report_to_json(r);
        j["bound"] = verdict_to_json(v);
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (f == Format::Tsv) {
        std::cout << "d\tp\tlabel\torder\tm_lambda\tfloor\twitness\tcertified\n";
        for (const auto& rec : r.forms)
            std::cout << r.d << '\t' << r.p << '\t' << rec.label << '\t' << rec.order << '\t' << rec.m_lambda
                      << '\t' << rec.floor << '\t' << rec.witness_prime << '\t' << rec.certified << '\n';
        return;
    }
    std::cout << "d = " << r.d << ", p = " << r.p << ", h = " << r.h << ", n = " << r.n << ", p-part ["
              << join(r.p_part) << "]" << (r.cyclic ? " cyclic" : " not cyclic") << ", e = " << r.e
              << ", Sigma = {" << join(r.sigma) << "}\n";
    std::cout << "  form                      order  m_lambda  floor  witness\n";
    for (const auto& rec : r.forms) {
        std::string label = rec.label;
        label.resize(std::max<std::size_t>(label.size(), 24), ' ');
        std::cout << "  " << label << "  " << rec.order << "      " << rec.m_lambda << "         " << rec.floor
                  << "      " << rec.witness_prime << (rec.certified ? "" : " (not certified)") << '\n';
    }
    std::cout << "  sum m_lambda = " << r.total << ", (1/e) sum = " << r.depth_ratio.get_str()
              << " vs val_p(h) = " << r.val_h << (r.depth_bound_holds ? " ok" : " FAILS") << '\n'
              << "  ([E:Q_p]/e) sum = " << r.lhs.get_str() << " vs val_p(#C_F) = " << r.val_class_module << '\n';
    for (const auto& n : r.notes)
        std::cout << "  note: " << n << '\n';
    std::cout << v.message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for weight-one Eisenstein congruences and their hypotheses"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--tsv", g.tsv, "tab-separated output");
    app.add_option("--precision", g.precision, "initial p-adic precision M")->check(CLI::PositiveNumber);
    app.add_option("--prime-choice", g.prime_choice, "index of the prime above p carrying verdicts")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--config", g.config_path, "key=value configuration file");

    std::string chi_label, sigma_text;
    std::optional<i64> p_flag;
    i64 d = 0, order = 0, bound = 0, ell = 0, zeta_order = 1, cond_min = 0, cond_max = 0, max_prime = 0;
    int k = 1, M = 20;
    bool floors_only = false, weight_one = false;

    auto* hyp = app.add_subcommand("check-hypotheses", "standing assumptions for an odd character");
    hyp->add_option("--chi", chi_label, "character label q.n")->required();
    hyp->add_option("-p", p_flag, "prime p");
    hyp->add_option("--sigma", sigma_text, "comma-separated primes (default: p and primes of N)");

    auto* cm = app.add_subcommand("check-cm", "CM-case assumptions for Q(sqrt d)");
    cm->add_option("-d", d, "negative fundamental discriminant")->required();
    cm->add_option("-p", p_flag, "prime p");
    cm->add_option("--sigma", sigma_text, "comma-separated primes (default: p and primes of d)");

    auto* lv = app.add_subcommand("lvalue", "L(1-k, chi) and its valuations above p");
    lv->add_option("--chi", chi_label, "character label q.n")->required();
    lv->add_option("-k", k, "evaluate at s = 1 - k")->check(CLI::PositiveNumber);
    lv->add_option("-p", p_flag, "prime for valuations");
    lv->add_flag("--weight-one-constant", weight_one, "also report (1 - chi omega^-1(p)) L(0, chi)");

    auto* cg = app.add_subcommand("classgroup", "class group by reduced forms");
    cg->add_option("-d", d, "negative fundamental discriminant")->required();

    auto* cmf = app.add_subcommand("cmforms", "weight-one CM newforms of a given order");
    cmf->add_option("-d", d, "negative fundamental discriminant")->required();
    cmf->add_option("--order", order, "exact order of phi")->required();
    cmf->add_option("-B", bound, "q-expansion bound (default: Sturm bound)");

    auto* cd = app.add_subcommand("congruence-depth", "Eisenstein congruence depths m_lambda");
    cd->add_option("-d", d, "negative fundamental discriminant")->required();
    cd->add_option("-p", p_flag, "inert prime p dividing h");
    cd->add_option("--sigma", sigma_text, "comma-separated primes (default: p and primes of d)");
    cd->add_flag("--floors-only", floors_only, "use the theoretical floors p^(n-m) only");
    cd->add_option("--max-prime", max_prime, "scan cap");

    auto* ls = app.add_subcommand("lambda-specialize", "weight-k specialization of c_ell");
    ls->add_option("--chi", chi_label, "character chi~ as q.n")->required();
    ls->add_option("-p", p_flag, "prime p");
    ls->add_option("-k", k, "weight k >= 1")->required();
    ls->add_option("-l", ell, "prime ell")->required();
    ls->add_option("-M", M, "precision p^M")->check(CLI::PositiveNumber);
    ls->add_option("--zeta-order", zeta_order, "order of zeta (only 1 is computed)");

    auto* se = app.add_subcommand("search", "odd primitive characters with A1 and C_F^chi = 0");
    se->add_option("--order", order, "character order r")->required();
    se->add_option("-p", p_flag, "prime p");
    se->add_option("--conductor-min", cond_min, "smallest conductor");
    se->add_option("--conductor-max", cond_max, "largest conductor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (g.json && g.tsv)
            throw UsageError("--json and --tsv are exclusive");
        g.format = g.json ? Format::Json : g.tsv ? Format::Tsv : Format::Text;
        if (!g.config_path.empty())
            g.config = load_config(g.config_path);
        if (g.precision && *g.precision > g.config.precision_cap)
            throw UsageError("--precision exceeds precision_cap");
        std::set<i64> sigma;
        if (!sigma_text.empty())
            sigma = parse_sigma(sigma_text);

        if (*hyp) {
            DirichletCharacter chi = parse_character(chi_label);
            i64 p = resolve_p(p_flag, g);
            if (sigma_text.empty()) {
                sigma = {p};
                for (const auto& pp : factorize(chi.conductor()))
                    if (pp.prime != p)
                        sigma.insert(pp.prime);
            }
            auto r = check_assumptions(chi, p, sigma, g.prime_choice, g.policy());
            print_hypotheses(r, g.format);
            return verdict_code(r.verdict);
        }
        if (*cm) {
            i64 p = resolve_p(p_flag, g);
            if (sigma_text.empty())
                sigma = default_sigma(d, p);
            auto r = check_cm_case(d, p, sigma);
            print_hypotheses(r, g.format);
            return verdict_code(r.verdict);
        }
        if (*lv) {
            DirichletCharacter chi = parse_character(chi_label);
            LValue L = l_value(1 - k, chi);
            std::vector<PrimeValuation> vals;
            std::optional<i64> p;
            if (p_flag || g.config.p)
                p = resolve_p(p_flag, g);
            if (p && !L.value.is_zero())
                vals = valuations_above(L.value, *p, L.value.order(), g.policy());
            std::optional<WeightOneConstant> w1;
            if (weight_one) {
                if (!p)
                    throw UsageError("--weight-one-constant needs -p");
                w1 = eisenstein_constant_at_weight_one(chi, *p, g.policy());
            }
            if (g.format == Format::Json) {
                json j = lvalue_to_json(chi, k, L.value, vals);
                if (w1)
                    j["weight_one_constant"] = weight_one_to_json(*w1);
                std::cout << j.dump(2) << '\n';
            } else if (g.format == Format::Tsv) {
                std::cout << "character\tk\tvalue\tprime\tval\n";
                if (vals.empty())
                    std::cout << chi.label() << '\t' << k << '\t' << L.value.to_string() << "\t-\t-\n";
                for (const auto& pv : vals)
                    std::cout << chi.label() << '\t' << k << '\t' << L.value.to_string() << '\t'
                              << pv.prime.label() << '\t' << pv.valuation << '\n';
            } else {
                std::cout << "L(" << 1 - k << ", " << chi.label() << ") = " << L.value.to_string() << '\n';
                for (const auto& pv : vals)
                    std::cout << "  val at " << pv.prime.label() << " (index " << pv.prime.index
                              << "): " << pv.valuation << '\n';
                if (w1)
                    std::cout << "  (1 - chi omega^-1(p)) L(0, chi) = " << w1->value.to_string()
                              << ", canonical valuation " << w1->canonical_valuation
                              << (w1->obstruction ? " (positive)" : "") << "\n  L_p(0, chi omega) = "
                              << w1->kubota_leopoldt.to_string() << '\n';
            }
            return kPass;
        }
        if (*cg) {
            auto G = reduced_forms(d);
            if (g.format == Format::Json) {
                std::cout << classgroup_to_json(*G).dump(2) << '\n';
            } else if (g.format == Format::Tsv) {
                std::cout << "index\ta\tb\tc\torder\n";
                for (std::size_t i = 0; i < G->forms().size(); ++i) {
                    const auto& f = G->forms()[i];
                    std::cout << i << '\t' << f.a << '\t' << f.b << '\t' << f.c << '\t' << G->order(i) << '\n';
                }
            } else {
                std::cout << "d = " << d << ", h = " << G->h() << ", w = " << G->w() << ", Cl = ["
                          << join(G->structure()) << "]\n";
                for (std::size_t i = 0; i < G->forms().size(); ++i)
                    std::cout << "  " << G->forms()[i].to_string() << "  order " << G->order(i) << '\n';
            }
            return kPass;
        }
        if (*cmf) {
            auto G = reduced_forms(d);
            if (bound <= 0)
                bound = sturm_bound(-d);
            auto pairs = characters_of_order(G, order);
            json forms = json::array();
            for (const auto& pr : pairs) {
                QExpansion f = theta_series(pr.phi, bound);
                if (g.format == Format::Json) {
                    json j = qexpansion_to_json(f);
                    j["d"] = d;
                    j["phi"] = pr.phi.exponents();
                    j["label"] = pr.phi.label();
                    forms.push_back(j);
                } else if (g.format == Format::Tsv) {
                    for (i64 n = 0; n <= bound; ++n)
                        std::cout << pr.phi.label() << '\t' << n << '\t' << f[n].to_string() << '\n';
                } else {
                    std::cout << pr.phi.label() << " (level " << f.level << ", nebentypus " << f.nebentypus.label()
                              << ")\n";
                    for (i64 n = 1; n <= bound; ++n)
                        if (!f[n].is_zero())
                            std::cout << "  a_" << n << " = " << f[n].to_string() << '\n';
                }
            }
            if (g.format == Format::Json)
                std::cout << json{{"d", d}, {"order", order}, {"bound", bound}, {"forms", forms}}.dump(2) << '\n';
            return kPass;
        }
        if (*cd) {
            i64 p = resolve_p(p_flag, g);
            if (sigma_text.empty())
                sigma = default_sigma(d, p);
            DepthOptions opt;
            opt.floors_only = floors_only;
            opt.limits.max_prime = max_prime > 0 ? max_prime : g.config.scan_max_prime;
            opt.limits.threads = g.config.threads;
            auto r = total_depth(d, p, sigma, opt);
            auto v = congruence_module_bound(r);
            print_report(r, v, g.format);
            return v.pass && (r.depth_bound_holds || !r.cyclic) ? kPass : kFail;
        }
        if (*ls) {
            DirichletCharacter chi = parse_character(chi_label);
            i64 p = resolve_p(p_flag, g);
            if (zeta_order != 1) {
                DirichletCharacter theta = chi * teichmuller_character(p).inverse();
                specialize_c_ell(theta, ell, {k, zeta_order}, p, M);  // throws Unsupported
            }
            auto c = specialization_identity(chi, ell, k, p, M);
            if (g.format == Format::Json) {
                std::cout << specialization_to_json(c).dump(2) << '\n';
            } else if (g.format == Format::Tsv) {
                std::cout << "character\tp\tell\tk\tM\tholds\n"
                          << chi.label() << '\t' << p << '\t' << ell << '\t' << k << '\t' << M << '\t' << c.holds
                          << '\n';
            } else {
                std::cout << "nu_{" << k << ",1}(c_" << ell << ") = " << c.lhs.to_string() << '\n'
                          << "1 + chi omega^(1-k)(ell) ell^(k-1) = " << c.rhs_exact.to_string() << " -> "
                          << c.rhs.to_string() << '\n'
                          << (c.holds ? "congruent" : "NOT congruent") << " mod " << p << "^" << M << '\n';
                if (!c.holds)
                    std::cout << c.diagnostic << '\n';
            }
            return c.holds ? kPass : kFail;
        }
        if (*se) {
            SearchOptions o;
            o.order = order;
            o.p = resolve_p(p_flag, g);
            o.conductor_min = cond_min > 0 ? cond_min : g.config.search_conductor_min;
            o.conductor_max = cond_max > 0 ? cond_max : g.config.search_conductor_max;
            o.prime_choice = g.prime_choice;
            o.threads = g.config.threads;
            auto s = search_characters(o);
            if (g.format == Format::Json) {
                std::cout << search_to_json(s).dump(2) << '\n';
            } else if (g.format == Format::Tsv) {
                std::cout << "label\tconductor\tprime_index\tvaluation\n";
                for (const auto& h : s.hits)
                    std::cout << h.label << '\t' << h.conductor << '\t' << h.prime_index << '\t' << h.valuation << '\n';
            } else {
                std::cout << s.hits.size() << " characters" << (s.routed_to_cm ? " (CM checker)" : "") << '\n';
                for (const auto& h : s.hits)
                    std::cout << "  " << h.label << "  prime " << h.prime_index << "  val " << h.valuation << '\n';
            }
            return kPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUsage;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const InconclusiveScan& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
