#include "eiscong/serialize.hpp"

#include <stdexcept>

namespace eiscong {

json cyclotomic_to_json(const CyclotomicElement& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(to_wire(c));
    return {{"order", x.order()}, {"coeffs", coeffs}};
}

CyclotomicElement cyclotomic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("cyclotomic value needs 'order' and 'coeffs'");
    i64 m = j.at("order").get<i64>();
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<BigRational> c;
    for (const auto& s : j.at("coeffs"))
        c.push_back(parse_rational(s.get<std::string>()));
    if (c.size() > static_cast<std::size_t>(euler_phi(m)))
        throw std::invalid_argument("too many coefficients for order " + std::to_string(m));
    return CyclotomicElement(m, std::move(c));
}

json character_to_json(const DirichletCharacter& chi) { return chi.label(); }

DirichletCharacter character_from_json(const json& j) {
    return DirichletCharacter::from_label(j.get<std::string>());
}

json padic_to_json(const PadicNumber& x) {
    json unit = json::array();
    for (const auto& c : x.unit())
        unit.push_back(c.get_str());
    json modulus = json::array();
    for (auto c : x.ring()->modulus())
        modulus.push_back(c);
    return {{"p", x.prime()},
            {"valuation", x.valuation()},
            {"precision", x.precision()},
            {"absolute_precision", x.absolute_precision()},
            {"unit", unit},
            {"ring_modulus", modulus},
            {"text", x.to_string()}};
}

json valuations_to_json(const std::vector<PrimeValuation>& v) {
    json out = json::array();
    for (const auto& pv : v)
        out.push_back({{"prime_label", pv.prime.label()}, {"prime_index", pv.prime.index},
                       {"val", pv.valuation}});
    return out;
}

json lvalue_to_json(const DirichletCharacter& chi, int k, const CyclotomicElement& value,
                    const std::vector<PrimeValuation>& valuations) {
    return {{"character", chi.label()},
            {"k", k},
            {"value", cyclotomic_to_json(value)},
            {"valuations", valuations_to_json(valuations)}};
}

json classgroup_to_json(const ClassGroup& G) {
    json forms = json::array();
    for (const auto& f : G.forms())
        forms.push_back({f.a, f.b, f.c});
    return {{"d", G.discriminant()}, {"h", G.h()}, {"w", G.w()},
            {"structure", G.structure()}, {"forms", forms}};
}

json qexpansion_to_json(const QExpansion& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs)
        coeffs.push_back(cyclotomic_to_json(c));
    return {{"level", f.level}, {"nebentypus", f.nebentypus.label()}, {"bound", f.bound},
            {"coefficients", coeffs}};
}

json report_to_json(const CongruenceReport& r) {
    json forms = json::array();
    for (const auto& f : r.forms)
        forms.push_back({{"label", f.label},
                         {"order", f.order},
                         {"m", f.m},
                         {"m_lambda", f.m_lambda},
                         {"floor", f.floor},
                         {"witness_prime", f.witness_prime},
                         {"certified", f.certified}});
    return {{"d", r.d},
            {"p", r.p},
            {"sigma", r.sigma},
            {"h", r.h},
            {"n", r.n},
            {"p_part", r.p_part},
            {"cyclic", r.cyclic},
            {"field_level", r.field_level},
            {"e", r.e},
            {"local_degree", r.local_degree},
            {"forms", forms},
            {"pair_counts", r.pair_counts},
            {"expected_pairs", r.expected_pairs},
            {"complete", r.complete},
            {"floors_only", r.floors_only},
            {"exact", r.exact},
            {"total", r.total},
            {"depth_ratio", to_wire(r.depth_ratio)},
            {"depth_bound_holds", r.depth_bound_holds},
            {"lhs", to_wire(r.lhs)},
            {"val_h", r.val_h},
            {"val_class_module", r.val_class_module},
            {"notes", r.notes}};
}

CongruenceReport report_from_json(const json& j) {
    CongruenceReport r;
    r.d = j.at("d").get<i64>();
    r.p = j.at("p").get<i64>();
    r.sigma = j.at("sigma").get<std::set<i64>>();
    r.h = j.at("h").get<i64>();
    r.n = j.at("n").get<int>();
    r.p_part = j.at("p_part").get<std::vector<i64>>();
    r.cyclic = j.at("cyclic").get<bool>();
    r.field_level = j.at("field_level").get<int>();
    r.e = j.at("e").get<i64>();
    r.local_degree = j.at("local_degree").get<i64>();
    for (const auto& f : j.at("forms"))
        r.forms.push_back({f.at("label").get<std::string>(), f.at("order").get<i64>(),
                           f.at("m").get<int>(), f.at("m_lambda").get<int>(), f.at("floor").get<i64>(),
                           f.at("witness_prime").get<i64>(), f.at("certified").get<bool>()});
    r.pair_counts = j.at("pair_counts").get<std::vector<i64>>();
    r.expected_pairs = j.at("expected_pairs").get<std::vector<i64>>();
    r.complete = j.at("complete").get<bool>();
    r.floors_only = j.at("floors_only").get<bool>();
    r.exact = j.at("exact").get<bool>();
    r.total = j.at("total").get<i64>();
    r.depth_ratio = parse_rational(j.at("depth_ratio").get<std::string>());
    r.depth_bound_holds = j.at("depth_bound_holds").get<bool>();
    r.lhs = parse_rational(j.at("lhs").get<std::string>());
    r.val_h = j.at("val_h").get<i64>();
    r.val_class_module = j.at("val_class_module").get<i64>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

json verdict_to_json(const BoundVerdict& v) {
    return {{"pass", v.pass}, {"incomplete", v.incomplete}, {"lhs", to_wire(v.lhs)},
            {"target", v.target}, {"message", v.message}};
}

namespace {

json residual_to_json(const std::vector<ResidualTest>& ts) {
    json out = json::array();
    for (const auto& t : ts)
        out.push_back({{"ell", t.ell}, {"a2", t.a2}, {"a3", t.a3},
                       {"valuation_a2", t.valuation_a2}, {"valuation_a3", t.valuation_a3}});
    return out;
}

}  // namespace

json report_to_json(const HypothesisReport& r) {
    json j = {{"character", r.character},
              {"p", r.p},
              {"sigma", r.sigma},
              {"prime_choice", r.prime_choice},
              {"precondition_failures", r.precondition_failures},
              {"excluded", r.excluded},
              {"exclusion", r.exclusion},
              {"verdict", to_string(r.verdict)},
              {"summary", r.summary}};
    json primes = json::array();
    for (const auto& pr : r.primes)
        primes.push_back({{"prime_label", pr.prime.label()},
                          {"prime_index", pr.prime.index},
                          {"A1", {{"valuation", pr.valuation_L}, {"holds", pr.a1},
                                  {"cyclicity", to_string(pr.cyclicity)}}},
                          {"CF_chi_zero", {{"valuation_inverse", pr.valuation_L_inverse},
                                           {"holds", pr.cf_chi_zero}}},
                          {"Dp_nontrivial", {{"holds", pr.dp_nontrivial}, {"witness", pr.dp_witness}}},
                          {"A2_A3", residual_to_json(pr.residual)},
                          {"verdict", to_string(pr.verdict)}});
    j["primes"] = primes;
    if (!r.primes.empty())
        j["principality"] = {{"e", r.principality.e},
                             {"i_e_lt_p_minus_1", r.principality.small_e},
                             {"ii_omega_power", r.principality.omega_power},
                             {"iii_chi_N_p_ne_1", r.principality.tame_at_p},
                             {"holds", r.principality.any()}};
    if (r.cm)
        j["cm"] = {{"d", r.cm->d},
                   {"h", r.cm->h},
                   {"structure", r.cm->structure},
                   {"p_odd", r.cm->p_odd},
                   {"p_inert", r.cm->p_inert},
                   {"p_divides_h", r.cm->p_divides_h},
                   {"p_part_cyclic", r.cm->p_part_cyclic},
                   {"valuation_L", r.cm->valuation_L},
                   {"A2_A3", residual_to_json(r.cm->residual)}};
    return j;
}

json specialization_to_json(const SpecializationCheck& c) {
    return {{"character", c.chi.label()},
            {"theta", c.theta.label()},
            {"p", c.p},
            {"ell", c.ell},
            {"k", c.k},
            {"precision", c.precision},
            {"lhs", padic_to_json(c.lhs)},
            {"rhs", padic_to_json(c.rhs)},
            {"rhs_exact", cyclotomic_to_json(c.rhs_exact)},
            {"holds", c.holds},
            {"diagnostic", c.diagnostic}};
}

json weight_one_to_json(const WeightOneConstant& w) {
    return {{"value", cyclotomic_to_json(w.value)},
            {"euler_factor", cyclotomic_to_json(w.euler_factor)},
            {"l_value", cyclotomic_to_json(w.l_value)},
            {"kubota_leopoldt", cyclotomic_to_json(w.kubota_leopoldt)},
            {"valuations", valuations_to_json(w.valuations)},
            {"canonical_valuation", w.canonical_valuation},
            {"obstruction", w.obstruction}};
}

json search_to_json(const SearchResult& s) {
    json hits = json::array();
    for (const auto& h : s.hits)
        hits.push_back({{"label", h.label}, {"conductor", h.conductor}, {"conrey", h.conrey},
                        {"prime_index", h.prime_index}, {"valuation", h.valuation}});
    return {{"routed_to_cm", s.routed_to_cm}, {"hits", hits}};
}

}  // namespace eiscong
