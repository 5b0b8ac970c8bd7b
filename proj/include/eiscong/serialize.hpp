#ifndef EISCONG_SERIALIZE_HPP
#define EISCONG_SERIALIZE_HPP

#include <json.hpp>

#include "eiscong/congruence.hpp"
#include "eiscong/imquad.hpp"
#include "eiscong/lambdaadic.hpp"
#include "eiscong/lfunctions.hpp"
#include "eiscong/modforms.hpp"
#include "eiscong/verifier.hpp"

namespace eiscong {

using json = nlohmann::json;

/// {"order": m, "coeffs": ["num/den", ...]}; from_json is its exact inverse.
json cyclotomic_to_json(const CyclotomicElement& x);
CyclotomicElement cyclotomic_from_json(const json& j);

/// Characters travel as Conrey labels "q.n".
json character_to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const json& j);

json padic_to_json(const PadicNumber& x);
json valuations_to_json(const std::vector<PrimeValuation>& v);

json lvalue_to_json(const DirichletCharacter& chi, int k, const CyclotomicElement& value,
                    const std::vector<PrimeValuation>& valuations);
json classgroup_to_json(const ClassGroup& G);
json qexpansion_to_json(const QExpansion& f);
json report_to_json(const CongruenceReport& r);
CongruenceReport report_from_json(const json& j);
json verdict_to_json(const BoundVerdict& v);
json report_to_json(const HypothesisReport& r);
json specialization_to_json(const SpecializationCheck& c);
json weight_one_to_json(const WeightOneConstant& w);
json search_to_json(const SearchResult& s);

}  // namespace eiscong

#endif
