/*
   Copyright 2026 The multiset-codes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "msc/json_io.hpp"

#include <sstream>

namespace msc {

json to_json(const MultiplicityVector& v) { return json(v.counts); }

MultiplicityVector multiplicity_vector_from_json(const json& j) {
    return MultiplicityVector{j.get<Vec>()};
}

json to_json(const AnticodeSpec& spec) {
    return json{{"m", spec.m}, {"r_plus", spec.r_plus}, {"r_minus", spec.r_minus}};
}

AnticodeSpec anticode_spec_from_json(const json& j) {
    return AnticodeSpec{j.at("m").get<Int>(), j.at("r_plus").get<Int>(),
                        j.at("r_minus").get<Int>()};
}

json to_json(const AbelianGroup& G) { return json{{"moduli", G.moduli}}; }

AbelianGroup group_from_json(const json& j) { return AbelianGroup(j.at("moduli").get<Vec>()); }

json to_json(const FiniteField& F) {
    return json{{"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

FiniteField field_from_json(const json& j) {
    return FiniteField::with_modulus(j.at("p").get<Int>(), j.at("modulus").get<Vec>());
}

json to_json(const SidonSet& S) {
    json elems = json::array();
    for (const auto& e : S.elements) elems.push_back(e);
    return json{{"group", to_json(S.group)}, {"h", S.h}, {"elements", elems}};
}

SidonSet sidon_set_from_json(const json& j) {
    SidonSet S;
    S.group = group_from_json(j.at("group"));
    S.h = j.at("h").get<Int>();
    for (const auto& e : j.at("elements")) S.elements.push_back(e.get<GroupElement>());
    return S;
}

json to_json(const IntegerLattice& L) {
    json gens = json::array();
    for (const auto& row : L.generators()) gens.push_back(row);
    return json{{"m", L.dim()}, {"generators", gens}};
}

IntegerLattice lattice_from_json(const json& j) {
    Mat rows;
    for (const auto& r : j.at("generators")) rows.push_back(r.get<Vec>());
    IntegerLattice L = IntegerLattice::from_generators(rows);
    if (j.contains("m") && j.at("m").get<Int>() != L.dim())
        throw std::invalid_argument("lattice JSON: dimension field disagrees with generators");
    return L;
}

json to_json(const ExplicitCode& code) {
    json words = json::array();
    for (const auto& w : code.words) words.push_back(w.counts);
    return json{{"q", code.q}, {"n", code.n}, {"codewords", words}};
}

ExplicitCode code_from_json(const json& j) {
    if (j.contains("sidon_params")) return build_sidon_code(sidon_code_params_from_json(j.at("sidon_params")));
    Int q = j.at("q").get<Int>();
    Int n = j.at("n").get<Int>();
    std::vector<MultiplicityVector> words;
    for (const auto& w : j.at("codewords")) words.emplace_back(MultiplicityVector{w.get<Vec>()});
    return ExplicitCode::from_words(q, n, std::move(words));
}

json to_json(const SidonCodeParams& params) {
    return json{{"sidon", to_json(params.sidon)}, {"b", params.coset}, {"n", params.n}};
}

SidonCodeParams sidon_code_params_from_json(const json& j) {
    SidonCodeParams params;
    params.sidon = sidon_set_from_json(j.at("sidon"));
    params.coset = j.at("b").get<GroupElement>();
    params.n = j.at("n").get<Int>();
    return params;
}

json to_json(const VietaCodeword& cw) {
    json roots = json::array();
    for (const auto& r : cw.roots) roots.push_back(r);
    return json{{"field", to_json(cw.field)}, {"roots", roots}};
}

VietaCodeword vieta_codeword_from_json(const json& j) {
    FiniteField F = field_from_json(j.at("field"));
    std::vector<FieldElement> roots;
    for (const auto& r : j.at("roots")) roots.push_back(r.get<FieldElement>());
    return VietaCodeword{std::move(F), std::move(roots)};
}

std::vector<GroupElement> parse_element_list(const AbelianGroup& G, const std::string& text) {
    std::vector<GroupElement> out;
    auto split = [](const std::string& s, char delim) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, delim)) parts.push_back(item);
        return parts;
    };
    std::vector<std::string> chunks;
    if (text.find(';') != std::string::npos) {
        chunks = split(text, ';');
    } else if (G.rank() == 1) {
        chunks = split(text, ',');  // scalar shorthand: "0,1,3,9"
    } else {
        chunks = {text};
    }
    for (const auto& chunk : chunks) {
        GroupElement e;
        for (const auto& part : split(chunk, ',')) e.push_back(std::stoll(part));
        if (e.size() != G.rank())
            throw std::invalid_argument("element '" + chunk + "' does not match group rank");
        G.require(e);
        out.push_back(std::move(e));
    }
    if (out.empty()) throw std::invalid_argument("empty element list");
    return out;
}

}  // namespace msc
