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

#pragma once

#include <json.hpp>

#include "msc/altconstr.hpp"
#include "msc/codes.hpp"
#include "msc/lattices.hpp"

namespace msc {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const MultiplicityVector& v);
MultiplicityVector multiplicity_vector_from_json(const json& j);

json to_json(const AnticodeSpec& spec);
AnticodeSpec anticode_spec_from_json(const json& j);

json to_json(const AbelianGroup& G);
AbelianGroup group_from_json(const json& j);

json to_json(const FiniteField& F);
FiniteField field_from_json(const json& j);

json to_json(const SidonSet& S);
SidonSet sidon_set_from_json(const json& j);

json to_json(const IntegerLattice& L);
IntegerLattice lattice_from_json(const json& j);

json to_json(const ExplicitCode& code);
ExplicitCode code_from_json(const json& j);

json to_json(const SidonCodeParams& params);
SidonCodeParams sidon_code_params_from_json(const json& j);

json to_json(const VietaCodeword& cw);
VietaCodeword vieta_codeword_from_json(const json& j);

/// Parses a set literal: elements separated by ';', residues within an
/// element separated by ','. For rank-1 groups a plain comma-separated
/// scalar list is accepted ("0,1,3,9").
std::vector<GroupElement> parse_element_list(const AbelianGroup& G, const std::string& text);

}  // namespace msc
