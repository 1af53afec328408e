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

#include <string>

#include "msc/ints.hpp"

namespace msc {

/// An element of a product of cyclic groups, as a vector of canonical
/// residues (one entry per modulus).
using GroupElement = Vec;

/// Finite Abelian group presented as Z_{v1} x ... x Z_{vk}. Every finite
/// Abelian group is isomorphic to such a product, so nothing is lost by
/// restricting to this presentation.
struct AbelianGroup {
    Vec moduli;

    AbelianGroup() = default;
    explicit AbelianGroup(Vec m);

    Int order() const;
    std::size_t rank() const { return moduli.size(); }

    bool contains(const GroupElement& e) const;
    void require(const GroupElement& e) const;

    GroupElement zero() const { return GroupElement(moduli.size(), 0); }
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    /// c-fold sum of a, for any integer c (negative c uses the inverse).
    GroupElement scalar_mul(Int c, const GroupElement& a) const;

    /// Mixed-radix index of an element (last coordinate fastest) and its
    /// inverse; used for table keys and canonical element ordering.
    Int index_of(const GroupElement& e) const;
    GroupElement element_at(Int idx) const;

    /// All elements in ascending mixed-radix order.
    std::vector<GroupElement> enumerate(const Budget& budget = {}) const;

    bool operator==(const AbelianGroup& o) const { return moduli == o.moduli; }

    std::string name() const;  // e.g. "Z2xZ6"
};

/// Parse "Z13" or "Z2xZ6" style group names.
AbelianGroup parse_group(const std::string& name);

/// All isomorphism classes of Abelian groups of order v, each in invariant
/// factor form (moduli d1 | d2 | ... | dk).
std::vector<AbelianGroup> abelian_groups_of_order(Int v);

bool is_prime(Int n);
/// Decomposes n = p^e with p prime; nullopt when n is not a prime power.
std::optional<std::pair<Int, Int>> prime_power(Int n);

/// Element of GF(p^k): polynomial residue of degree < k over Z_p, stored
/// as the coefficient vector (c0, c1, ..., c_{k-1}).
using FieldElement = Vec;

/// GF(p^k) with arithmetic modulo a monic irreducible polynomial of degree
/// k over Z_p. The canonical modulus is the lexicographically smallest
/// monic irreducible (ordering non-leading coefficient vectors by their
/// base-p integer encoding), so serialized artifacts are reproducible.
class FiniteField {
   public:
    /// Field with the canonical modulus.
    static FiniteField make(Int p, Int k, const Budget& budget = {});
    /// Field with a caller-supplied monic modulus; irreducibility is
    /// verified by trial division against all lower-degree monic factors.
    static FiniteField with_modulus(Int p, Vec modulus, const Budget& budget = {});

    Int p() const { return p_; }
    Int k() const { return k_; }
    Int size() const { return size_; }
    const Vec& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(static_cast<std::size_t>(k_), 0); }
    FieldElement one() const;
    FieldElement from_int(Int idx) const;  // base-p digits of idx
    Int to_int(const FieldElement& e) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, Int e) const;

    bool is_zero(const FieldElement& a) const;

    /// Multiplicative order of a nonzero element.
    Int element_order(const FieldElement& a) const;

    /// The element of multiplicative order p^k - 1 that is smallest in the
    /// canonical (base-p integer) element order.
    FieldElement primitive_element() const;

    /// Discrete logarithm table with respect to a primitive element theta:
    /// table[to_int(theta^a)] = a for a in [0, p^k - 2]; the slot for the
    /// zero element holds -1.
    std::vector<Int> discrete_log_table(const FieldElement& theta) const;

   private:
    FiniteField(Int p, Int k, Vec modulus, Int size)
        : p_(p), k_(k), modulus_(std::move(modulus)), size_(size) {}

    Int p_ = 0;
    Int k_ = 0;
    Vec modulus_;
    Int size_ = 0;
};

}  // namespace msc
