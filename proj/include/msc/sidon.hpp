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

#include "msc/groups.hpp"

namespace msc {

/// A B_h (Sidon) set of order h in a finite Abelian group, normalized so
/// that elements[0] is the identity: all sums of at most h elements drawn
/// with repetition from elements[1..] are pairwise distinct.
struct SidonSet {
    AbelianGroup group;
    std::vector<GroupElement> elements;
    Int h = 1;

    Int size() const { return static_cast<Int>(elements.size()); }
};

/// Checks the B_h property. The set is first translated so that its first
/// element becomes 0 (the property is translation invariant), then all
/// multiset sums of size 0..h over the nonzero elements are tested for
/// pairwise distinctness.
bool verify_bh(const AbelianGroup& G, const std::vector<GroupElement>& B, Int h);

/// Singer construction: a B_2 set of cardinality m+1 in Z_{m^2+m+1}, for m
/// a prime power. Realized as the discrete logarithms, modulo
/// v = (m^3-1)/(m-1), of the nonzero points of the plane spanned by
/// {1, theta} over the m-element subfield of GF(m^3), theta primitive.
SidonSet singer(Int m, const Budget& budget = {});

/// Projective-line construction for general order h (reduces to singer()
/// at h = 2): a B_h set of cardinality m+1 in Z_v, v = (m^{h+1}-1)/(m-1),
/// for m a prime power.
SidonSet singer_type(Int m, Int h, const Budget& budget = {});

/// Bose-Chowla construction: a B_h set of cardinality q in Z_{q^h - 1},
/// for q a prime power and h >= 2. Realized as { dlog(theta + a) : a in
/// GF(q) } inside GF(q^h), translated so that 0 belongs to the set.
SidonSet bose_chowla(Int q, Int h, const Budget& budget = {});

enum class SearchStatus { found, absent, budget_exhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::absent;
    std::optional<SidonSet> witness;
    std::uint64_t nodes = 0;
};

/// Exhaustive depth-first search for a B_h set of the requested size
/// containing 0, over candidates in increasing element-index order with
/// incremental sum-collision pruning. Absence is proven only when the
/// search space is exhausted within budget.
SearchOutcome search_bh(const AbelianGroup& G, Int size, Int h, const Budget& budget = {});

/// Bounds on phi(h, q), the order of the smallest Abelian group containing
/// a B_h set of cardinality q.
struct PhiBounds {
    Int h = 0, q = 0;
    Int lower = 0;  // anticode size beta(h, q); always valid
    Int upper = 0;  // order of the best known construction
    std::optional<Int> exact;
    std::string lower_method;
    std::string upper_method;
    bool sweep_complete = false;  // exhaustive sweep of [lower, upper] finished
};

/// Computes beta(h, q) as the lower bound, the best applicable
/// construction as the upper bound, and, within budget, sweeps every
/// Abelian group of every order in [lower, upper] to certify the exact
/// value.
PhiBounds phi_bounds(Int h, Int q, const Budget& budget = {});

}  // namespace msc
