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

#include "msc/sidon.hpp"

#include <algorithm>
#include <unordered_set>

#include "msc/core.hpp"

namespace msc {

namespace {

// All multiset sums of size 0..h over the given nonzero elements, visited
// as (size, sum). Returns false as soon as two distinct multisets share a
// sum.
bool all_small_sums_distinct(const AbelianGroup& G, const std::vector<GroupElement>& nz, Int h) {
    std::unordered_set<Int> seen;
    bool ok = true;
    // DFS over non-decreasing index tuples, carrying the running sum.
    std::function<void(std::size_t, Int, const GroupElement&)> rec =
        [&](std::size_t start, Int depth, const GroupElement& sum) {
            if (!ok) return;
            if (!seen.insert(G.index_of(sum)).second) {
                ok = false;
                return;
            }
            if (depth == h) return;
            for (std::size_t i = start; i < nz.size(); ++i) rec(i, depth + 1, G.add(sum, nz[i]));
        };
    rec(0, 0, G.zero());
    return ok;
}

}  // namespace

bool verify_bh(const AbelianGroup& G, const std::vector<GroupElement>& B, Int h) {
    if (B.empty()) throw std::invalid_argument("verify_bh: empty set");
    if (h < 1) throw std::invalid_argument("verify_bh: need h >= 1");
    for (const auto& b : B) G.require(b);
    // Translate so the first element becomes 0.
    GroupElement shift = G.neg(B[0]);
    std::vector<GroupElement> nz;
    nz.reserve(B.size() - 1);
    std::unordered_set<Int> distinct;
    for (const auto& b : B) {
        GroupElement t = G.add(b, shift);
        if (!distinct.insert(G.index_of(t)).second) return false;  // repeated element
        if (G.index_of(t) != 0) nz.push_back(t);
    }
    return all_small_sums_distinct(G, nz, h);
}

namespace {

SidonSet projective_line_set(Int m, Int h, const Budget& budget) {
    auto pp = prime_power(m);
    if (!pp) throw std::invalid_argument("construction requires a prime-power parameter");
    auto [p, e] = *pp;
    FiniteField F = FiniteField::make(p, e * (h + 1), budget);
    Int v = (F.size() - 1) / (m - 1);  // = m^h + ... + m + 1
    FieldElement theta = F.primitive_element();
    std::vector<Int> logs = F.discrete_log_table(theta);

    // The m-element subfield: fixed points of x -> x^m.
    std::vector<FieldElement> sub;
    for (Int i = 0; i < F.size(); ++i) {
        FieldElement x = F.from_int(i);
        if (F.to_int(F.pow(x, m)) == i) sub.push_back(x);
    }
    if (static_cast<Int>(sub.size()) != m) throw std::logic_error("subfield extraction failed");

    std::vector<Int> residues;
    for (const auto& c0 : sub)
        for (const auto& c1 : sub) {
            FieldElement x = F.add(c0, F.mul(c1, theta));
            if (F.is_zero(x)) continue;
            residues.push_back(logs[static_cast<std::size_t>(F.to_int(x))] % v);
        }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    if (static_cast<Int>(residues.size()) != m + 1)
        throw std::logic_error("projective line produced wrong set size");

    AbelianGroup G({v});
    SidonSet S;
    S.group = G;
    S.h = h;
    for (Int r : residues) S.elements.push_back({r});
    if (!verify_bh(G, S.elements, h)) throw std::logic_error("constructed set failed verification");
    return S;
}

}  // namespace

SidonSet singer(Int m, const Budget& budget) { return projective_line_set(m, 2, budget); }

SidonSet singer_type(Int m, Int h, const Budget& budget) {
    if (h < 1) throw std::invalid_argument("singer_type: need h >= 1");
    return projective_line_set(m, h, budget);
}

SidonSet bose_chowla(Int q, Int h, const Budget& budget) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("bose_chowla: q must be a prime power");
    if (h < 2)
        throw std::invalid_argument(
            "bose_chowla: need h >= 2 (a set of q elements cannot fit in Z_{q-1})");
    auto [p, e] = *pp;
    FiniteField F = FiniteField::make(p, e * h, budget);
    Int v = F.size() - 1;
    FieldElement theta = F.primitive_element();
    std::vector<Int> logs = F.discrete_log_table(theta);

    std::vector<FieldElement> sub;  // the q-element subfield
    for (Int i = 0; i < F.size(); ++i) {
        FieldElement x = F.from_int(i);
        if (F.to_int(F.pow(x, q)) == i) sub.push_back(x);
    }
    if (static_cast<Int>(sub.size()) != q) throw std::logic_error("subfield extraction failed");

    std::vector<Int> raw;
    for (const auto& a : sub) {
        FieldElement x = F.add(theta, a);
        if (F.is_zero(x)) throw std::logic_error("theta + a vanished; theta not primitive?");
        raw.push_back(logs[static_cast<std::size_t>(F.to_int(x))]);
    }
    // Translate so 0 is in the set (theta + 0 has log 1).
    Int b0 = raw[0];
    std::vector<Int> residues;
    for (Int r : raw) residues.push_back(((r - b0) % v + v) % v);
    std::sort(residues.begin(), residues.end());

    AbelianGroup G({v});
    SidonSet S;
    S.group = G;
    S.h = h;
    for (Int r : residues) S.elements.push_back({r});
    if (!verify_bh(G, S.elements, h)) throw std::logic_error("constructed set failed verification");
    return S;
}

// ---------------------------------------------------------------------------
// Exhaustive search.

namespace {

struct SearchState {
    const AbelianGroup& G;
    Int target_size;
    Int h;
    BudgetTicker ticker;
    std::vector<char> seen;            // sums already taken, indexed by element index
    std::vector<std::vector<Int>> by_size;  // sums grouped by multiset size
    std::vector<Int> chosen;           // element indices, ascending
    bool exhausted = false;

    SearchState(const AbelianGroup& g, Int size, Int order, const Budget& b)
        : G(g), target_size(size), h(0), ticker(b), seen(static_cast<std::size_t>(order), 0) {}
};

struct Extension {
    std::vector<Int> marked;                  // newly taken sum indices
    std::vector<std::vector<Int>> per_size;   // the same sums grouped by multiset size
};

// Adds candidate element index c: every recorded sum of size u gains
// extensions by j copies of c for u + j <= h. Fails (rolling back the seen
// marks) as soon as an extended sum collides with any sum taken so far.
std::optional<Extension> try_extend(SearchState& st, Int c) {
    Extension ext;
    ext.per_size.resize(st.by_size.size());
    GroupElement ce = st.G.element_at(c);
    bool ok = true;
    for (Int u = 0; u + 1 <= st.h && ok; ++u) {
        for (Int base : st.by_size[static_cast<std::size_t>(u)]) {
            GroupElement sum = st.G.element_at(base);
            for (Int j = 1; u + j <= st.h; ++j) {
                sum = st.G.add(sum, ce);
                Int idx = st.G.index_of(sum);
                if (st.seen[static_cast<std::size_t>(idx)]) {
                    ok = false;
                    break;
                }
                st.seen[static_cast<std::size_t>(idx)] = 1;
                ext.marked.push_back(idx);
                ext.per_size[static_cast<std::size_t>(u + j)].push_back(idx);
            }
            if (!ok) break;
        }
    }
    if (!ok) {
        for (Int idx : ext.marked) st.seen[static_cast<std::size_t>(idx)] = 0;
        return std::nullopt;
    }
    return ext;
}

bool dfs(SearchState& st, Int next_candidate) {
    if (static_cast<Int>(st.chosen.size()) == st.target_size) return true;
    Int order = st.G.order();
    Int remaining = st.target_size - static_cast<Int>(st.chosen.size());
    for (Int c = next_candidate; c <= order - remaining; ++c) {
        if (!st.ticker.tick()) {
            st.exhausted = true;
            return false;
        }
        auto ext = try_extend(st, c);
        if (!ext) continue;
        for (std::size_t u = 0; u < st.by_size.size(); ++u)
            for (Int s : ext->per_size[u]) st.by_size[u].push_back(s);
        st.chosen.push_back(c);
        if (dfs(st, c + 1)) return true;
        st.chosen.pop_back();
        for (std::size_t u = 0; u < st.by_size.size(); ++u)
            st.by_size[u].resize(st.by_size[u].size() - ext->per_size[u].size());
        for (Int idx : ext->marked) st.seen[static_cast<std::size_t>(idx)] = 0;
        if (st.exhausted) return false;
    }
    return false;
}

}  // namespace

SearchOutcome search_bh(const AbelianGroup& G, Int size, Int h, const Budget& budget) {
    if (size < 1 || h < 1) throw std::invalid_argument("search_bh: need size >= 1, h >= 1");
    Int order = G.order();
    if (order > budget.max_group_order) throw BudgetExceeded("group order exceeds budget");
    SearchOutcome out;
    if (size > order) {
        out.status = SearchStatus::absent;
        return out;
    }
    SearchState st(G, size, order, budget);
    st.h = h;
    st.by_size.assign(static_cast<std::size_t>(h + 1), {});
    st.by_size[0].push_back(0);  // the empty sum
    st.seen[0] = 1;
    st.chosen.push_back(0);  // normalized: 0 is always in the set
    bool found = (size == 1) ? true : dfs(st, 1);
    out.nodes = st.ticker.nodes();
    if (found) {
        SidonSet S;
        S.group = G;
        S.h = h;
        for (Int c : st.chosen) S.elements.push_back(G.element_at(c));
        out.witness = std::move(S);
        out.status = SearchStatus::found;
    } else {
        out.status = st.exhausted ? SearchStatus::budget_exhausted : SearchStatus::absent;
    }
    return out;
}

// ---------------------------------------------------------------------------
// phi(h, q) bounds.

PhiBounds phi_bounds(Int h, Int q, const Budget& budget) {
    if (h < 1 || q < 2) throw std::invalid_argument("phi_bounds: need h >= 1, q >= 2");
    PhiBounds pb;
    pb.h = h;
    pb.q = q;
    pb.lower = anticode_size({q - 1, (h + 1) / 2, h / 2});
    pb.lower_method = "anticode";

    if (h == 1) {
        // Any group of order q is itself a B_1 set of cardinality q.
        pb.upper = q;
        pb.upper_method = "whole-group";
        pb.exact = q;
        pb.sweep_complete = true;
        return pb;
    }

    // Best applicable construction: projective-line (order (q-1)^{h+1}-1
    // over q-2... i.e. v = ((q-1)^{h+1}-1)/(q-2)) and Bose-Chowla
    // (order q^h - 1), whichever is smaller.
    std::optional<Int> upper;
    std::string method;
    if (prime_power(q - 1) && q >= 3) {
        try {
            SidonSet s = singer_type(q - 1, h, budget);
            Int v = s.group.order();
            if (!upper || v < *upper) {
                upper = v;
                method = "projective-line";
            }
        } catch (const BudgetExceeded&) {
        }
    }
    if (prime_power(q)) {
        try {
            SidonSet s = bose_chowla(q, h, budget);
            Int v = s.group.order();
            if (!upper || v < *upper) {
                upper = v;
                method = "bose-chowla";
            }
        } catch (const BudgetExceeded&) {
        }
    }
    if (!upper) {
        // Fall back to a padded Bose-Chowla set: a B_h set of cardinality
        // q' > q contains one of cardinality q. Take the smallest
        // applicable prime power above q.
        for (Int qq = q + 1;; ++qq) {
            if (!prime_power(qq)) continue;
            try {
                SidonSet s = bose_chowla(qq, h, budget);
                s.elements.resize(static_cast<std::size_t>(q));
                upper = s.group.order();
                method = "bose-chowla-truncated";
            } catch (const BudgetExceeded&) {
            }
            break;
        }
    }
    if (!upper) throw BudgetExceeded("no construction fits in the field budget");
    pb.upper = *upper;
    pb.upper_method = method;

    // Exhaustive sweep: smallest order in [lower, upper] admitting a B_h
    // set of cardinality q, over all Abelian groups of each order.
    bool complete = true;
    for (Int v = pb.lower; v <= pb.upper && complete; ++v) {
        for (const AbelianGroup& G : abelian_groups_of_order(v)) {
            SearchOutcome so = search_bh(G, q, h, budget);
            if (so.status == SearchStatus::found) {
                pb.exact = v;
                break;
            }
            if (so.status == SearchStatus::budget_exhausted) {
                complete = false;
                break;
            }
        }
        if (pb.exact) break;
    }
    pb.sweep_complete = complete;
    if (!complete) pb.exact.reset();
    return pb;
}

}  // namespace msc
