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

#include "msc/channel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "msc/codes.hpp"

namespace msc {

Int ChannelOutput::cardinality() const {
    Int n = erasures;
    for (Int c : counts) n = checked_add(n, c);
    return n;
}

namespace {

void require_feasible(const MultiplicityVector& x, const ErrorPattern& p) {
    if (p.ins < 0 || p.del < 0 || p.sub < 0 || p.ers < 0)
        throw std::invalid_argument("error pattern counts must be >= 0");
    if (p.del + p.sub + p.ers > x.length())
        throw std::invalid_argument("pattern removes more symbols than the multiset holds");
}

// Draws one element (a symbol index weighted by multiplicity) from counts.
std::size_t draw_element(Rng& rng, const Vec& counts, Int total) {
    Int t = static_cast<Int>(rng.below(static_cast<std::uint64_t>(total)));
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (t < counts[i]) return i;
        t -= counts[i];
    }
    throw std::logic_error("draw_element: empty multiset");
}

// Visits every sub-multiset of the bounded counts with the given total, as
// a count vector.
template <typename F>
void for_each_submultiset(const Vec& bounds, Int total, F&& f) {
    Vec pick(bounds.size(), 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t pos, Int rem) {
        if (pos == bounds.size()) {
            if (rem == 0) f(const_cast<const Vec&>(pick));
            return;
        }
        Int lo = 0;
        // feasibility pruning: remaining positions must absorb rem
        for (Int v = lo; v <= std::min(bounds[pos], rem); ++v) {
            pick[pos] = v;
            rec(pos + 1, rem - v);
        }
        pick[pos] = 0;
    };
    rec(0, total);
}

}  // namespace

ChannelOutput apply_pattern(const MultiplicityVector& x, const ErrorPattern& p,
                            std::uint64_t seed) {
    require_feasible(x, p);
    Rng rng(seed);
    Vec cur = x.counts;
    Int remaining = x.length();
    Int q = x.alphabet();

    ChannelOutput out;
    // erasures: remove from the multiset, remember only the count
    for (Int i = 0; i < p.ers; ++i) {
        std::size_t s = draw_element(rng, cur, remaining);
        --cur[s];
        --remaining;
    }
    out.erasures = p.ers;
    // deletions
    for (Int i = 0; i < p.del; ++i) {
        std::size_t s = draw_element(rng, cur, remaining);
        --cur[s];
        --remaining;
    }
    // substitutions: pick the s replaced elements from the surviving
    // originals first, then add the replacement symbols (a replacement is
    // never substituted again)
    Vec replacements(static_cast<std::size_t>(q), 0);
    for (Int i = 0; i < p.sub; ++i) {
        std::size_t s = draw_element(rng, cur, remaining);
        --cur[s];
        --remaining;
        std::size_t t = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(q - 1)));
        if (t >= s) ++t;
        ++replacements[t];
    }
    for (std::size_t i = 0; i < replacements.size(); ++i) cur[i] += replacements[i];
    // insertions: uniform symbols
    for (Int i = 0; i < p.ins; ++i)
        ++cur[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(q)))];

    out.counts = std::move(cur);
    return out;
}

namespace {

// Replacement multisets for a substituted sub-multiset f: each of the f[i]
// replaced copies of symbol i independently becomes some symbol != i.
// Visits the achievable replacement count-vectors.
template <typename F>
void for_each_replacement(const Vec& f, Int q, F&& emit) {
    Vec repl(static_cast<std::size_t>(q), 0);
    std::function<void(std::size_t)> rec_sym = [&](std::size_t sym) {
        if (sym == f.size()) {
            emit(const_cast<const Vec&>(repl));
            return;
        }
        if (f[sym] == 0) {
            rec_sym(sym + 1);
            return;
        }
        // distribute f[sym] replacements over symbols != sym
        std::function<void(std::size_t, Int)> rec_dist = [&](std::size_t pos, Int rem) {
            if (pos == static_cast<std::size_t>(q)) {
                if (rem == 0) rec_sym(sym + 1);
                return;
            }
            if (pos == sym) {
                rec_dist(pos + 1, rem);
                return;
            }
            for (Int v = 0; v <= rem; ++v) {
                repl[pos] += v;
                rec_dist(pos + 1, rem - v);
                repl[pos] -= v;
            }
        };
        rec_dist(0, f[sym]);
    };
    rec_sym(0);
}

}  // namespace

std::vector<ChannelOutput> enumerate_outputs(const MultiplicityVector& x, const ErrorPattern& p,
                                             const Budget& budget) {
    require_feasible(x, p);
    Int q = x.alphabet();
    if (q < 2 && (p.sub > 0 || p.ins > 0))
        throw std::invalid_argument("substitutions/insertions need an alphabet of size >= 2");
    std::set<ChannelOutput> outputs;
    auto guard = [&]() {
        if (outputs.size() > budget.max_outputs)
            throw BudgetExceeded("enumerate_outputs: too many channel outputs");
    };

    // erased sub-multiset (only its size is observable), then deletions,
    // then substitutions with replacements, then insertions
    for_each_submultiset(x.counts, p.ers, [&](const Vec& e) {
        Vec after_e = x.counts;
        for (std::size_t i = 0; i < after_e.size(); ++i) after_e[i] -= e[i];
        for_each_submultiset(after_e, p.del, [&](const Vec& d) {
            Vec after_d = after_e;
            for (std::size_t i = 0; i < after_d.size(); ++i) after_d[i] -= d[i];
            for_each_submultiset(after_d, p.sub, [&](const Vec& f) {
                Vec after_f = after_d;
                for (std::size_t i = 0; i < after_f.size(); ++i) after_f[i] -= f[i];
                for_each_replacement(f, q, [&](const Vec& r) {
                    Vec base = after_f;
                    for (std::size_t i = 0; i < base.size(); ++i) base[i] += r[i];
                    Vec nobound(static_cast<std::size_t>(q), p.ins);
                    for_each_submultiset(nobound, p.ins, [&](const Vec& ins) {
                        Vec result = base;
                        for (std::size_t i = 0; i < result.size(); ++i) result[i] += ins[i];
                        outputs.insert(ChannelOutput{std::move(result), p.ers});
                        guard();
                    });
                });
            });
        });
    });
    return std::vector<ChannelOutput>(outputs.begin(), outputs.end());
}

bool confusable(const MultiplicityVector& x, const MultiplicityVector& y, const ErrorPattern& p,
                const Budget& budget) {
    if (x.alphabet() != y.alphabet())
        throw std::invalid_argument("confusable: alphabet mismatch");
    std::vector<ChannelOutput> ox = enumerate_outputs(x, p, budget);
    std::vector<ChannelOutput> oy = enumerate_outputs(y, p, budget);
    std::vector<ChannelOutput> common;
    std::set_intersection(ox.begin(), ox.end(), oy.begin(), oy.end(), std::back_inserter(common));
    return !common.empty();
}

namespace {

// Union of reachable outputs over all impairment counts at most p.
std::set<ChannelOutput> reachable_up_to(const MultiplicityVector& x, const ErrorPattern& p,
                                        const Budget& budget) {
    std::set<ChannelOutput> all;
    for (Int e = 0; e <= p.ers; ++e)
        for (Int d = 0; d <= p.del; ++d)
            for (Int s = 0; s <= p.sub; ++s) {
                if (e + d + s > x.length()) continue;
                for (Int i = 0; i <= p.ins; ++i) {
                    auto outs = enumerate_outputs(x, {i, d, s, e}, budget);
                    all.insert(outs.begin(), outs.end());
                    if (all.size() > budget.max_outputs)
                        throw BudgetExceeded("reachable_up_to: too many outputs");
                }
            }
    return all;
}

}  // namespace

bool verify_correction_capability(const ExplicitCode& code, const ErrorPattern& p,
                                  const Budget& budget) {
    const auto& words = code.words;
    if (words.size() < 2) throw std::invalid_argument("verify_correction_capability: need >= 2 codewords");

    if (p.ins == 0 && p.sub == 0 && p.ers == 0) {
        // Pure deletions: correcting up to h equals correcting exactly
        // min(h, n), so one exact-count pass per codeword suffices.
        Int t = std::min(p.del, code.n);
        std::map<ChannelOutput, std::size_t> owner;
        for (std::size_t w = 0; w < words.size(); ++w) {
            for (auto& out : enumerate_outputs(words[w], {0, t, 0, 0}, budget)) {
                auto [it, inserted] = owner.try_emplace(out, w);
                if (!inserted && it->second != w) return false;
            }
        }
        return true;
    }

    std::map<ChannelOutput, std::size_t> owner;
    for (std::size_t w = 0; w < words.size(); ++w) {
        for (auto& out : reachable_up_to(words[w], p, budget)) {
            auto [it, inserted] = owner.try_emplace(out, w);
            if (!inserted && it->second != w) return false;
        }
    }
    return true;
}

bool verify_detection_capability(const ExplicitCode& code, Int h_sub, const Budget& budget) {
    const auto& words = code.words;
    if (words.size() < 2) throw std::invalid_argument("verify_detection_capability: need >= 2 codewords");
    std::set<Vec> codeword_set;
    for (const auto& w : words) codeword_set.insert(w.counts);
    for (const auto& w : words) {
        for (Int s = 1; s <= std::min(h_sub, code.n); ++s) {
            for (auto& out : enumerate_outputs(w, {0, 0, s, 0}, budget)) {
                if (out.counts != w.counts && codeword_set.count(out.counts)) return false;
            }
        }
    }
    return true;
}

}  // namespace msc
