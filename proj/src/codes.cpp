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

#include "msc/codes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace msc {

namespace {

// sum_i x_i * b_i in G
GroupElement weighted_sum(const AbelianGroup& G, const std::vector<GroupElement>& B, const Vec& x) {
    GroupElement acc = G.zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) acc = G.add(acc, G.scalar_mul(x[i], B[i]));
    return acc;
}

}  // namespace

ExplicitCode ExplicitCode::from_words(Int q, Int n, std::vector<MultiplicityVector> words) {
    if (words.size() < 2) throw DegenerateCodeError("a multiset code needs at least two codewords");
    for (const auto& w : words) {
        if (w.alphabet() != q) throw std::invalid_argument("codeword alphabet mismatch");
        if (w.length() != n) throw std::invalid_argument("codeword length mismatch");
    }
    std::sort(words.begin(), words.end(),
              [](const MultiplicityVector& a, const MultiplicityVector& b) {
                  return colex_less(a.counts, b.counts);
              });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() < 2) throw DegenerateCodeError("a multiset code needs at least two codewords");
    ExplicitCode code;
    code.q = q;
    code.n = n;
    code.words = std::move(words);
    return code;
}

bool ExplicitCode::contains(const MultiplicityVector& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w,
                               [](const MultiplicityVector& a, const MultiplicityVector& b) {
                                   return colex_less(a.counts, b.counts);
                               });
    return it != words.end() && *it == w;
}

ExplicitCode build_sidon_code(const SidonCodeParams& params) {
    const AbelianGroup& G = params.sidon.group;
    G.require(params.coset);
    if (params.n < 1) throw std::invalid_argument("build_sidon_code: need n >= 1");
    Int q = params.q();
    if (q < 2) throw std::invalid_argument("build_sidon_code: need q >= 2");
    std::vector<MultiplicityVector> words;
    for_each_simplex(q, params.n, [&](const Vec& x) {
        if (weighted_sum(G, params.sidon.elements, x) == params.coset)
            words.emplace_back(MultiplicityVector{x});
    });
    if (words.size() < 2)
        throw DegenerateCodeError("coset code is degenerate (" + std::to_string(words.size()) +
                                  " codeword(s))");
    return ExplicitCode::from_words(q, params.n, std::move(words));
}

Int min_distance(const ExplicitCode& code) {
    if (code.cached_min_distance_) return *code.cached_min_distance_;
    if (code.words.size() < 2) throw DegenerateCodeError("minimum distance needs >= 2 codewords");
    Int best = std::numeric_limits<Int>::max();
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            best = std::min(best, d1(code.words[i], code.words[j]));
    code.cached_min_distance_ = best;
    return best;
}

bool can_correct_deletions(const ExplicitCode& code, Int h) { return min_distance(code) > h; }

bool can_detect_substitutions(const ExplicitCode& code, Int h) { return min_distance(code) > h; }

// ---------------------------------------------------------------------------
// Syndrome decoding.

SyndromeDecoder::SyndromeDecoder(SidonCodeParams params) : params_(std::move(params)) {
    const AbelianGroup& G = params_.sidon.group;
    G.require(params_.coset);
    if (!verify_bh(G, params_.sidon.elements, params_.sidon.h))
        throw std::invalid_argument("SyndromeDecoder: set fails B_h verification");
    Int q = params_.q();
    Int h = params_.sidon.h;
    table_.resize(static_cast<std::size_t>(h) + 1);
    // Key the deleted sub-multiset's group sum per deficit t. Within one t
    // the keys are distinct by the B_h property; across t the deficit is
    // known from the received length, so no ambiguity arises.
    for (Int t = 0; t <= h; ++t) {
        for_each_composition(q, t, [&](const Vec& mult) {
            Int key = G.index_of(weighted_sum(G, params_.sidon.elements, mult));
            auto [it, inserted] = table_[static_cast<std::size_t>(t)].emplace(key, mult);
            if (!inserted)
                throw std::logic_error("syndrome collision despite B_h property");
        });
    }
}

DecodeResult SyndromeDecoder::decode(const MultiplicityVector& received) const {
    const AbelianGroup& G = params_.sidon.group;
    if (received.alphabet() != params_.q())
        throw std::invalid_argument("syndrome decode: alphabet mismatch");
    Int t = params_.n - received.length();
    if (t < 0 || t > params_.sidon.h)
        throw DecodeError("received length outside the correctable range");
    GroupElement syndrome =
        G.add(params_.coset, G.neg(weighted_sum(G, params_.sidon.elements, received.counts)));
    const auto& slot = table_[static_cast<std::size_t>(t)];
    auto it = slot.find(G.index_of(syndrome));
    if (it == slot.end())
        throw DecodeError("no deleted sub-multiset matches the syndrome (budget exceeded?)");
    Vec restored = received.counts;
    for (std::size_t i = 0; i < restored.size(); ++i) restored[i] += it->second[i];
    DecodeResult res;
    res.codeword = MultiplicityVector{std::move(restored)};
    res.cost = t;
    res.unique = true;
    return res;
}

DecodeResult syndrome_decode(const SidonCodeParams& params, const MultiplicityVector& received) {
    return SyndromeDecoder(params).decode(received);
}

// ---------------------------------------------------------------------------
// Nearest-codeword decoding.

namespace {

Int transform_cost(const MultiplicityVector& x, const Vec& received_counts) {
    // Deletions from x down to the received counts, plus insertions. The
    // stripped erasure symbols already show up as count deficits, i.e. as
    // deletions, so no separate erasure term is needed.
    Int del = 0, ins = 0;
    for (std::size_t i = 0; i < x.counts.size(); ++i) {
        Int d = x.counts[i] - received_counts[i];
        if (d > 0)
            del += d;
        else
            ins += -d;
    }
    return del + ins;
}

}  // namespace

DecodeResult nearest_decode(const ExplicitCode& code, const ChannelOutput& received) {
    if (static_cast<Int>(received.counts.size()) != code.q)
        throw std::invalid_argument("nearest_decode: alphabet mismatch");
    Int best_cost = std::numeric_limits<Int>::max();
    const MultiplicityVector* best = nullptr;
    bool tie = false;
    for (const auto& w : code.words) {
        Int c = transform_cost(w, received.counts);
        if (c < best_cost) {
            best_cost = c;
            best = &w;
            tie = false;
        } else if (c == best_cost) {
            tie = true;
        }
    }
    DecodeResult res;
    res.codeword = *best;
    res.cost = best_cost;
    res.unique = !tie;
    return res;
}

// ---------------------------------------------------------------------------
// Exact optimal code size: maximum clique on the complement of the
// conflict graph, with greedy coloring bounds.

namespace {

using Bitset = std::vector<std::uint64_t>;

struct CliqueContext {
    std::size_t nverts = 0;
    std::vector<Bitset> adj;  // complement adjacency = "compatible" pairs
    std::vector<std::size_t> best_clique;
    std::vector<std::size_t> current;
    BudgetTicker ticker;
    bool exhausted = false;

    explicit CliqueContext(const Budget& b) : ticker(b) {}

    bool test(const Bitset& s, std::size_t v) const { return (s[v >> 6] >> (v & 63)) & 1; }
    void set(Bitset& s, std::size_t v) const { s[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(Bitset& s, std::size_t v) const { s[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    std::size_t count(const Bitset& s) const {
        std::size_t c = 0;
        for (auto w : s) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
};

// Tomita-style expansion: candidates ordered and colored greedily; a
// branch is cut when current size + color bound cannot beat the best.
void expand(CliqueContext& ctx, std::vector<std::size_t>& cand) {
    if (!ctx.ticker.tick()) {
        ctx.exhausted = true;
        return;
    }
    if (cand.empty()) {
        if (ctx.current.size() > ctx.best_clique.size()) ctx.best_clique = ctx.current;
        return;
    }
    // greedy coloring of candidates
    std::vector<Int> color(cand.size());
    std::vector<Bitset> color_classes;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
        std::size_t v = cand[idx];
        std::size_t cls = 0;
        for (; cls < color_classes.size(); ++cls) {
            // v joins class cls if not adjacent to any member
            bool clash = false;
            const Bitset& members = color_classes[cls];
            for (std::size_t w = 0; w < members.size(); ++w)
                if (members[w] & ctx.adj[v][w]) {
                    clash = true;
                    break;
                }
            if (!clash) break;
        }
        if (cls == color_classes.size())
            color_classes.emplace_back(Bitset((ctx.nverts + 63) / 64, 0));
        ctx.set(color_classes[cls], v);
        color[idx] = static_cast<Int>(cls) + 1;
    }
    // sort candidates by color ascending; process from the back
    std::vector<std::size_t> order(cand.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return color[a] < color[b];
    });
    std::vector<std::size_t> sorted_cand(cand.size());
    std::vector<Int> sorted_color(cand.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted_cand[i] = cand[order[i]];
        sorted_color[i] = color[order[i]];
    }
    for (std::size_t i = sorted_cand.size(); i-- > 0;) {
        if (ctx.exhausted) return;
        if (ctx.current.size() + static_cast<std::size_t>(sorted_color[i]) <= ctx.best_clique.size())
            return;  // color bound
        std::size_t v = sorted_cand[i];
        ctx.current.push_back(v);
        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < i; ++j)
            if (ctx.test(ctx.adj[v], sorted_cand[j])) next.push_back(sorted_cand[j]);
        expand(ctx, next);
        ctx.current.pop_back();
    }
}

}  // namespace

OptimalCodeResult exact_optimal_size(Int q, Int n, Int h, const Budget& budget) {
    if (q < 2 || n < 0 || h < 0) throw std::invalid_argument("exact_optimal_size: bad parameters");
    std::vector<MultiplicityVector> verts = enumerate_simplex(q, n);
    std::size_t N = verts.size();
    if (N > 20000) throw BudgetExceeded("conflict graph too large to materialize");

    OptimalCodeResult out;
    if (h == 0) {  // whole simplex: any two distinct multisets differ
        out.size = static_cast<Int>(N);
        out.exact = true;
        out.witness = verts;
        return out;
    }

    CliqueContext ctx(budget);
    ctx.nverts = N;
    ctx.adj.assign(N, Bitset((N + 63) / 64, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (d1(verts[i], verts[j]) > h) {  // compatible pair
                ctx.set(ctx.adj[i], j);
                ctx.set(ctx.adj[j], i);
            }

    // Greedy seed in colex order.
    std::vector<std::size_t> seed;
    for (std::size_t v = 0; v < N; ++v) {
        bool ok = true;
        for (std::size_t u : seed)
            if (!ctx.test(ctx.adj[u], v)) {
                ok = false;
                break;
            }
        if (ok) seed.push_back(v);
    }
    ctx.best_clique = seed;

    // Root vertex order: decreasing compatibility degree for stable pruning.
    std::vector<std::size_t> cand(N);
    std::iota(cand.begin(), cand.end(), 0);
    std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
        std::size_t da = ctx.count(ctx.adj[a]), db = ctx.count(ctx.adj[b]);
        if (da != db) return da > db;
        return a < b;
    });
    expand(ctx, cand);

    out.size = static_cast<Int>(ctx.best_clique.size());
    out.exact = !ctx.exhausted;
    std::sort(ctx.best_clique.begin(), ctx.best_clique.end());
    for (std::size_t v : ctx.best_clique) out.witness.push_back(verts[v]);
    return out;
}

std::pair<GroupElement, Int> best_coset(const AbelianGroup& G,
                                        const std::vector<GroupElement>& B, Int n) {
    if (B.size() < 2) throw std::invalid_argument("best_coset: need at least two set elements");
    for (const auto& b : B) G.require(b);
    Int q = static_cast<Int>(B.size());
    std::vector<Int> histogram(static_cast<std::size_t>(G.order()), 0);
    // Incremental weighted sums would be possible, but a direct pass is
    // already linear in the simplex size.
    for_each_simplex(q, n, [&](const Vec& x) {
        ++histogram[static_cast<std::size_t>(G.index_of(weighted_sum(G, B, x)))];
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < histogram.size(); ++i)
        if (histogram[i] > histogram[best]) best = i;
    return {G.element_at(static_cast<Int>(best)), histogram[best]};
}

MultiplicityVector rank_encode(const ExplicitCode& code, Int index) {
    if (index < 0 || index >= static_cast<Int>(code.words.size()))
        throw std::out_of_range("rank_encode: index out of range");
    return code.words[static_cast<std::size_t>(index)];
}

Int rank_decode(const ExplicitCode& code, const MultiplicityVector& word) {
    auto it = std::lower_bound(code.words.begin(), code.words.end(), word,
                               [](const MultiplicityVector& a, const MultiplicityVector& b) {
                                   return colex_less(a.counts, b.counts);
                               });
    if (it == code.words.end() || !(*it == word))
        throw std::invalid_argument("rank_decode: not a codeword");
    return static_cast<Int>(it - code.words.begin());
}

}  // namespace msc
