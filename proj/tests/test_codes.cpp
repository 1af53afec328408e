#include <doctest.h>

#include <set>

#include "msc/codes.hpp"

using namespace msc;

namespace {

MultiplicityVector mv(Vec v) { return MultiplicityVector{std::move(v)}; }

SidonCodeParams z7_params(Int n) {
    SidonCodeParams params;
    params.sidon.group = AbelianGroup({7});
    params.sidon.elements = {{0}, {1}, {3}};
    params.sidon.h = 2;
    params.coset = {0};
    params.n = n;
    return params;
}

SidonCodeParams binary_params(Int h, Int n) {  // B = {0, 1} in Z_{h+1}
    SidonCodeParams params;
    params.sidon.group = AbelianGroup({h + 1});
    params.sidon.elements = {{0}, {1}};
    params.sidon.h = h;
    params.coset = {0};
    params.n = n;
    return params;
}

// Brute-force maximum independent set for cross-checking the solver.
Int brute_mis(const std::vector<MultiplicityVector>& verts, Int h) {
    std::size_t n = verts.size();
    REQUIRE(n <= 22);
    Int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> j & 1) && d1(verts[i], verts[j]) <= h) ok = false;
        }
        if (ok) best = std::max<Int>(best, __builtin_popcountll(mask));
    }
    return best;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("build_sidon_code: Z7 example") {
    ExplicitCode code = build_sidon_code(z7_params(7));
    CHECK(code.contains(mv({7, 0, 0})));
    CHECK(code.contains(mv({0, 7, 0})));
    CHECK(min_distance(code) >= 3);
}

TEST_CASE("coset codes partition the simplex") {
    SidonCodeParams params = z7_params(7);
    const AbelianGroup& G = params.sidon.group;
    std::set<Vec> all;
    Int total = 0;
    for (Int b = 0; b < G.order(); ++b) {
        params.coset = G.element_at(b);
        ExplicitCode code = build_sidon_code(params);  // every coset here is non-degenerate
        total += static_cast<Int>(code.words.size());
        for (const auto& w : code.words) CHECK(all.insert(w.counts).second);  // disjoint
    }
    CHECK(total == 36);  // |simplex| = C(9, 2)
}

TEST_CASE("binary family: size floor(n/(h+1)) + 1") {
    for (Int h = 1; h <= 4; ++h)
        for (Int n = h + 1; n <= 12; ++n) {
            ExplicitCode code = build_sidon_code(binary_params(h, n));
            CHECK(static_cast<Int>(code.words.size()) == n / (h + 1) + 1);
            CHECK(min_distance(code) > h);
        }
    CHECK_THROWS_AS(build_sidon_code(binary_params(3, 2)), DegenerateCodeError);
}

TEST_CASE("min distance examples") {
    ExplicitCode two = ExplicitCode::from_words(2, 3, {mv({0, 3}), mv({3, 0})});
    CHECK(min_distance(two) == 3);
    ExplicitCode four = ExplicitCode::from_words(
        3, 3, {mv({3, 0, 0}), mv({0, 3, 0}), mv({0, 0, 3}), mv({1, 1, 1})});
    CHECK(min_distance(four) == 2);
}

TEST_CASE("capability predicates") {
    ExplicitCode code = ExplicitCode::from_words(2, 6, {mv({0, 6}), mv({3, 3}), mv({6, 0})});
    CHECK(min_distance(code) == 3);
    CHECK(can_correct_deletions(code, 2));
    CHECK_FALSE(can_correct_deletions(code, 3));
    CHECK(can_detect_substitutions(code, 2));
    CHECK_FALSE(can_detect_substitutions(code, 3));
    CHECK(can_correct_deletions(code, 0));
}

TEST_CASE("syndrome decoding: worked examples") {
    SyndromeDecoder dec(z7_params(7));
    DecodeResult r1 = dec.decode(mv({5, 0, 0}));
    CHECK(r1.codeword == mv({7, 0, 0}));
    CHECK(r1.cost == 2);
    CHECK(r1.unique);

    DecodeResult r2 = dec.decode(mv({0, 6, 0}));
    CHECK(r2.codeword == mv({0, 7, 0}));
    CHECK(r2.cost == 1);

    // with one deletion from (4,1,2): syndrome identifies the lost symbol
    DecodeResult r3 = dec.decode(mv({4, 1, 1}));
    CHECK(r3.codeword == mv({4, 1, 2}));
    CHECK(r3.cost == 1);

    // same received counts at n = 8 resolve to a two-symbol repair
    SyndromeDecoder dec8(z7_params(8));
    DecodeResult r4 = dec8.decode(mv({4, 1, 1}));
    CHECK(r4.codeword == mv({5, 1, 2}));
    CHECK(r4.cost == 2);

    CHECK_THROWS_AS(dec.decode(mv({2, 0, 0})), DecodeError);  // too short
}

TEST_CASE("syndrome decoding: exhaustive over all deletion patterns") {
    std::vector<SidonCodeParams> cases = {z7_params(7), z7_params(8), binary_params(2, 7),
                                          binary_params(3, 8)};
    for (const auto& params : cases) {
        SyndromeDecoder dec(params);
        ExplicitCode code = build_sidon_code(params);
        Int h = params.sidon.h;
        for (const auto& w : code.words) {
            for (Int t = 0; t <= h; ++t) {
                // all deletion patterns of size t
                std::function<void(std::size_t, Int, Vec)> rec = [&](std::size_t pos, Int rem, Vec cur) {
                    if (pos == cur.size()) {
                        if (rem != 0) return;
                        MultiplicityVector received{cur};
                        DecodeResult res = dec.decode(received);
                        CHECK(res.codeword == w);
                        CHECK(res.cost == t);
                        return;
                    }
                    for (Int d = 0; d <= std::min(rem, w.counts[pos]); ++d) {
                        Vec next = cur;
                        next[pos] = w.counts[pos] - d;
                        rec(pos + 1, rem - d, next);
                    }
                };
                rec(0, t, Vec(w.counts.size(), 0));
            }
        }
    }
}

TEST_CASE("nearest decoding") {
    ExplicitCode code = ExplicitCode::from_words(2, 6, {mv({0, 6}), mv({3, 3}), mv({6, 0})});

    DecodeResult same = nearest_decode(code, {Vec{0, 6}, 0});
    CHECK(same.codeword == mv({0, 6}));
    CHECK(same.cost == 0);
    CHECK(same.unique);

    // one '0'-insertion plus one '1'-deletion from (0,6)
    DecodeResult mixed = nearest_decode(code, {Vec{1, 5}, 0});
    CHECK(mixed.codeword == mv({0, 6}));
    CHECK(mixed.cost == 2);
    CHECK(mixed.unique);

    // a substitution is one deletion plus one insertion
    DecodeResult sub = nearest_decode(code, {Vec{1, 5}, 0});
    CHECK(sub.cost == 2);

    // budget exceeded: (1,4) is cost 3 from both (0,6) and (3,3)
    DecodeResult tie = nearest_decode(code, {Vec{1, 4}, 0});
    CHECK(tie.cost == 3);
    CHECK_FALSE(tie.unique);

    // erasures act as deletions
    DecodeResult ers = nearest_decode(code, {Vec{0, 4}, 2});
    CHECK(ers.codeword == mv({0, 6}));
    CHECK(ers.cost == 2);
}

TEST_CASE("nearest equals syndrome on pure deletions") {
    SidonCodeParams params = z7_params(7);
    SyndromeDecoder dec(params);
    ExplicitCode code = build_sidon_code(params);
    Rng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiplicityVector& w =
            code.words[static_cast<std::size_t>(rng.below(code.words.size()))];
        Int t = rng.range(0, params.sidon.h);
        Vec cur = w.counts;
        Int remaining = w.length();
        bool feasible = true;
        for (Int i = 0; i < t; ++i) {
            if (remaining == 0) {
                feasible = false;
                break;
            }
            Int pickpos = rng.range(0, remaining - 1);
            for (std::size_t s = 0; s < cur.size(); ++s) {
                if (pickpos < cur[s]) {
                    --cur[s];
                    --remaining;
                    break;
                }
                pickpos -= cur[s];
            }
        }
        if (!feasible) continue;
        MultiplicityVector received{cur};
        DecodeResult a = dec.decode(received);
        DecodeResult b = nearest_decode(code, {cur, 0});
        CHECK(a.codeword == b.codeword);
        CHECK(a.codeword == w);
        CHECK(a.cost == b.cost);
    }
}

TEST_CASE("exact optimal size: corollary values and oracle cross-check") {
    CHECK(exact_optimal_size(2, 6, 2).size == 3);
    OptimalCodeResult r = exact_optimal_size(3, 3, 1);
    CHECK(r.size == 4);
    CHECK(r.exact);
    // witness validity
    for (std::size_t i = 0; i < r.witness.size(); ++i)
        for (std::size_t j = i + 1; j < r.witness.size(); ++j)
            CHECK(d1(r.witness[i], r.witness[j]) > 1);

    CHECK(exact_optimal_size(3, 2, 0).size == 6);  // whole simplex at h = 0

    for (Int n : {3, 4, 5}) {
        auto verts = enumerate_simplex(3, n);
        for (Int h = 1; h <= 3; ++h)
            CHECK(exact_optimal_size(3, n, h).size == brute_mis(verts, h));
    }
    for (Int n = 1; n <= 20; ++n)
        for (Int h = 1; h <= 4; ++h)
            CHECK(exact_optimal_size(2, n, h).size == n / (h + 1) + 1);
}

TEST_CASE("exact optimal size respects budget") {
    Budget tiny;
    tiny.max_nodes = 1;
    OptimalCodeResult r = exact_optimal_size(3, 6, 1, tiny);
    CHECK_FALSE(r.exact);
    CHECK(r.size >= 1);  // greedy seed still reported
}

TEST_CASE("best coset") {
    AbelianGroup Z7({7});
    std::vector<GroupElement> B = {{0}, {1}, {3}};
    auto [b, size] = best_coset(Z7, B, 7);
    CHECK(size >= (36 + 6) / 7);  // ceil(36/7) = 6

    // the winning coset really is the largest
    for (Int i = 0; i < 7; ++i) {
        SidonCodeParams params = z7_params(7);
        params.coset = Z7.element_at(i);
        CHECK(static_cast<Int>(build_sidon_code(params).words.size()) <= size);
    }

    // binary family: best coset is the zero coset with floor(n/(h+1)) + 1
    for (Int h = 1; h <= 3; ++h) {
        AbelianGroup G({h + 1});
        auto [bb, ss] = best_coset(G, {{0}, {1}}, 9);
        CHECK(ss == 9 / (h + 1) + 1);
    }
}

TEST_CASE("rank encode / decode") {
    ExplicitCode code = build_sidon_code(z7_params(7));
    CHECK(rank_encode(code, 0) == code.words.front());
    for (Int i = 0; i < static_cast<Int>(code.words.size()); ++i)
        CHECK(rank_decode(code, rank_encode(code, i)) == i);
    CHECK_THROWS_AS(rank_encode(code, static_cast<Int>(code.words.size())), std::out_of_range);
    CHECK_THROWS_AS(rank_decode(code, mv({1, 0, 6})), std::invalid_argument);
}

}  // TEST_SUITE
