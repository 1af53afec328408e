#include <doctest.h>

#include <set>

#include "msc/altconstr.hpp"
#include "msc/channel.hpp"
#include "msc/codes.hpp"

using namespace msc;

namespace {

// All sub-multisets of the given size, as index lists into `roots`.
void deletion_patterns(std::size_t n, Int t, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<Int>(cur.size()) == t) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

TEST_SUITE("altconstr") {

TEST_CASE("parity inner code example") {
    IndexedCodeParams params;
    params.q_tilde = 5;
    params.n = 3;
    params.inner = make_parity_code(5, 3);
    auto cw = seq_encode(params, {1, 2});
    REQUIRE(cw.size() == 3);
    CHECK(cw[0] == IndexedSymbol{1, 1});
    CHECK(cw[1] == IndexedSymbol{2, 2});
    CHECK(cw[2] == IndexedSymbol{3, 2});  // parity -(1+2) mod 5 = 2

    // drop the third packet: parity restores it
    auto received = cw;
    received.erase(received.begin() + 2);
    CHECK(seq_decode(params, received) == Vec{1, 2});

    // all elements are pairwise distinct by construction
    std::set<IndexedSymbol> distinct(cw.begin(), cw.end());
    CHECK(distinct.size() == cw.size());
}

TEST_CASE("identity inner code (h = 0)") {
    IndexedCodeParams params = IndexedCodeParams::with_default_inner(4, 3, 0);
    auto cw = seq_encode(params, {3, 1, 2});
    CHECK(cw.size() == 3);
    CHECK(seq_decode(params, cw) == Vec{3, 1, 2});
}

TEST_CASE("reed-solomon inner code: exhaustive erasure recovery") {
    for (Int h = 1; h <= 2; ++h) {
        IndexedCodeParams params = IndexedCodeParams::with_default_inner(5, 4, h);
        REQUIRE(params.inner->min_hamming_distance() == h + 1);
        REQUIRE(params.inner->alphabet() == 5);
        Int k = params.inner->dimension();
        // all messages over GF(5)
        std::vector<Vec> messages;
        Vec msg(static_cast<std::size_t>(k), 0);
        for (;;) {
            messages.push_back(msg);
            std::size_t i = 0;
            while (i < msg.size() && ++msg[i] == 5) msg[i++] = 0;
            if (i == msg.size()) break;
        }
        for (const Vec& message : messages) {
            auto cw = seq_encode(params, message);
            for (Int t = 0; t <= h; ++t) {
                std::vector<std::vector<std::size_t>> patterns;
                deletion_patterns(cw.size(), t, patterns);
                for (const auto& pattern : patterns) {
                    std::vector<IndexedSymbol> received;
                    for (std::size_t i = 0; i < cw.size(); ++i)
                        if (std::find(pattern.begin(), pattern.end(), i) == pattern.end())
                            received.push_back(cw[i]);
                    CHECK(seq_decode(params, received) == message);
                }
            }
        }
    }
}

TEST_CASE("seq construction as a multiset code: channel oracle confirms h deletions") {
    // Flatten indexed symbols onto the alphabet {0, ..., n*q~ - 1} and run
    // the independent reachable-output oracle on the resulting code.
    for (Int h = 1; h <= 2; ++h) {
        Int q_tilde = 3, n = 4;
        IndexedCodeParams params = IndexedCodeParams::with_default_inner(q_tilde, n, h);
        Int k = params.inner->dimension();
        Int flat_alphabet = n * q_tilde;
        std::vector<MultiplicityVector> words;
        Vec msg(static_cast<std::size_t>(k), 0);
        for (;;) {
            Vec counts(static_cast<std::size_t>(flat_alphabet), 0);
            for (auto& [idx, sym] : seq_encode(params, msg))
                ++counts[static_cast<std::size_t>((idx - 1) * q_tilde + sym % q_tilde)];
            words.emplace_back(MultiplicityVector{counts});
            std::size_t i = 0;
            while (i < msg.size() && ++msg[i] == params.inner->alphabet()) msg[i++] = 0;
            if (i == msg.size()) break;
        }
        ExplicitCode code = ExplicitCode::from_words(flat_alphabet, n, std::move(words));
        CHECK(verify_correction_capability(code, {0, h, 0, 0}));
        CHECK(min_distance(code) > h);
    }
}

TEST_CASE("seq_decode failure modes") {
    IndexedCodeParams params = IndexedCodeParams::with_default_inner(5, 4, 1);
    auto cw = seq_encode(params, {1, 2, 3});
    auto two_missing = cw;
    two_missing.resize(2);
    CHECK_THROWS_AS(seq_decode(params, two_missing), std::invalid_argument);
    auto dup = cw;
    dup[1] = dup[0];
    CHECK_THROWS_AS(seq_decode(params, dup), std::invalid_argument);
}

TEST_CASE("rate comparison") {
    RateComparison rc = compare_rates(1 + 1, 8, 1);  // q~ = 2
    CHECK(rc.seq_upper > 0);
    CHECK(rc.multiset_upper > 0);
    CHECK(rc.rate_gap_bound == doctest::Approx((1 + 2) * std::log2(1 + 0.5)));
    double prev = compare_rates(2, 8, 1).rate_gap_bound;
    for (Int qt : {4, 8}) {
        double g = compare_rates(qt, 8, 1).rate_gap_bound;
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("field polynomial helpers") {
    FiniteField F3 = FiniteField::make(3, 1);
    // (x + 1)(x + 2) = x^2 + 2 over GF(3)
    FieldPoly a{F3.from_int(1), F3.one()};
    FieldPoly b{F3.from_int(2), F3.one()};
    FieldPoly prod = poly_mul(F3, a, b);
    REQUIRE(prod.size() == 3);
    CHECK(F3.to_int(prod[0]) == 2);
    CHECK(F3.to_int(prod[1]) == 0);
    CHECK(F3.to_int(prod[2]) == 1);
    auto [q, r] = poly_divmod_monic(F3, prod, a);
    CHECK(r.empty());
    REQUIRE(q.size() == 2);
    CHECK(F3.to_int(q[0]) == 2);

    auto factors = factor_poly(F3, prod);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].second == 1);
    CHECK(factors[1].second == 1);
}

TEST_CASE("factorization: multiplicities and an irreducible remainder") {
    FiniteField F2 = FiniteField::make(2, 1);
    // x^4 + x^2 = x^2 (x+1)^2 over GF(2)
    FieldPoly f{F2.zero(), F2.zero(), F2.one(), F2.zero(), F2.one()};
    auto factors = factor_poly(F2, f);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].second == 2);
    CHECK(factors[1].second == 2);

    // x^2 + x + 1 stays whole
    FieldPoly g{F2.one(), F2.one(), F2.one()};
    auto gf = factor_poly(F2, g);
    REQUIRE(gf.size() == 1);
    CHECK(gf[0].second == 1);
    CHECK(gf[0].first.size() == 3);
}

TEST_CASE("subfield embedding is a field homomorphism") {
    for (auto [p, ksmall, kbig] :
         {std::tuple<Int, Int, Int>{2, 2, 4}, {2, 2, 6}, {3, 1, 2}, {2, 3, 6}}) {
        FiniteField small = FiniteField::make(p, ksmall);
        FiniteField big = FiniteField::make(p, kbig);
        auto map = subfield_embedding(small, big);
        CHECK(map[0] == 0);
        CHECK(map[static_cast<std::size_t>(small.to_int(small.one()))] == big.to_int(big.one()));
        for (Int a = 0; a < small.size(); ++a)
            for (Int b = 0; b < small.size(); ++b) {
                FieldElement ea = small.from_int(a), eb = small.from_int(b);
                CHECK(map[static_cast<std::size_t>(small.to_int(small.add(ea, eb)))] ==
                      big.to_int(big.add(big.from_int(map[static_cast<std::size_t>(a)]),
                                         big.from_int(map[static_cast<std::size_t>(b)]))));
                CHECK(map[static_cast<std::size_t>(small.to_int(small.mul(ea, eb)))] ==
                      big.to_int(big.mul(big.from_int(map[static_cast<std::size_t>(a)]),
                                         big.from_int(map[static_cast<std::size_t>(b)]))));
            }
    }
}

TEST_CASE("vieta encode: worked examples over GF(3)") {
    PolyCodeParams params{3, 1, 2, 1};
    FiniteField F3 = FiniteField::make(3, 1);

    // s_0 = 2: x^2 + 2 = (x-1)(x-2), roots {1, 2} in the base field
    VietaCodeword cw = vieta_encode(params, {F3.from_int(2)});
    CHECK(cw.field.k() == 1);
    REQUIRE(cw.roots.size() == 2);
    CHECK(cw.field.to_int(cw.roots[0]) == 1);
    CHECK(cw.field.to_int(cw.roots[1]) == 2);

    // s_0 = 0: double root at zero
    VietaCodeword zero = vieta_encode(params, {F3.zero()});
    REQUIRE(zero.roots.size() == 2);
    CHECK(zero.field.is_zero(zero.roots[0]));
    CHECK(zero.field.is_zero(zero.roots[1]));

    // s_0 = 1: x^2 + 1 irreducible; conjugate pair in GF(9)
    VietaCodeword conj = vieta_encode(params, {F3.one()});
    CHECK(conj.field.size() == 9);
    REQUIRE(conj.roots.size() == 2);
    CHECK(conj.field.to_int(conj.roots[0]) != conj.field.to_int(conj.roots[1]));
    // both roots satisfy x^2 + 1 = 0
    for (const auto& r : conj.roots)
        CHECK(conj.field.is_zero(conj.field.add(conj.field.mul(r, r), conj.field.one())));
}

TEST_CASE("vieta decode: hand-solved single deletion") {
    PolyCodeParams params{3, 1, 2, 1};
    FiniteField F3 = FiniteField::make(3, 1);
    // transmit s_0 = 2 -> roots {1, 2}; receive only {2}
    auto coeffs = vieta_decode(params, F3, {F3.from_int(2)});
    REQUIRE(coeffs.size() == 1);
    CHECK(F3.to_int(coeffs[0]) == 2);
}

TEST_CASE("vieta roundtrip: exhaustive over messages and deletion patterns") {
    struct Case {
        Int p, m;
    };
    for (auto [p, m] : {Case{2, 1}, Case{3, 1}, Case{2, 2}}) {
        FiniteField base = FiniteField::make(p, m);
        Int Q = base.size();
        for (Int n = 2; n <= 4; ++n)
            for (Int h = 1; h <= std::min<Int>(2, n - 1); ++h) {
                PolyCodeParams params{p, m, n, h};
                Int k = n - h;
                // enumerate all Q^k messages
                std::vector<std::vector<FieldElement>> messages;
                Vec digits(static_cast<std::size_t>(k), 0);
                for (;;) {
                    std::vector<FieldElement> msg;
                    for (Int d : digits) msg.push_back(base.from_int(d));
                    messages.push_back(std::move(msg));
                    std::size_t i = 0;
                    while (i < digits.size() && ++digits[i] == Q) digits[i++] = 0;
                    if (i == digits.size()) break;
                }
                CHECK(static_cast<Int>(messages.size()) == ipow_checked(Q, k));

                std::set<std::vector<Int>> codewords;  // cardinality check
                for (const auto& message : messages) {
                    VietaCodeword cw = vieta_encode(params, message);
                    REQUIRE(static_cast<Int>(cw.roots.size()) == n);
                    std::vector<Int> key{cw.field.size()};
                    for (const auto& r : cw.roots) key.push_back(cw.field.to_int(r));
                    codewords.insert(key);
                    for (Int t = 0; t <= h; ++t) {
                        std::vector<std::vector<std::size_t>> patterns;
                        deletion_patterns(cw.roots.size(), t, patterns);
                        for (const auto& pattern : patterns) {
                            std::vector<FieldElement> kept;
                            for (std::size_t i = 0; i < cw.roots.size(); ++i)
                                if (std::find(pattern.begin(), pattern.end(), i) == pattern.end())
                                    kept.push_back(cw.roots[i]);
                            auto decoded = vieta_decode(params, cw.field, kept);
                            REQUIRE(decoded.size() == message.size());
                            for (std::size_t i = 0; i < decoded.size(); ++i)
                                CHECK(decoded[i] == message[i]);
                        }
                    }
                }
                CHECK(static_cast<Int>(codewords.size()) == ipow_checked(Q, k));
            }
    }
}

TEST_CASE("vieta decode rejects out-of-range and unsplittable inputs") {
    PolyCodeParams params{3, 1, 3, 1};
    FiniteField F3 = FiniteField::make(3, 1);
    CHECK_THROWS_AS(vieta_decode(params, F3, {F3.one()}), std::invalid_argument);  // t = 2 > h
}

}  // TEST_SUITE
