// Acceptance suite: one self-contained scenario per criterion, each printing
// a single [PASS]/[FAIL] line with its runtime against the allowed limit.
// The process exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "msc/altconstr.hpp"
#include "msc/bounds.hpp"
#include "msc/channel.hpp"
#include "msc/codes.hpp"
#include "msc/lattices.hpp"

using namespace msc;

namespace {

struct Checker {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    }
    void note(const std::string& text) { notes.push_back(text); }
};

struct Criterion {
    int id;
    std::string name;
    double limit_ms;
    std::function<void(Checker&)> run;
};

SidonSet make_set(AbelianGroup G, std::vector<GroupElement> elems, Int h) {
    SidonSet S;
    S.group = std::move(G);
    S.elements = std::move(elems);
    S.h = h;
    return S;
}

ExplicitCode random_code(Rng& rng, Int q, Int n, Int max_words) {
    auto simplex = enumerate_simplex(q, n);
    Int want = std::min<Int>(max_words, static_cast<Int>(simplex.size()));
    Int count = rng.range(2, std::max<Int>(2, want));
    std::set<std::size_t> picked;
    while (static_cast<Int>(picked.size()) < count)
        picked.insert(static_cast<std::size_t>(rng.below(simplex.size())));
    std::vector<MultiplicityVector> words;
    for (std::size_t i : picked) words.push_back(simplex[i]);
    return ExplicitCode::from_words(q, n, std::move(words));
}

// ---------------------------------------------------------------------------

void criterion01(Checker& c) {  // running example: B_3 set in Z2 x Z6
    AbelianGroup G({2, 6});
    std::vector<GroupElement> B = {{0, 0}, {1, 1}, {0, 5}};
    c.expect(verify_bh(G, B, 3), "verify_bh(Z2xZ6, {(0,0),(1,1),(0,5)}, 3) == true");
    IntegerLattice L = lattice_from_sidon(make_set(G, B, 3));
    c.expect(L.determinant() == 12, "lattice determinant == 12");
    TilingVerdict v = tiling_check({2, 2, 1}, L);
    c.expect(v.is_packing && v.is_tiling, "S_2(2,1) tiles by the derived lattice");
    c.expect(min_distance_da(L).value == 4, "lattice minimum distance == 4");
}

void criterion02(Checker& c) {  // planar difference set {0,1,3,9} in Z13
    AbelianGroup Z13({13});
    std::vector<GroupElement> B = {{0}, {1}, {3}, {9}};
    c.expect(verify_bh(Z13, B, 2), "verify_bh(Z13, {0,1,3,9}, 2) == true");
    IntegerLattice L = lattice_from_sidon(make_set(Z13, B, 2));
    c.expect(L.dim() == 3, "induced lattice lives in Z^3");
    c.expect(L.determinant() == 13, "lattice determinant == 13");
    TilingVerdict v = tiling_check({3, 1, 1}, L);
    c.expect(v.is_packing && v.is_tiling, "S_3(1,1) tiles (1-perfect code)");
}

void criterion03(Checker& c) {  // closed-form anticode size vs enumeration
    int cases = 0;
    for (Int m = 1; m <= 7; ++m)
        for (Int rp = 0; rp <= 4; ++rp)
            for (Int rm = 0; rm <= 4; ++rm) {
                ++cases;
                Int closed = anticode_size({m, rp, rm});
                Int enumerated = static_cast<Int>(anticode_members({m, rp, rm}).size());
                if (closed != enumerated) {
                    std::ostringstream os;
                    os << "size mismatch at m=" << m << " r+=" << rp << " r-=" << rm << ": "
                       << closed << " vs " << enumerated;
                    c.expect(false, os.str());
                }
            }
    c.expect(cases == 175, "covered 175 parameter cases");
}

void criterion04(Checker& c) {  // deletion-correction oracle == distance criterion
    Rng rng(40404);
    for (int trial = 0; trial < 200; ++trial) {
        Int q = rng.range(2, 4);
        Int n = rng.range(2, 6);
        ExplicitCode code = random_code(rng, q, n, 6);
        for (Int h = 1; h <= 3; ++h) {
            bool oracle = verify_correction_capability(code, {0, h, 0, 0});
            bool metric = min_distance(code) > h;
            if (oracle != metric) {
                std::ostringstream os;
                os << "disagreement at trial " << trial << " h=" << h;
                c.expect(false, os.str());
            }
        }
    }
}

void criterion05(Checker& c) {  // all budget splits are equivalent
    Rng rng(50505);
    auto splits_for = [](Int h) {
        std::vector<ErrorPattern> out;
        for (Int s = 0; 2 * s <= h; ++s)
            for (Int d = 0; d <= h - 2 * s; ++d) out.push_back({h - 2 * s - d, d, s, 0});
        out.push_back({0, 0, 0, h});  // erasure variant
        return out;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Int q = rng.range(2, 3);
        Int n = rng.range(2, 4);
        ExplicitCode code = random_code(rng, q, n, 4);
        for (Int h = 1; h <= 3; ++h) {
            bool pure = verify_correction_capability(code, {0, h, 0, 0});
            for (const ErrorPattern& p : splits_for(h)) {
                if (verify_correction_capability(code, p) != pure) {
                    std::ostringstream os;
                    os << "split (" << p.ins << "," << p.del << "," << p.sub << "," << p.ers
                       << ") disagrees with " << h << " deletions at trial " << trial;
                    c.expect(false, os.str());
                }
            }
        }
    }
}

void criterion06(Checker& c) {  // isometry between (A_m, d1) and (Z^m, da)
    Rng rng(60606);
    for (int trial = 0; trial < 10000; ++trial) {
        Int m = rng.range(1, 6);
        Vec x(static_cast<std::size_t>(m + 1)), y(static_cast<std::size_t>(m + 1));
        Int sx = 0, sy = 0;
        for (Int i = 1; i <= m; ++i) {
            x[static_cast<std::size_t>(i)] = rng.range(-10, 10);
            y[static_cast<std::size_t>(i)] = rng.range(-10, 10);
            sx += x[static_cast<std::size_t>(i)];
            sy += y[static_cast<std::size_t>(i)];
        }
        x[0] = -sx;
        y[0] = -sy;
        Int l1 = 0;
        for (std::size_t i = 0; i < x.size(); ++i) l1 += std::abs(x[i] - y[i]);
        if (l1 % 2 != 0 || l1 / 2 != da(drop_coordinate(x), drop_coordinate(y))) {
            c.expect(false, "d1 != da after dropping coordinate 0");
            return;
        }
    }
}

void criterion07(Checker& c) {  // binary alphabet: exact sizes + asymptotic sanity
    for (Int h = 1; h <= 4; ++h)
        for (Int n = 1; n <= 20; ++n) {
            Int got = exact_optimal_size(2, n, h).size;
            Int want = n / (h + 1) + 1;
            if (got != want) {
                std::ostringstream os;
                os << "M_2(" << n << "," << h << ") = " << got << ", expected " << want;
                c.expect(false, os.str());
            }
        }
    // Asymptotic sanity at n = 20 against the n/(h+1) envelope. The exact
    // value sits at 1 + (h+1)/n times the envelope, so the 15% tolerance
    // is satisfiable only for h <= 2 at this length; the larger h are
    // reported as notes and fully covered by the exact check above.
    for (Int h = 1; h <= 4; ++h) {
        double envelope = 20.0 / (h + 1);
        double ratio = static_cast<double>(exact_optimal_size(2, 20, h).size) / envelope;
        std::ostringstream os;
        os << "ratio at n=20, h=" << h << ": " << std::fixed << std::setprecision(3) << ratio;
        c.note(os.str());
        if (h <= 2) {
            std::ostringstream msg;
            msg << "ratio " << ratio << " within 15% of 1 at h=" << h;
            c.expect(std::abs(ratio - 1.0) <= 0.15, msg.str());
        }
    }
}

void criterion08(Checker& c) {  // bound sandwich at (q=3, n=3, h=1)
    PhiBounds phi = phi_bounds(1, 3);
    c.expect(phi.exact && *phi.exact == 3, "phi(1, 3) == 3");
    BoundReport rep = fixed_alphabet_bounds(3, 3, 1, phi);
    Int exact = exact_optimal_size(3, 3, 1).size;
    Rat eq27 = growing_alphabet_upper(3, 3, 1, 0, 1);
    c.expect(rep.lower == 4, "coset lower bound == 4");
    c.expect(exact == 4, "exact optimum == 4");
    c.expect(eq27 == Rat(5), "nonzero-coordinate upper bound == 5");
    c.expect(rep.upper == 12, "anticode+boundary upper bound == 12");
    c.expect(BigInt(exact) >= rep.lower && Rat(exact) <= eq27 && eq27 <= Rat(rep.upper),
             "sandwich 4 <= 4 <= 5 <= 12 holds");
    c.note("anticode+boundary upper bound evaluates to floor(10/3 + 9) = 12");
}

void criterion09(Checker& c) {  // ternary asymptotics via the Z7 planar set
    SidonSet S = singer(2);  // B_2 set of size 3 in Z7
    c.expect(S.group.order() == 7, "singer(2) lives in Z7");
    Int n = 500;
    auto [b, size] = best_coset(S.group, S.elements, n);
    double target = 500.0 * 500.0 / 14.0;
    double rel = std::abs(static_cast<double>(size) / target - 1.0);
    std::ostringstream os;
    os << "best coset size " << size << " vs n^2/14 = " << std::fixed << std::setprecision(1)
       << target << " (rel err " << std::setprecision(4) << rel << ")";
    c.note(os.str());
    c.expect(rel <= 0.05, "best coset size within 5% of n^2/14");
    (void)b;
}

void criterion10(Checker& c) {  // exhaustive syndrome decoding
    std::vector<SidonCodeParams> cases;
    {
        SidonCodeParams z7;
        z7.sidon = make_set(AbelianGroup({7}), {{0}, {1}, {3}}, 2);
        z7.coset = {0};
        z7.n = 7;
        cases.push_back(z7);
        for (Int h = 1; h <= 4; ++h)
            for (Int n = h + 1; n <= 8; ++n) {
                SidonCodeParams bin;
                bin.sidon = make_set(AbelianGroup({h + 1}), {{0}, {1}}, h);
                bin.coset = {0};
                bin.n = n;
                cases.push_back(bin);
            }
    }
    for (const auto& params : cases) {
        SyndromeDecoder dec(params);
        ExplicitCode code = build_sidon_code(params);
        for (const auto& w : code.words) {
            for (Int t = 0; t <= params.sidon.h; ++t) {
                std::function<void(std::size_t, Int, Vec&)> rec = [&](std::size_t pos, Int rem,
                                                                      Vec& cur) {
                    if (pos == cur.size()) {
                        if (rem != 0) return;
                        DecodeResult res = dec.decode(MultiplicityVector{cur});
                        if (!(res.codeword == w) || res.cost != t)
                            c.expect(false, "syndrome decode failed to restore a codeword");
                        return;
                    }
                    for (Int d = 0; d <= std::min(rem, w.counts[pos]); ++d) {
                        cur[pos] = w.counts[pos] - d;
                        rec(pos + 1, rem - d, cur);
                    }
                    cur[pos] = w.counts[pos];
                };
                Vec cur = w.counts;
                rec(0, t, cur);
            }
        }
    }
}

void criterion11(Checker& c) {  // constructions pass the checker
    for (auto [q, h] :
         std::vector<std::pair<Int, Int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        SidonSet S = bose_chowla(q, h);
        std::ostringstream os;
        os << "bose_chowla(" << q << "," << h << ") verifies";
        c.expect(verify_bh(S.group, S.elements, h) && S.size() == q, os.str());
    }
    for (Int m : {2, 3, 4, 5}) {
        SidonSet S = singer(m);
        std::ostringstream os;
        os << "singer(" << m << ") verifies";
        c.expect(verify_bh(S.group, S.elements, 2) && S.size() == m + 1, os.str());
    }
}

void criterion12(Checker& c) {  // exact phi certificates via exhaustive sweep
    PhiBounds p33 = phi_bounds(3, 3);
    c.expect(p33.exact && *p33.exact == 12, "phi(3,3) == 12");
    c.expect(p33.lower == 12, "phi(3,3) meets the anticode lower bound");

    PhiBounds p24 = phi_bounds(2, 4);
    c.expect(p24.exact && *p24.exact == 13, "phi(2,4) == 13");
    c.expect(p24.lower == 13, "phi(2,4) meets the anticode lower bound");

    for (Int q = 2; q <= 6; ++q) {
        PhiBounds p1 = phi_bounds(1, q);
        std::ostringstream os;
        os << "phi(1," << q << ") == " << q << " == beta";
        c.expect(p1.exact && *p1.exact == q && p1.lower == q, os.str());
    }
}

void criterion13(Checker& c) {  // volume lemma, exact rational comparisons
    Rat ratio = vol_conv(2, 50) / Rat(vol_cube(2, 50));
    c.expect(ratio >= Rat(975, 1000), "vol ratio >= 0.975");
    c.expect(ratio < Rat(1), "vol ratio < 1");
    c.expect(vol_conv(2, 2) == Rat(12), "vol_conv(2, 2) == 12");
    c.note("ratio = 7500/7651");
}

void criterion14(Checker& c) {  // Stirling form vs exact binomial
    for (Int n : {50, 100, 200}) {
        double approx = stirling_binomial_approx(Rat(1), n);
        double exact = static_cast<double>(binom_big(2 * n - 1, n - 1));
        double rel = std::abs(approx / exact - 1.0);
        std::ostringstream os;
        os << "n=" << n << " rel err " << std::scientific << std::setprecision(2) << rel;
        c.note(os.str());
        c.expect(rel < 0.01, "approximation within 1% at n=" + std::to_string(n));
    }
}

void criterion15(Checker& c) {  // polynomial-root codes: exhaustive roundtrip
    struct Base {
        Int p, m;
    };
    for (auto [p, m] : {Base{2, 1}, Base{3, 1}, Base{2, 2}}) {
        FiniteField base = FiniteField::make(p, m);
        Int Q = base.size();
        for (Int n = 2; n <= 4; ++n)
            for (Int h = 1; h <= std::min<Int>(2, n - 1); ++h) {
                PolyCodeParams params{p, m, n, h};
                Int k = n - h;
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
                std::set<std::vector<Int>> codewords;
                for (const auto& message : messages) {
                    VietaCodeword cw = vieta_encode(params, message);
                    std::vector<Int> key{cw.field.size()};
                    for (const auto& r : cw.roots) key.push_back(cw.field.to_int(r));
                    codewords.insert(key);
                    std::vector<std::size_t> pattern;
                    std::function<void(std::size_t, Int)> rec = [&](std::size_t start, Int t) {
                        if (t == 0) {
                            std::vector<FieldElement> kept;
                            for (std::size_t i = 0; i < cw.roots.size(); ++i)
                                if (std::find(pattern.begin(), pattern.end(), i) == pattern.end())
                                    kept.push_back(cw.roots[i]);
                            auto decoded = vieta_decode(params, cw.field, kept);
                            bool same = decoded.size() == message.size();
                            for (std::size_t i = 0; same && i < decoded.size(); ++i)
                                same = decoded[i] == message[i];
                            if (!same) c.expect(false, "vieta roundtrip mismatch");
                            return;
                        }
                        for (std::size_t i = start; i < cw.roots.size(); ++i) {
                            pattern.push_back(i);
                            rec(i + 1, t - 1);
                            pattern.pop_back();
                        }
                    };
                    for (Int t = 0; t <= h; ++t) rec(0, t);
                }
                std::ostringstream os;
                os << "cardinality Q^(n-h) at Q=" << Q << " n=" << n << " h=" << h;
                c.expect(static_cast<Int>(codewords.size()) == ipow_checked(Q, n - h), os.str());
            }
    }
}

void criterion16(Checker& c) {  // sequence-number prefixes with an RS inner code
    for (Int h = 1; h <= 2; ++h) {
        IndexedCodeParams params = IndexedCodeParams::with_default_inner(5, 4, h);
        c.expect(params.inner->min_hamming_distance() == h + 1, "inner distance h+1");
        Int k = params.inner->dimension();
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
            std::vector<std::size_t> pattern;
            std::function<void(std::size_t, Int)> rec = [&](std::size_t start, Int t) {
                if (t == 0) {
                    std::vector<IndexedSymbol> received;
                    for (std::size_t i = 0; i < cw.size(); ++i)
                        if (std::find(pattern.begin(), pattern.end(), i) == pattern.end())
                            received.push_back(cw[i]);
                    if (seq_decode(params, received) != message)
                        c.expect(false, "seq roundtrip mismatch");
                    return;
                }
                for (std::size_t i = start; i < cw.size(); ++i) {
                    pattern.push_back(i);
                    rec(i + 1, t - 1);
                    pattern.pop_back();
                }
            };
            for (Int t = 0; t <= h; ++t) rec(0, t);
        }
        Rat constructed(static_cast<Int>(messages.size()));
        Rat ceiling = seq_prefix_bound(5, 4, h);
        std::ostringstream os;
        os << "constructed size " << messages.size() << " <= sphere-packing ceiling at h=" << h;
        c.expect(constructed <= ceiling, os.str());
    }
    c.expect(rate_gap(1.0) == 2.0, "rate_gap(1) == 2");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "running-example-Z2xZ6", 1000, criterion01},
        {2, "planar-difference-set-Z13", 1000, criterion02},
        {3, "anticode-size-closed-form-vs-enumeration", 10000, criterion03},
        {4, "deletion-oracle-vs-distance", 60000, criterion04},
        {5, "budget-split-equivalence", 120000, criterion05},
        {6, "simplex-isometry", 5000, criterion06},
        {7, "binary-exact-optimal-sizes", 10000, criterion07},
        {8, "bound-sandwich-q3-n3-h1", 5000, criterion08},
        {9, "ternary-asymptotic-ratio", 30000, criterion09},
        {10, "exhaustive-syndrome-decoding", 30000, criterion10},
        {11, "construction-verification-grid", 60000, criterion11},
        {12, "phi-exact-certificates", 300000, criterion12},
        {13, "volume-lemma", 1000, criterion13},
        {14, "stirling-binomial", 1000, criterion14},
        {15, "vieta-roundtrip", 60000, criterion15},
        {16, "sequence-prefix-roundtrip", 10000, criterion16},
    };

    int failed = 0;
    for (const auto& crit : criteria) {
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            crit.run(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        if (ms > crit.limit_ms)
            checker.failures.push_back("time limit exceeded: " + std::to_string(ms) + " ms");
        bool pass = checker.failures.empty();
        if (!pass) ++failed;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << std::setfill('0')
                  << crit.id << std::setfill(' ') << " " << std::left << std::setw(44)
                  << crit.name << std::right << std::fixed << std::setprecision(0) << std::setw(7)
                  << ms << " ms  (limit " << crit.limit_ms << " ms)\n";
        for (const auto& n : checker.notes) std::cout << "        note: " << n << "\n";
        for (const auto& f : checker.failures) std::cout << "        failed: " << f << "\n";
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failed))
              << "\n";
    return failed;
}
