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

#include "msc/altconstr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace msc {

// ---------------------------------------------------------------------------
// Inner block codes.

namespace {

class IdentityCode final : public BlockCode {
   public:
    IdentityCode(Int q, Int n) : q_(q), n_(n) {}
    Int length() const override { return n_; }
    Int dimension() const override { return n_; }
    Int min_hamming_distance() const override { return 1; }
    Int alphabet() const override { return q_; }
    Vec encode(const Vec& message) const override {
        if (static_cast<Int>(message.size()) != n_)
            throw std::invalid_argument("identity code: message length mismatch");
        return message;
    }
    Vec decode_erasures(const std::vector<std::optional<Int>>& received) const override {
        Vec out;
        for (const auto& s : received) {
            if (!s) throw std::invalid_argument("identity code cannot fill erasures");
            out.push_back(*s);
        }
        return out;
    }

   private:
    Int q_, n_;
};

class ParityCode final : public BlockCode {
   public:
    ParityCode(Int q, Int n) : q_(q), n_(n) {
        if (n < 2) throw std::invalid_argument("parity code needs n >= 2");
    }
    Int length() const override { return n_; }
    Int dimension() const override { return n_ - 1; }
    Int min_hamming_distance() const override { return 2; }
    Int alphabet() const override { return q_; }
    Vec encode(const Vec& message) const override {
        if (static_cast<Int>(message.size()) != n_ - 1)
            throw std::invalid_argument("parity code: message length mismatch");
        Vec cw = message;
        Int sum = 0;
        for (Int s : message) sum = (sum + s) % q_;
        cw.push_back((q_ - sum) % q_);
        return cw;
    }
    Vec decode_erasures(const std::vector<std::optional<Int>>& received) const override {
        if (static_cast<Int>(received.size()) != n_)
            throw std::invalid_argument("parity code: length mismatch");
        Int missing = -1, sum = 0;
        for (std::size_t i = 0; i < received.size(); ++i) {
            if (!received[i]) {
                if (missing >= 0) throw std::invalid_argument("parity code: too many erasures");
                missing = static_cast<Int>(i);
            } else {
                sum = (sum + *received[i]) % q_;
            }
        }
        Vec cw(received.size());
        for (std::size_t i = 0; i < received.size(); ++i)
            cw[i] = received[i] ? *received[i] : (q_ - sum) % q_;
        return Vec(cw.begin(), cw.end() - 1);
    }

   private:
    Int q_, n_;
};

class ReedSolomonCode final : public BlockCode {
   public:
    ReedSolomonCode(Int p, Int n, Int d) : p_(p), n_(n), d_(d), k_(n - d + 1) {
        if (!is_prime(p)) throw std::invalid_argument("Reed-Solomon: p must be prime");
        if (n > p) throw std::invalid_argument("Reed-Solomon: length exceeds field size");
        if (d < 1 || d > n) throw std::invalid_argument("Reed-Solomon: bad distance");
    }
    Int length() const override { return n_; }
    Int dimension() const override { return k_; }
    Int min_hamming_distance() const override { return d_; }
    Int alphabet() const override { return p_; }

    Vec encode(const Vec& message) const override {
        if (static_cast<Int>(message.size()) != k_)
            throw std::invalid_argument("Reed-Solomon: message length mismatch");
        Vec cw(static_cast<std::size_t>(n_));
        for (Int x = 0; x < n_; ++x) {
            Int acc = 0;
            for (std::size_t i = message.size(); i-- > 0;)
                acc = (acc * x + ((message[i] % p_) + p_) % p_) % p_;
            cw[static_cast<std::size_t>(x)] = acc;
        }
        return cw;
    }

    Vec decode_erasures(const std::vector<std::optional<Int>>& received) const override {
        if (static_cast<Int>(received.size()) != n_)
            throw std::invalid_argument("Reed-Solomon: length mismatch");
        std::vector<std::pair<Int, Int>> known;  // (x, y)
        for (std::size_t i = 0; i < received.size(); ++i)
            if (received[i]) known.emplace_back(static_cast<Int>(i), *received[i]);
        if (static_cast<Int>(known.size()) < k_)
            throw std::invalid_argument("Reed-Solomon: too many erasures");

        // Interpolate through the first k known points (degree < k), then
        // check the remaining known points for consistency.
        // Newton interpolation in GF(p) through the first k known points.
        Vec poly(static_cast<std::size_t>(k_), 0);  // coefficients, low first
        Vec basis{1};                               // running product (x - x_0)...(x - x_{j-1})
        for (Int j = 0; j < k_; ++j) {
            auto [xj, yj] = known[static_cast<std::size_t>(j)];
            // evaluate current poly at xj
            Int acc = 0;
            for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * xj + poly[i]) % p_;
            Int bx = 0;
            for (std::size_t i = basis.size(); i-- > 0;) bx = (bx * xj + basis[i]) % p_;
            if (bx == 0) throw std::logic_error("Reed-Solomon: repeated evaluation point");
            Int c = ((yj - acc) % p_ + p_) % p_;
            c = (c * mod_inverse(bx)) % p_;
            for (std::size_t i = 0; i < basis.size(); ++i)
                poly[i] = (poly[i] + c * basis[i]) % p_;
            // basis *= (x - xj)
            basis.insert(basis.begin(), 0);
            for (std::size_t i = 0; i + 1 < basis.size(); ++i)
                basis[i] = ((basis[i] - xj * basis[i + 1]) % p_ + p_) % p_;
        }
        for (std::size_t j = static_cast<std::size_t>(k_); j < known.size(); ++j) {
            auto [xj, yj] = known[j];
            Int acc = 0;
            for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * xj + poly[i]) % p_;
            if (acc != yj)
                throw std::invalid_argument("Reed-Solomon: inconsistent symbols (not an erasure-only pattern)");
        }
        return poly;
    }

   private:
    Int mod_inverse(Int a) const {
        Int r = 1, b = ((a % p_) + p_) % p_, e = p_ - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % p_;
            b = (b * b) % p_;
            e >>= 1;
        }
        return r;
    }

    Int p_, n_, d_, k_;
};

}  // namespace

std::shared_ptr<BlockCode> make_identity_code(Int q, Int n) {
    return std::make_shared<IdentityCode>(q, n);
}
std::shared_ptr<BlockCode> make_parity_code(Int q, Int n) {
    return std::make_shared<ParityCode>(q, n);
}
std::shared_ptr<BlockCode> make_reed_solomon_code(Int p, Int n, Int d) {
    return std::make_shared<ReedSolomonCode>(p, n, d);
}

IndexedCodeParams IndexedCodeParams::with_default_inner(Int q_tilde, Int n, Int h) {
    IndexedCodeParams params;
    params.q_tilde = q_tilde;
    params.n = n;
    if (h == 0) {
        params.inner = make_identity_code(q_tilde, n);
        return params;
    }
    Int p = std::max(n, q_tilde);
    while (!is_prime(p)) ++p;
    params.inner = make_reed_solomon_code(p, n, h + 1);
    return params;
}

std::vector<IndexedSymbol> seq_encode(const IndexedCodeParams& params, const Vec& message) {
    if (!params.inner) throw std::invalid_argument("seq_encode: missing inner code");
    Vec cw = params.inner->encode(message);
    std::vector<IndexedSymbol> out;
    out.reserve(cw.size());
    for (std::size_t i = 0; i < cw.size(); ++i)
        out.emplace_back(static_cast<Int>(i) + 1, cw[i]);
    return out;  // already sorted by index; elements pairwise distinct
}

Vec seq_decode(const IndexedCodeParams& params, std::vector<IndexedSymbol> received) {
    if (!params.inner) throw std::invalid_argument("seq_decode: missing inner code");
    Int n = params.inner->length();
    std::vector<std::optional<Int>> slots(static_cast<std::size_t>(n));
    for (const auto& [idx, sym] : received) {
        if (idx < 1 || idx > n) throw std::invalid_argument("seq_decode: index out of range");
        if (slots[static_cast<std::size_t>(idx - 1)])
            throw std::invalid_argument("seq_decode: duplicate index in received multiset");
        slots[static_cast<std::size_t>(idx - 1)] = sym;
    }
    Int missing = 0;
    for (const auto& s : slots)
        if (!s) ++missing;
    if (missing > params.inner->min_hamming_distance() - 1)
        throw std::invalid_argument("seq_decode: more deletions than the inner code can absorb");
    return params.inner->decode_erasures(slots);
}

RateComparison compare_rates(Int q_tilde, Int n, Int h) {
    if (q_tilde < 2 || n < 1 || h < 0) throw std::invalid_argument("compare_rates: bad parameters");
    RateComparison rc;
    rc.seq_upper = seq_prefix_bound(q_tilde, n, h);
    Int q_eff = checked_mul(q_tilde, n);  // effective multiset alphabet
    rc.multiset_upper =
        (h >= 1) ? growing_alphabet_upper(q_eff, n, h, 0, 1) : Rat(binom_big(n + q_eff - 1, q_eff - 1));
    auto log2_rat = [](const Rat& r) {
        double num = static_cast<double>(boost::multiprecision::numerator(r));
        double den = static_cast<double>(boost::multiprecision::denominator(r));
        return std::log2(num) - std::log2(den);
    };
    rc.seq_rate_bits = log2_rat(rc.seq_upper) / static_cast<double>(n);
    rc.multiset_rate_bits = log2_rat(rc.multiset_upper) / static_cast<double>(n);
    rc.rate_gap_bound = rate_gap(static_cast<double>(q_tilde));
    return rc;
}

// ---------------------------------------------------------------------------
// Polynomials over an explicit finite field.

FieldPoly poly_trim(const FiniteField& F, FieldPoly a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
    return a;
}

FieldPoly poly_mul(const FiniteField& F, const FieldPoly& a, const FieldPoly& b) {
    if (a.empty() || b.empty()) return {};
    FieldPoly prod(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    return prod;
}

std::pair<FieldPoly, FieldPoly> poly_divmod_monic(const FiniteField& F, const FieldPoly& a,
                                                  const FieldPoly& b) {
    FieldPoly rem = poly_trim(F, a);
    FieldPoly bb = poly_trim(F, b);
    if (bb.empty()) throw std::invalid_argument("poly_divmod_monic: zero divisor");
    if (F.to_int(bb.back()) != 1) throw std::invalid_argument("poly_divmod_monic: divisor not monic");
    if (rem.size() < bb.size()) return {{}, rem};
    FieldPoly quot(rem.size() - bb.size() + 1, F.zero());
    for (std::size_t shift = rem.size() - bb.size() + 1; shift-- > 0;) {
        if (rem.size() < shift + bb.size()) continue;
        FieldElement c = rem[shift + bb.size() - 1];
        if (F.is_zero(c)) continue;
        quot[shift] = c;
        for (std::size_t i = 0; i < bb.size(); ++i)
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, bb[i]));
    }
    return {poly_trim(F, quot), poly_trim(F, rem)};
}

FieldElement poly_eval(const FiniteField& F, const FieldPoly& a, const FieldElement& x) {
    FieldElement acc = F.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

namespace {

// Monic polynomial of degree d over F whose non-leading coefficients are
// the base-|F| digits of idx.
FieldPoly monic_poly_from_index(const FiniteField& F, Int d, Int idx) {
    FieldPoly g(static_cast<std::size_t>(d) + 1, F.zero());
    for (Int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = F.from_int(idx % F.size());
        idx /= F.size();
    }
    g[static_cast<std::size_t>(d)] = F.one();
    return g;
}

}  // namespace

std::vector<std::pair<FieldPoly, Int>> factor_poly(const FiniteField& F, const FieldPoly& f,
                                                   const Budget& budget) {
    FieldPoly rem = poly_trim(F, f);
    if (rem.empty()) throw std::invalid_argument("factor_poly: zero polynomial");
    if (F.to_int(rem.back()) != 1) throw std::invalid_argument("factor_poly: polynomial not monic");
    std::vector<std::pair<FieldPoly, Int>> factors;
    BudgetTicker ticker(budget);
    // Ascending-degree trial division: when degree d is reached, every
    // factor of degree < d has been stripped, so any degree-d divisor
    // found here is irreducible.
    for (Int d = 1; static_cast<std::size_t>(2 * d) + 1 <= rem.size(); ++d) {
        Int candidates = ipow_checked(F.size(), d);
        for (Int idx = 0; idx < candidates; ++idx) {
            if (!ticker.tick()) throw BudgetExceeded("factor_poly: trial budget exhausted");
            FieldPoly g = monic_poly_from_index(F, d, idx);
            Int mult = 0;
            for (;;) {
                auto [q, r] = poly_divmod_monic(F, rem, g);
                if (!r.empty()) break;
                rem = q;
                ++mult;
            }
            if (mult > 0) factors.emplace_back(std::move(g), mult);
            if (static_cast<std::size_t>(2 * d) + 1 > rem.size()) break;
        }
    }
    if (rem.size() > 1) factors.emplace_back(rem, 1);  // leftover is irreducible
    std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (std::size_t i = a.first.size(); i-- > 0;) {
            Int ai = F.to_int(a.first[i]), bi = F.to_int(b.first[i]);
            if (ai != bi) return ai < bi;
        }
        return false;
    });
    return factors;
}

std::vector<Int> subfield_embedding(const FiniteField& small, const FiniteField& big) {
    if (small.p() != big.p()) throw std::invalid_argument("subfield_embedding: characteristic mismatch");
    if (big.k() % small.k() != 0)
        throw std::invalid_argument("subfield_embedding: small degree must divide big degree");
    // Image of the small generator: the smallest root in the big field of
    // the small modulus (whose coefficients are prime-field constants).
    FieldPoly modulus_in_big;
    for (Int c : small.modulus()) modulus_in_big.push_back(big.from_int(c));
    std::optional<FieldElement> image;
    for (Int i = 0; i < big.size(); ++i) {
        FieldElement x = big.from_int(i);
        if (big.is_zero(poly_eval(big, modulus_in_big, x))) {
            image = x;
            break;
        }
    }
    if (!image) throw std::logic_error("subfield_embedding: modulus has no root in the big field");

    std::vector<Int> map(static_cast<std::size_t>(small.size()));
    for (Int i = 0; i < small.size(); ++i) {
        FieldElement e = small.from_int(i);
        FieldElement acc = big.zero();
        FieldElement power = big.one();
        for (Int j = 0; j < small.k(); ++j) {
            FieldElement coeff = big.from_int(e[static_cast<std::size_t>(j)]);  // prime-field constant
            acc = big.add(acc, big.mul(coeff, power));
            power = big.mul(power, *image);
        }
        map[static_cast<std::size_t>(i)] = big.to_int(acc);
    }
    return map;
}

// ---------------------------------------------------------------------------
// Vieta codes.

namespace {

Int lcm_int(Int a, Int b) { return a / std::gcd(a, b) * b; }

void require_params(const PolyCodeParams& params) {
    if (params.n < 1 || params.h < 0 || params.n - params.h < 1)
        throw std::invalid_argument("vieta: need n >= 1 and n - h >= 1");
    if (params.m < 1 || !is_prime(params.p))
        throw std::invalid_argument("vieta: p must be prime, m >= 1");
}

}  // namespace

VietaCodeword vieta_encode(const PolyCodeParams& params, const std::vector<FieldElement>& coeffs,
                           const Budget& budget) {
    require_params(params);
    if (static_cast<Int>(coeffs.size()) != params.n - params.h)
        throw std::invalid_argument("vieta_encode: expected n - h coefficients");
    FiniteField base = FiniteField::make(params.p, params.m, budget);

    FieldPoly s(static_cast<std::size_t>(params.n) + 1, base.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (static_cast<Int>(coeffs[i].size()) != base.k())
            throw std::invalid_argument("vieta_encode: coefficient not in the base field");
        s[i] = coeffs[i];
    }
    s[static_cast<std::size_t>(params.n)] = base.one();  // monic; top h coefficients stay zero

    auto factors = factor_poly(base, s, budget);
    Int lcm_deg = 1;
    for (const auto& [g, mult] : factors)
        lcm_deg = lcm_int(lcm_deg, static_cast<Int>(g.size()) - 1);
    Int K = checked_mul(params.m, lcm_deg);
    FiniteField big = FiniteField::make(params.p, K, budget);
    std::vector<Int> embed = subfield_embedding(base, big);

    VietaCodeword out{big, {}};
    for (const auto& [g, mult] : factors) {
        FieldPoly g_big;
        for (const auto& c : g) g_big.push_back(big.from_int(embed[static_cast<std::size_t>(base.to_int(c))]));
        Int degree = static_cast<Int>(g.size()) - 1;
        Int found = 0;
        for (Int i = 0; i < big.size() && found < degree; ++i) {
            FieldElement x = big.from_int(i);
            if (big.is_zero(poly_eval(big, g_big, x))) {
                for (Int t = 0; t < mult; ++t) out.roots.push_back(x);
                ++found;
            }
        }
        if (found != degree)
            throw std::logic_error("vieta_encode: factor did not split in the computed field");
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [&](const FieldElement& a, const FieldElement& b) {
                  return big.to_int(a) < big.to_int(b);
              });
    if (static_cast<Int>(out.roots.size()) != params.n)
        throw std::logic_error("vieta_encode: wrong root count");
    return out;
}

std::vector<FieldElement> vieta_decode(const PolyCodeParams& params, const FiniteField& field,
                                       const std::vector<FieldElement>& roots,
                                       const Budget& budget) {
    require_params(params);
    Int t = params.n - static_cast<Int>(roots.size());
    if (t < 0 || t > params.h)
        throw std::invalid_argument("vieta_decode: received root count outside the correctable range");

    // Elementary symmetric values of the known roots via the product
    // prod_i (z - r_i) = sum_j (-1)^j e_j z^{n-t-j}.
    FieldPoly prod{field.one()};
    for (const auto& r : roots) {
        if (static_cast<Int>(r.size()) != field.k())
            throw std::invalid_argument("vieta_decode: root not in the declared field");
        FieldPoly lin{field.neg(r), field.one()};  // (z - r)
        prod = poly_mul(field, prod, lin);
    }
    std::size_t nk = roots.size();
    // e_j of the known roots vanishes for j > nk; keep explicit zeros up
    // to the largest convolution index used below.
    std::vector<FieldElement> e_known(std::max<std::size_t>(nk, static_cast<std::size_t>(t)) + 1,
                                      field.zero());
    for (std::size_t j = 0; j <= nk; ++j) {
        FieldElement c = prod[nk - j];  // coefficient of z^{nk-j} = (-1)^j e_j
        e_known[j] = (j % 2 == 0) ? c : field.neg(c);
    }

    // Triangular solve: e_j(all) = 0 for j = 1..t (the zeroed top
    // coefficients), and e_j(all) = sum_i e_i(missing) e_{j-i}(known).
    std::vector<FieldElement> e_missing(static_cast<std::size_t>(t) + 1, field.zero());
    e_missing[0] = field.one();
    for (Int j = 1; j <= t; ++j) {
        FieldElement acc = field.zero();
        for (Int i = 0; i < j; ++i) {
            acc = field.add(acc,
                            field.mul(e_missing[static_cast<std::size_t>(i)],
                                      e_known[static_cast<std::size_t>(j - i)]));
        }
        e_missing[static_cast<std::size_t>(j)] = field.neg(acc);
    }

    // The missing roots are the roots of z^t - m_1 z^{t-1} + ... +- m_t.
    FieldPoly missing_poly(static_cast<std::size_t>(t) + 1, field.zero());
    for (Int j = 0; j <= t; ++j) {
        FieldElement c = e_missing[static_cast<std::size_t>(j)];
        missing_poly[static_cast<std::size_t>(t - j)] = (j % 2 == 0) ? c : field.neg(c);
    }
    std::vector<FieldElement> all_roots = roots;
    if (t > 0) {
        BudgetTicker ticker(budget);
        FieldPoly remp = missing_poly;
        for (Int i = 0; i < field.size() && static_cast<Int>(all_roots.size()) < params.n; ++i) {
            if (!ticker.tick()) throw BudgetExceeded("vieta_decode: root scan budget exhausted");
            FieldElement x = field.from_int(i);
            for (;;) {
                if (remp.size() <= 1) break;
                if (!field.is_zero(poly_eval(field, remp, x))) break;
                FieldPoly lin{field.neg(x), field.one()};
                auto [q, r] = poly_divmod_monic(field, remp, lin);
                if (!r.empty()) throw std::logic_error("vieta_decode: deflation failed");
                remp = q;
                all_roots.push_back(x);
            }
        }
        if (static_cast<Int>(all_roots.size()) != params.n)
            throw std::invalid_argument(
                "vieta_decode: missing-root polynomial does not split in the field (invalid input)");
    }

    // Full elementary symmetric values -> coefficients.
    FieldPoly full{field.one()};
    for (const auto& r : all_roots) full = poly_mul(field, full, FieldPoly{field.neg(r), field.one()});
    // full(z) = z^n + s_{n-1} z^{n-1} + ... + s_0 directly.
    for (Int j = params.n - params.h; j < params.n; ++j)
        if (!field.is_zero(full[static_cast<std::size_t>(j)]))
            throw std::invalid_argument("vieta_decode: recovered top coefficients are nonzero (invalid input)");

    // Map the low n-h coefficients back into the base field.
    FiniteField base = FiniteField::make(params.p, params.m, budget);
    std::vector<Int> embed = subfield_embedding(base, field);
    std::vector<Int> inverse(static_cast<std::size_t>(field.size()), -1);
    for (Int i = 0; i < base.size(); ++i) inverse[static_cast<std::size_t>(embed[static_cast<std::size_t>(i)])] = i;

    std::vector<FieldElement> coeffs;
    for (Int j = 0; j < params.n - params.h; ++j) {
        Int idx = field.to_int(full[static_cast<std::size_t>(j)]);
        Int small_idx = inverse[static_cast<std::size_t>(idx)];
        if (small_idx < 0)
            throw std::invalid_argument("vieta_decode: coefficient lies outside the base field (invalid input)");
        coeffs.push_back(base.from_int(small_idx));
    }
    return coeffs;
}

}  // namespace msc
