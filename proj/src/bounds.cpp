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

#include "msc/bounds.hpp"

#include <cmath>

namespace msc {

namespace {

BigInt rat_ceil(const Rat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

BigInt rat_floor(const Rat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Rat rat_pow(const Rat& base, Int e) {
    Rat r = 1, b = base;
    for (Int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

}  // namespace

Int beta(Int h, Int q) {
    if (h < 1 || q < 2) throw std::invalid_argument("beta: need h >= 1, q >= 2");
    return anticode_size({q - 1, (h + 1) / 2, h / 2});
}

BoundReport fixed_alphabet_bounds(Int q, Int n, Int h, const PhiBounds& phi) {
    if (n <= h) throw std::invalid_argument("fixed_alphabet_bounds: need n > h");
    if (phi.h != h || phi.q != q) throw std::invalid_argument("fixed_alphabet_bounds: phi mismatch");
    BoundReport rep;
    rep.q = q;
    rep.n = n;
    rep.h = h;
    BigInt simplex = binom_big(n + q - 1, q - 1);

    Int phi_div = phi.exact ? *phi.exact : phi.upper;
    rep.lower = rat_ceil(Rat(simplex, BigInt(phi_div)));
    rep.lower_method = phi.exact ? "coset-partition/phi-exact" : "coset-partition/phi-upper";

    Rat main = Rat(simplex, BigInt(beta(h, q)));
    BigInt boundary = 0;
    for (Int j = 1; j <= q * ((h + 1) / 2); ++j) boundary += binom_big(n + q - 1 - j, q - 2);
    rep.upper = rat_floor(main + Rat(boundary));
    rep.upper_method = "code-anticode+boundary";
    return rep;
}

Rat growing_alphabet_upper(Int q, Int n, Int h, Int r, Int l) {
    if (r < 0 || r > h || l < r || l > q)
        throw std::invalid_argument("growing_alphabet_upper: need 0 <= r <= h, r <= l <= q");
    if (l < 1) throw std::invalid_argument("growing_alphabet_upper: need l >= 1");
    BigInt num = binom_big(n + h - 2 * r + q - 1, q - 1);
    BigInt den = binom_big(l, r) * binom_big(q - 1 + h - 2 * r, h - r);
    if (den == 0) throw std::invalid_argument("growing_alphabet_upper: vanishing denominator");
    BigInt tail = 0;
    for (Int i = 1; i <= l - 1; ++i) tail += binom_big(q, i) * binom_big(n - 1, i - 1);
    return Rat(num, den) + Rat(tail);
}

GrowingBest growing_alphabet_upper_best(Int q, Int n, Int h) {
    GrowingBest best;
    best.value = growing_alphabet_upper(q, n, h, 0, 1);
    best.r = 0;
    best.l = 1;
    // r is capped at q-1: beyond that the output-count factor degenerates
    // and the bound statement is vacuous.
    for (Int r = 0; r <= std::min(h, q - 1); ++r)
        for (Int l = std::max<Int>(r, 1); l <= q; ++l) {
            Rat v = growing_alphabet_upper(q, n, h, r, l);
            if (v < best.value) {
                best.value = v;
                best.r = r;
                best.l = l;
            }
        }
    return best;
}

DensityBound density_upper_bound(Int m, Int d) {
    if (m < 1 || d < 2) throw std::invalid_argument("density_upper_bound: need m >= 1, d >= 2");
    DensityBound best;
    best.value = 1;  // trivial
    best.method = "trivial";
    for (Int rp = 0; rp <= d - 1; ++rp) {
        Int rm = d - 1 - rp;
        Rat v(BigInt(1), BigInt(anticode_size({m, rp, rm})));
        if (v < best.value) {
            best.value = v;
            best.method = "anticode(" + std::to_string(rp) + "," + std::to_string(rm) + ")";
        }
    }
    if (2 <= d && d <= 2 * m + 1) {
        Int c = d / 2;  // ceil((d-1)/2)
        Int f = (d - 1) / 2;
        Rat v = Rat(factorial_big(c) * factorial_big(f)) /
                Rat(pow_big(BigInt(m + 1 - c), d - 1));
        if (v < best.value) {
            best.value = v;
            best.method = "factorial-relaxation";
        }
    }
    if (m < d) {
        Rat v = Rat(pow_big(BigInt(2), m) * pow_big(factorial_big(m), 3),
                    factorial_big(2 * m) * pow_big(BigInt(d - m), m));
        if (v < best.value) {
            best.value = v;
            best.method = "high-distance-relaxation";
        }
    }
    return best;
}

Rat c_factor(Int h, const Rat& q_tilde) {
    if (h < 1) throw std::invalid_argument("c_factor: need h >= 1");
    if (q_tilde <= 0) throw std::invalid_argument("c_factor: need q~ > 0");
    std::optional<Rat> best;
    for (Int r = 0; r <= h; ++r) {
        Rat v = Rat(factorial_big(h - r) * factorial_big(r)) * rat_pow(1 + q_tilde, r);
        if (!best || v < *best) best = v;
    }
    return *best;
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double stirling_binomial_approx(const Rat& q_tilde, Int n) {
    double qt = static_cast<double>(q_tilde);
    double rn = std::floor(qt * n) - qt * n;  // r(n) = floor(q~ n) - q~ n
    double log2v = n * (1.0 + qt) * binary_entropy(1.0 / (1.0 + qt)) -
                   0.5 * std::log2(2.0 * M_PI * n) +
                   (rn - 0.5) * std::log2(1.0 + 1.0 / qt);
    return std::exp2(log2v);
}

AsymptoticReport asymptotic_estimates(const Rat& q_tilde, Int n, Int h,
                                      std::optional<Int> q_fixed, std::optional<Int> phi_upper) {
    if (n < 1 || h < 1) throw std::invalid_argument("asymptotic_estimates: need n, h >= 1");
    AsymptoticReport rep;
    if (q_fixed) {
        Int q = *q_fixed;
        double nk = std::pow(static_cast<double>(n), static_cast<double>(q - 1));
        double fact = static_cast<double>(factorial_big(q - 1));
        rep.fixed_upper_envelope = nk / (fact * static_cast<double>(beta(h, q)));
        if (phi_upper) rep.fixed_lower_envelope = nk / (fact * static_cast<double>(*phi_upper));
    }
    rep.stirling_binomial = stirling_binomial_approx(q_tilde, n);
    Int q_grow = static_cast<Int>(rat_floor(q_tilde * n));
    if (q_grow >= 1) {
        BigInt exact_binom = binom_big(n + q_grow - 1, q_grow - 1);
        Rat scale = Rat(exact_binom) / rat_pow(q_tilde * n, h);
        rep.grow_lower_envelope = scale;
        rep.grow_upper_envelope = c_factor(h, q_tilde) * scale;
    }
    double qt = static_cast<double>(q_tilde);
    rep.capacity_bits_per_symbol = (1.0 + qt) * binary_entropy(1.0 / (1.0 + qt));
    rep.log_term_coefficient = Rat(2 * h + 1, 2);
    return rep;
}

Rat seq_prefix_bound(Int q_tilde, Int n, Int h) {
    if (q_tilde < 2 || n < 1 || h < 0)
        throw std::invalid_argument("seq_prefix_bound: need q~ >= 2 (integer alphabet), n >= 1");
    BigInt denom = 0;
    for (Int j = 0; j <= h / 2; ++j)
        denom += binom_big(n, j) * pow_big(BigInt(q_tilde - 1), j);
    return Rat(pow_big(BigInt(q_tilde), n), denom);
}

double rate_gap(double q_tilde) {
    if (q_tilde <= 0) throw std::invalid_argument("rate_gap: need q~ > 0");
    return (1.0 + q_tilde) * std::log2(1.0 + 1.0 / q_tilde);
}

}  // namespace msc
