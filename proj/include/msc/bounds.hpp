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

#include "msc/core.hpp"
#include "msc/sidon.hpp"

namespace msc {

/// beta(h, q): cardinality of the anticode of diameter h in Z^{q-1},
/// S_{q-1}(ceil(h/2), floor(h/2)). Lower-bounds phi(h, q).
Int beta(Int h, Int q);

/// Size bounds for the largest h-deletion-correcting code of length n over
/// [q]. All arithmetic is exact; the reported integers are rounded
/// outward from the defining rationals (ceil for lower, floor for upper).
struct BoundReport {
    Int q = 0, n = 0, h = 0;
    BigInt lower = 0;
    BigInt upper = 0;
    std::string lower_method;
    std::string upper_method;
};

/// Lower bound |simplex| / phi (via the certified upper bound on phi, so
/// the reported bound stays valid even when phi is not known exactly) and
/// the anticode upper bound |simplex| / beta + boundary correction.
BoundReport fixed_alphabet_bounds(Int q, Int n, Int h, const PhiBounds& phi);

/// Growing-alphabet upper bound parameterized by r (deletions re-split) and
/// l (nonzero-coordinate threshold):
///   C(n+h-2r+q-1, q-1) / (C(l, r) C(q-1+h-2r, h-r)) + sum_{i<l} C(q,i) C(n-1,i-1).
/// The (r=0, l=1) special case simplifies to C(n+h+q-1, q-1) / C(q-1+h, h).
Rat growing_alphabet_upper(Int q, Int n, Int h, Int r, Int l);

struct GrowingBest {
    Rat value;
    Int r = 0, l = 1;
};
GrowingBest growing_alphabet_upper_best(Int q, Int n, Int h);

/// Best density upper bound for codes in (Z^m, d_a) of minimum distance d:
/// the anticode bound optimized over all splits r+ + r- = d - 1, and the
/// two closed-form relaxations on their validity ranges.
struct DensityBound {
    Rat value;
    std::string method;
};
DensityBound density_upper_bound(Int m, Int d);

/// c(h, q~) = min over 0 <= r <= h of (h-r)! r! (1+q~)^r.
Rat c_factor(Int h, const Rat& q_tilde);

/// Asymptotic-regime evaluators. These are envelopes and approximations,
/// not certified bounds at finite n; they are kept separate from the exact
/// BoundReport values for that reason.
struct AsymptoticReport {
    // fixed alphabet: n^{q-1} / ((q-1)! beta) and n^{q-1} / ((q-1)! phi)
    double fixed_upper_envelope = 0;
    double fixed_lower_envelope = 0;
    // growing alphabet at q = floor(q~ n)
    double stirling_binomial = 0;   // approximation of C(n+q-1, q-1)
    Rat grow_lower_envelope;        // binom / (q~ n)^h
    Rat grow_upper_envelope;        // c(h, q~) * binom / (q~ n)^h
    double capacity_bits_per_symbol = 0;  // (1+q~) H(1/(1+q~))
    Rat log_term_coefficient;             // h + 1/2
    std::string note = "asymptotic envelopes, not bounds at finite n";
};
AsymptoticReport asymptotic_estimates(const Rat& q_tilde, Int n, Int h,
                                      std::optional<Int> q_fixed = std::nullopt,
                                      std::optional<Int> phi_upper = std::nullopt);

/// Stirling-form approximation of C(n + floor(q~ n) - 1, floor(q~ n) - 1):
///   2^{n (1+q~) H(1/(1+q~))} / sqrt(2 pi n) * (1 + 1/q~)^{r(n) - 1/2},
/// with r(n) = floor(q~ n) - q~ n.
double stirling_binomial_approx(const Rat& q_tilde, Int n);

/// Sphere-packing ceiling for the sequence-number-prefix construction in
/// the q~-ary Hamming space:  q~^n / sum_{j<=floor(h/2)} C(n,j)(q~-1)^j.
Rat seq_prefix_bound(Int q_tilde, Int n, Int h);

/// Asymptotic rate loss of the prefix construction relative to optimal
/// multiset codes: (1+q~) log2(1 + 1/q~) bits per symbol.
double rate_gap(double q_tilde);

double binary_entropy(double x);

}  // namespace msc
