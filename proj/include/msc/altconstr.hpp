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

#include <memory>

#include "msc/bounds.hpp"
#include "msc/groups.hpp"

namespace msc {

// ---------------------------------------------------------------------------
// Sequence-number-prefix construction: encode a block codeword
// (s_1, ..., s_n) as the multiset { 1∘s_1, ..., n∘s_n }. Index prefixes
// make all multiset elements distinct, and an inner Hamming distance
// above h turns missing indices into correctable erasures.

/// Inner block code over the integer alphabet {0, ..., q-1}.
class BlockCode {
   public:
    virtual ~BlockCode() = default;
    virtual Int length() const = 0;
    virtual Int dimension() const = 0;
    virtual Int min_hamming_distance() const = 0;
    virtual Int alphabet() const = 0;
    virtual Vec encode(const Vec& message) const = 0;
    /// received[i] empty means position i was erased. Must succeed for up
    /// to min_hamming_distance() - 1 erasures.
    virtual Vec decode_erasures(const std::vector<std::optional<Int>>& received) const = 0;
};

/// The identity code (d_H = 1, rate 1).
std::shared_ptr<BlockCode> make_identity_code(Int q, Int n);
/// Single parity symbol over Z_q (d_H = 2).
std::shared_ptr<BlockCode> make_parity_code(Int q, Int n);
/// Reed-Solomon code over a prime field GF(p), p >= n, with evaluation
/// points 0..n-1 and dimension k = n - d + 1; erasure decoding by
/// Lagrange interpolation.
std::shared_ptr<BlockCode> make_reed_solomon_code(Int p, Int n, Int d);

struct IndexedCodeParams {
    Int q_tilde = 0;  // inner alphabet size
    Int n = 0;        // block length
    std::shared_ptr<BlockCode> inner;

    /// Default inner code for deletion budget h: Reed-Solomon with
    /// d_H = h + 1 over the smallest prime >= max(n, q_tilde); parity and
    /// identity codes cover d_H <= 2 without a field constraint.
    static IndexedCodeParams with_default_inner(Int q_tilde, Int n, Int h);
};

/// An indexed symbol: (position in 1..n) ∘ (inner alphabet symbol).
using IndexedSymbol = std::pair<Int, Int>;

std::vector<IndexedSymbol> seq_encode(const IndexedCodeParams& params, const Vec& message);
Vec seq_decode(const IndexedCodeParams& params, std::vector<IndexedSymbol> received);

/// Rate comparison of the prefix construction against unrestricted
/// multiset codes over the same effective alphabet of size q~ * n.
struct RateComparison {
    Rat seq_upper;            // sphere-packing ceiling on the prefix construction
    Rat multiset_upper;       // growing-alphabet ceiling on multiset codes
    double seq_rate_bits = 0;       // (1/n) log2 seq_upper
    double multiset_rate_bits = 0;  // (1/n) log2 multiset_upper
    double rate_gap_bound = 0;      // (1+q~) log2(1 + 1/q~)
};
RateComparison compare_rates(Int q_tilde, Int n, Int h);

// ---------------------------------------------------------------------------
// Polynomial-root construction: a message (s_0, ..., s_{n-h-1}) over
// GF(p^m) becomes the monic polynomial x^n + 0 x^{n-1} + ... + 0 x^{n-h}
// + s_{n-h-1} x^{n-h-1} + ... + s_0, and the codeword is the multiset of
// its n roots. The top h elementary symmetric functions of the roots
// vanish, so the missing roots after up to h deletions solve a triangular
// system and the coefficients are recovered from any n-h roots.

struct PolyCodeParams {
    Int p = 2;  // prime characteristic
    Int m = 1;  // base extension degree; coefficients live in GF(p^m)
    Int n = 1;  // polynomial degree = codeword length
    Int h = 0;  // deletion budget = number of zeroed top coefficients

    Int base_size() const { return ipow_checked(p, m); }
};

/// A root multiset together with the field it lives in. The roots of a
/// degree-n polynomial over GF(p^m) generally lie in GF(p^K) with
/// K = m * lcm(irreducible factor degrees), which can be smaller or larger
/// than m*n depending on the factorization pattern; the field is therefore
/// carried explicitly with every codeword.
struct VietaCodeword {
    FiniteField field;       // GF(p^K), canonical modulus
    std::vector<FieldElement> roots;  // n roots with multiplicity, sorted
};

VietaCodeword vieta_encode(const PolyCodeParams& params, const std::vector<FieldElement>& coeffs,
                           const Budget& budget = {});

/// Recovers (s_0, ..., s_{n-h-1}) over GF(p^m) from any n-t roots, t <= h.
std::vector<FieldElement> vieta_decode(const PolyCodeParams& params, const FiniteField& field,
                                       const std::vector<FieldElement>& roots,
                                       const Budget& budget = {});

// Polynomial utilities over an explicit finite field (little-endian
// coefficient vectors). Exposed for tests and the factorization path.
using FieldPoly = std::vector<FieldElement>;

FieldPoly poly_trim(const FiniteField& F, FieldPoly a);
FieldPoly poly_mul(const FiniteField& F, const FieldPoly& a, const FieldPoly& b);
/// Division by a monic divisor; returns (quotient, remainder).
std::pair<FieldPoly, FieldPoly> poly_divmod_monic(const FiniteField& F, const FieldPoly& a,
                                                  const FieldPoly& b);
FieldElement poly_eval(const FiniteField& F, const FieldPoly& a, const FieldElement& x);

/// Monic irreducible factors with multiplicity, found by trial division in
/// ascending degree (any low-degree divisor surviving the sweep is
/// irreducible because all smaller factors were already removed).
std::vector<std::pair<FieldPoly, Int>> factor_poly(const FiniteField& F, const FieldPoly& f,
                                                   const Budget& budget = {});

/// The field homomorphism GF(p^m) -> GF(p^K) (m | K) that sends the
/// generator of the small field to the smallest root of the small modulus
/// inside the big field; as a map of element indices.
std::vector<Int> subfield_embedding(const FiniteField& small, const FiniteField& big);

}  // namespace msc
