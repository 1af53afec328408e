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

#include <functional>

#include "msc/ints.hpp"

namespace msc {

/// A multiset over the alphabet {0, ..., q-1} stored as its vector of
/// multiplicities: counts[i] is the number of copies of symbol i. The
/// multiset cardinality sum(counts) is the codeword length n; the set of
/// all such vectors of fixed length n is the discrete simplex of dimension
/// q-1 and cardinality C(n+q-1, q-1).
struct MultiplicityVector {
    Vec counts;

    MultiplicityVector() = default;
    explicit MultiplicityVector(Vec c) : counts(std::move(c)) {
        for (Int v : counts)
            if (v < 0) throw std::invalid_argument("multiplicity vector entries must be >= 0");
    }

    Int alphabet() const { return static_cast<Int>(counts.size()); }
    Int length() const {
        Int n = 0;
        for (Int v : counts) n = checked_add(n, v);
        return n;
    }

    bool operator==(const MultiplicityVector& o) const { return counts == o.counts; }
    bool operator!=(const MultiplicityVector& o) const { return counts != o.counts; }
};

/// Anticode S_m(r+, r-) in (Z^m, d_a): vectors whose positive entries sum
/// to at most r_plus and whose negative entries sum in magnitude to at most
/// r_minus. Its diameter is r_plus + r_minus.
struct AnticodeSpec {
    Int m = 0;
    Int r_plus = 0;
    Int r_minus = 0;
};

/// Half the l1 distance between equal-length multiplicity vectors; the
/// graph distance on the simplex. Always an integer when both vectors have
/// the same entry sum.
Int d1(const MultiplicityVector& x, const MultiplicityVector& y);

/// The asymmetric-channel metric on Z^m:
/// max( sum over coordinates where u>v of u-v, sum where u<v of v-u ).
Int da(const Vec& u, const Vec& v);

Int da_norm(const Vec& u);  // da(u, 0)

/// The isometry from the zero-sum lattice A_m (vectors in Z^{m+1} summing
/// to zero) onto (Z^m, d_a): drop coordinate 0. Distances are preserved:
/// d1(x, y) = da(drop_coordinate(x), drop_coordinate(y)).
Vec drop_coordinate(const Vec& x);

/// Visits every composition of n into q non-negative parts exactly once in
/// colexicographic order (the last coordinate varies slowest). This is the
/// enumeration order of the simplex used throughout for ranking.
template <typename F>
void for_each_composition(Int q, Int n, F&& f) {
    if (q <= 0 || n < 0) throw std::invalid_argument("composition needs q >= 1, n >= 0");
    Vec x(static_cast<std::size_t>(q), 0);
    x[0] = n;  // colex-least composition
    for (;;) {
        f(const_cast<const Vec&>(x));
        // Successor: find the smallest j >= 1 with mass strictly below it,
        // push one unit into x[j] and reset the prefix.
        std::size_t j = 1;
        Int below = (q > 0) ? x[0] : 0;
        while (j < x.size() && below == 0) {
            below = x[j];
            ++j;
        }
        if (j >= x.size()) return;  // all mass in the last coordinate
        x[j] += 1;
        for (std::size_t i = 0; i < j; ++i) x[i] = 0;
        x[0] = below - 1;
    }
}

/// All elements of the simplex (length-n multisets over q symbols) in
/// colexicographic order. Count = C(n+q-1, q-1).
std::vector<MultiplicityVector> enumerate_simplex(Int q, Int n);

template <typename F>
void for_each_simplex(Int q, Int n, F&& f) {
    if (q < 1 || n < 0) throw std::invalid_argument("for_each_simplex: need q >= 1, n >= 0");
    for_each_composition(q, n, std::forward<F>(f));
}

/// Exact enumeration of the anticode S_m(r+, r-) by scanning the box
/// [-r-, r+]^m with the two one-sided sum constraints.
std::vector<Vec> anticode_members(const AnticodeSpec& spec);

/// Closed-form cardinality of S_m(r+, r-):
///   sum_j C(m, j) C(r+, j) C(r- + m - j, m - j)
/// over j = 0..min(m, r+). Exact 64-bit arithmetic; overflow throws.
Int anticode_size(const AnticodeSpec& spec);

}  // namespace msc
