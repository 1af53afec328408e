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

#include "msc/core.hpp"
#include "msc/sidon.hpp"

namespace msc {

using Mat = std::vector<Vec>;  // row-major integer matrix

/// Smith normal form S = U * A * V with U, V unimodular; S is diagonal
/// with s1 | s2 | ... | sr, si > 0, followed by zeros.
struct SmithForm {
    Mat S, U, V;
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const Mat& A);

/// Row-style Hermite normal form of a full-column-rank stack of row
/// vectors: upper triangular, positive diagonal, entries above each pivot
/// reduced into [0, pivot).
Mat hermite_normal_form(const Mat& rows);

/// Full-rank sublattice of Z^m given by m generator rows, canonicalized to
/// Hermite normal form. Caches the Smith decomposition of the generator
/// matrix, which yields the index |Z^m / L| (the determinant), coset
/// labels, and the cyclic decomposition of the quotient group.
class IntegerLattice {
   public:
    IntegerLattice() = default;  // empty placeholder; assign from from_generators
    static IntegerLattice from_generators(Mat rows);

    Int dim() const { return m_; }
    const Mat& generators() const { return gens_; }
    Int determinant() const { return det_; }

    /// Canonical coset label: residues of x * V against the Smith diagonal.
    /// Two points share a label iff they lie in the same coset of L.
    Vec coset_label(const Vec& x) const;
    bool contains(const Vec& x) const;

    /// Diagonal of the Smith form (the cyclic structure of Z^m / L,
    /// including trivial factors).
    const Vec& smith_diagonal() const { return diag_; }
    /// Invariant factors > 1 of the quotient group.
    Vec quotient_moduli() const;
    /// Image of x in the quotient, expressed in the quotient_moduli()
    /// coordinates.
    Vec quotient_image(const Vec& x) const;

   private:
    Int m_ = 0;
    Mat gens_;
    Int det_ = 0;
    Vec diag_;  // Smith diagonal of gens_
    Mat V_;     // column transform: S = U * gens * V
};

/// The kernel lattice { x in Z^m : sum_i x_i * b_i = 0 in G } of a
/// normalized Sidon set B = {0, b_1, ..., b_m}. Its index in Z^m equals
/// the order of the subgroup generated by B (the full group order when B
/// generates G), and its d_a minimum distance exceeds the set's order h.
IntegerLattice lattice_from_sidon(const SidonSet& B);

struct DerivedSidonSet {
    SidonSet set;
    /// Order of the subgroup of Z^m/L generated by the derived set; equals
    /// the lattice determinant exactly when the set generates the whole
    /// quotient.
    Int generated_order = 0;
};

/// The images of 0, e_1, ..., e_m in Z^m / L form a B_h set whenever the
/// lattice minimum distance exceeds h (checked).
DerivedSidonSet sidon_from_lattice(const IntegerLattice& L, Int h);

struct MinDistance {
    Int value = 0;
    bool exact = false;  // false means "no nonzero vector with norm <= bound"
};

/// Exact d_a minimum distance by enumerating anticode shells of growing
/// radius and testing lattice membership. The default bound determinant+1
/// is always sufficient: det * e_1 is a lattice vector of norm det.
MinDistance min_distance_da(const IntegerLattice& L, std::optional<Int> bound = std::nullopt);

struct TilingVerdict {
    bool is_packing = false;
    bool is_tiling = false;
    /// Two distinct anticode members in the same coset, when packing fails.
    std::optional<std::pair<Vec, Vec>> witness;
};

/// (S, L) is a packing iff all members of the anticode fall in distinct
/// cosets of L; it tiles iff additionally |S| equals the lattice index.
TilingVerdict packing_check(const AnticodeSpec& spec, const IntegerLattice& L);
TilingVerdict tiling_check(const AnticodeSpec& spec, const IntegerLattice& L);

/// Volume of the cubical cluster around the radius-r ball in (Z^m, d_a):
/// equal to the ball cardinality |S_m(r, r)|.
Int vol_cube(Int m, Int r);
/// Volume of the convex hull of the radius-r ball: r^m / m! * C(2m, m),
/// as an exact rational. The ratio vol_conv/vol_cube tends to 1 as r grows.
Rat vol_conv(Int m, Int r);

}  // namespace msc
