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

#include "msc/lattices.hpp"

#include <algorithm>
#include <map>

namespace msc {

namespace {

void swap_rows(Mat& M, std::size_t a, std::size_t b) { std::swap(M[a], M[b]); }

void swap_cols(Mat& M, std::size_t a, std::size_t b) {
    for (auto& row : M) std::swap(row[a], row[b]);
}

// row[a] -= c * row[b]
void add_row(Mat& M, std::size_t a, std::size_t b, Int c) {
    for (std::size_t j = 0; j < M[a].size(); ++j)
        M[a][j] = checked_add(M[a][j], checked_mul(-c, M[b][j]));
}

// col[a] -= c * col[b]
void add_col(Mat& M, std::size_t a, std::size_t b, Int c) {
    for (auto& row : M) row[a] = checked_add(row[a], checked_mul(-c, row[b]));
}

void negate_row(Mat& M, std::size_t a) {
    for (auto& v : M[a]) v = -v;
}

Mat identity(std::size_t n) {
    Mat I(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

}  // namespace

SmithForm smith_normal_form(const Mat& A) {
    std::size_t r = A.size();
    if (r == 0) throw std::invalid_argument("smith_normal_form: empty matrix");
    std::size_t c = A[0].size();
    for (const auto& row : A)
        if (row.size() != c) throw std::invalid_argument("smith_normal_form: ragged matrix");

    SmithForm f;
    f.S = A;
    f.U = identity(r);
    f.V = identity(c);
    Mat& S = f.S;

    std::size_t t = 0;
    while (t < r && t < c) {
        // Locate a pivot: the nonzero entry of smallest magnitude in the
        // trailing submatrix.
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (S[i][j] != 0 && (best == 0 || std::abs(S[i][j]) < best)) {
                    best = std::abs(S[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        if (pi != t) {
            swap_rows(S, t, pi);
            swap_rows(f.U, t, pi);
        }
        if (pj != t) {
            swap_cols(S, t, pj);
            swap_cols(f.V, t, pj);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (S[i][t] == 0) continue;
                Int q = S[i][t] / S[t][t];
                add_row(S, i, t, q);
                add_row(f.U, i, t, q);
                if (S[i][t] != 0) {  // remainder: smaller pivot available
                    swap_rows(S, t, i);
                    swap_rows(f.U, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (S[t][j] == 0) continue;
                Int q = S[t][j] / S[t][t];
                add_col(S, j, t, q);
                add_col(f.V, j, t, q);
                if (S[t][j] != 0) {
                    swap_cols(S, t, j);
                    swap_cols(f.V, t, j);
                    clean = false;
                }
            }
        }

        if (S[t][t] < 0) {
            negate_row(S, t);
            negate_row(f.U, t);
        }

        // Divisibility fix-up: S[t][t] must divide every later entry.
        bool redo = false;
        for (std::size_t i = t + 1; i < r && !redo; ++i)
            for (std::size_t j = t + 1; j < c && !redo; ++j)
                if (S[i][j] % S[t][t] != 0) {
                    // fold column j into column t and re-eliminate
                    add_col(S, t, j, -1);
                    add_col(f.V, t, j, -1);
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }
    f.rank = t;
    return f;
}

Mat hermite_normal_form(const Mat& rows) {
    if (rows.empty()) throw std::invalid_argument("hermite_normal_form: empty input");
    std::size_t m = rows[0].size();
    Mat W = rows;
    for (const auto& row : W)
        if (row.size() != m) throw std::invalid_argument("hermite_normal_form: ragged matrix");

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m; ++col) {
        // Euclid on the entries of this column at/below pivot_row.
        for (;;) {
            std::size_t best = W.size();
            for (std::size_t i = pivot_row; i < W.size(); ++i)
                if (W[i][col] != 0 && (best == W.size() || std::abs(W[i][col]) < std::abs(W[best][col])))
                    best = i;
            if (best == W.size()) break;  // column all zero below pivot
            swap_rows(W, pivot_row, best);
            bool reduced = true;
            for (std::size_t i = pivot_row + 1; i < W.size(); ++i) {
                if (W[i][col] == 0) continue;
                Int q = W[i][col] / W[pivot_row][col];
                add_row(W, i, pivot_row, q);
                if (W[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (pivot_row < W.size() && W[pivot_row][col] != 0) {
            if (W[pivot_row][col] < 0) negate_row(W, pivot_row);
            // reduce the entries above the pivot into [0, pivot)
            for (std::size_t i = 0; i < pivot_row; ++i) {
                Int q = W[i][col] / W[pivot_row][col];
                if (W[i][col] % W[pivot_row][col] < 0) q -= 1;  // floor division
                add_row(W, i, pivot_row, q);
            }
            ++pivot_row;
        }
    }
    if (pivot_row < m) throw std::invalid_argument("hermite_normal_form: rank-deficient input");
    W.resize(m);
    return W;
}

IntegerLattice IntegerLattice::from_generators(Mat rows) {
    if (rows.empty()) throw std::invalid_argument("lattice needs at least one generator");
    std::size_t m = rows[0].size();
    if (m == 0) throw std::invalid_argument("lattice dimension must be positive");
    IntegerLattice L;
    L.m_ = static_cast<Int>(m);
    L.gens_ = hermite_normal_form(rows);
    SmithForm f = smith_normal_form(L.gens_);
    if (f.rank != m) throw std::invalid_argument("lattice generators are rank-deficient");
    L.diag_.resize(m);
    Int det = 1;
    for (std::size_t i = 0; i < m; ++i) {
        L.diag_[i] = f.S[i][i];
        det = checked_mul(det, f.S[i][i]);
    }
    L.det_ = det;
    L.V_ = f.V;
    return L;
}

Vec IntegerLattice::coset_label(const Vec& x) const {
    if (static_cast<Int>(x.size()) != m_)
        throw std::invalid_argument("coset_label: dimension mismatch");
    Vec w(x.size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            acc = checked_add(acc, checked_mul(x[i], V_[i][j]));
        Int d = diag_[j];
        w[j] = ((acc % d) + d) % d;
    }
    return w;
}

bool IntegerLattice::contains(const Vec& x) const {
    Vec lbl = coset_label(x);
    return std::all_of(lbl.begin(), lbl.end(), [](Int v) { return v == 0; });
}

Vec IntegerLattice::quotient_moduli() const {
    Vec out;
    for (Int d : diag_)
        if (d > 1) out.push_back(d);
    if (out.empty()) out.push_back(1);  // trivial quotient
    return out;
}

Vec IntegerLattice::quotient_image(const Vec& x) const {
    Vec lbl = coset_label(x);
    Vec out;
    for (std::size_t i = 0; i < lbl.size(); ++i)
        if (diag_[i] > 1) out.push_back(lbl[i]);
    if (out.empty()) out.push_back(0);
    return out;
}

IntegerLattice lattice_from_sidon(const SidonSet& B) {
    const AbelianGroup& G = B.group;
    if (B.elements.empty() || G.index_of(B.elements[0]) != 0)
        throw std::invalid_argument("lattice_from_sidon: set must be normalized (first element 0)");
    std::size_t m = B.elements.size() - 1;
    if (m == 0) throw std::invalid_argument("lattice_from_sidon: need at least two elements");
    std::size_t k = G.rank();

    // Kernel of Z^m -> G, x -> sum x_i b_i: solve [Bt | D] (x, y)^T = 0
    // over Z, where Bt is k x m with columns the b_i and D = diag(moduli).
    Mat A(k, Vec(m + k, 0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < k; ++i) A[i][j] = B.elements[j + 1][i];
    for (std::size_t i = 0; i < k; ++i) A[i][m + i] = G.moduli[i];

    SmithForm f = smith_normal_form(A);
    // Columns of V beyond the rank span the kernel; their x-projections
    // generate the lattice.
    Mat gens;
    for (std::size_t col = f.rank; col < m + k; ++col) {
        Vec g(m);
        for (std::size_t i = 0; i < m; ++i) g[i] = f.V[i][col];
        gens.push_back(std::move(g));
    }
    if (gens.size() != m + k - f.rank)
        throw std::logic_error("kernel extraction failed");
    return IntegerLattice::from_generators(gens);
}

DerivedSidonSet sidon_from_lattice(const IntegerLattice& L, Int h) {
    if (h < 1) throw std::invalid_argument("sidon_from_lattice: need h >= 1");
    MinDistance md = min_distance_da(L, h);
    if (md.exact)  // found a nonzero vector of norm <= h
        throw std::invalid_argument("sidon_from_lattice: lattice minimum distance is not above h");
    Vec moduli = L.quotient_moduli();
    if (moduli.size() == 1 && moduli[0] == 1)
        throw std::invalid_argument("sidon_from_lattice: quotient group is trivial");

    DerivedSidonSet out;
    out.set.group = AbelianGroup(moduli);
    out.set.h = h;
    Vec zero(static_cast<std::size_t>(L.dim()), 0);
    out.set.elements.push_back(out.set.group.zero());
    for (Int i = 0; i < L.dim(); ++i) {
        Vec e = zero;
        e[static_cast<std::size_t>(i)] = 1;
        out.set.elements.push_back(L.quotient_image(e));
    }
    if (!verify_bh(out.set.group, out.set.elements, h))
        throw std::logic_error("derived set failed B_h verification");

    // Order of the subgroup generated by the set (breadth-first closure).
    const AbelianGroup& G2 = out.set.group;
    std::vector<char> seen(static_cast<std::size_t>(G2.order()), 0);
    std::vector<GroupElement> frontier{G2.zero()};
    seen[0] = 1;
    Int count = 1;
    while (!frontier.empty()) {
        GroupElement g = frontier.back();
        frontier.pop_back();
        for (const auto& b : out.set.elements) {
            GroupElement n = G2.add(g, b);
            Int idx = G2.index_of(n);
            if (!seen[static_cast<std::size_t>(idx)]) {
                seen[static_cast<std::size_t>(idx)] = 1;
                ++count;
                frontier.push_back(std::move(n));
            }
        }
    }
    out.generated_order = count;
    return out;
}

MinDistance min_distance_da(const IntegerLattice& L, std::optional<Int> bound) {
    Int limit = bound.value_or(checked_add(L.determinant(), 1));
    Int m = L.dim();
    for (Int d = 1; d <= limit; ++d) {
        // Scan the shell: anticode members of radius d with norm exactly d.
        std::vector<Vec> shell = anticode_members({m, d, d});
        for (const Vec& v : shell) {
            if (da_norm(v) != d) continue;
            if (L.contains(v)) return {d, true};
        }
    }
    return {limit, false};
}

TilingVerdict packing_check(const AnticodeSpec& spec, const IntegerLattice& L) {
    if (spec.m != L.dim()) throw std::invalid_argument("packing_check: dimension mismatch");
    TilingVerdict verdict;
    std::map<Vec, Vec> first_in_coset;
    std::vector<Vec> members = anticode_members(spec);
    for (const Vec& v : members) {
        Vec lbl = L.coset_label(v);
        auto [it, inserted] = first_in_coset.try_emplace(std::move(lbl), v);
        if (!inserted) {
            verdict.is_packing = false;
            verdict.is_tiling = false;
            verdict.witness = std::make_pair(it->second, v);
            return verdict;
        }
    }
    verdict.is_packing = true;
    verdict.is_tiling = (static_cast<Int>(members.size()) == L.determinant());
    return verdict;
}

TilingVerdict tiling_check(const AnticodeSpec& spec, const IntegerLattice& L) {
    return packing_check(spec, L);
}

Int vol_cube(Int m, Int r) { return anticode_size({m, r, r}); }

Rat vol_conv(Int m, Int r) {
    if (m < 1 || r < 0) throw std::invalid_argument("vol_conv: need m >= 1, r >= 0");
    BigInt num = pow_big(BigInt(r), m) * binom_big(2 * m, m);
    return Rat(num, factorial_big(m));
}

}  // namespace msc
