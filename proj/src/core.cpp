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

#include "msc/core.hpp"

#include <cstdlib>

namespace msc {

Int d1(const MultiplicityVector& x, const MultiplicityVector& y) {
    if (x.alphabet() != y.alphabet())
        throw std::invalid_argument("d1: alphabet size mismatch");
    if (x.length() != y.length())
        throw std::invalid_argument("d1: length mismatch");
    Int sum = 0;
    for (std::size_t i = 0; i < x.counts.size(); ++i)
        sum = checked_add(sum, std::abs(x.counts[i] - y.counts[i]));
    if (sum % 2 != 0)
        throw std::logic_error("d1: odd absolute-difference sum despite equal lengths");
    return sum / 2;
}

Int da(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("da: dimension mismatch");
    Int pos = 0, neg = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Int d = u[i] - v[i];
        if (d > 0)
            pos = checked_add(pos, d);
        else
            neg = checked_add(neg, -d);
    }
    return std::max(pos, neg);
}

Int da_norm(const Vec& u) { return da(u, Vec(u.size(), 0)); }

Vec drop_coordinate(const Vec& x) {
    if (x.empty()) throw std::invalid_argument("drop_coordinate: empty vector");
    Int sum = 0;
    for (Int v : x) sum = checked_add(sum, v);
    if (sum != 0) throw std::invalid_argument("drop_coordinate: entry sum must be zero");
    return Vec(x.begin() + 1, x.end());
}

std::vector<MultiplicityVector> enumerate_simplex(Int q, Int n) {
    if (q < 2 || n < 0) throw std::invalid_argument("enumerate_simplex: need q >= 2, n >= 0");
    std::vector<MultiplicityVector> out;
    for_each_simplex(q, n, [&](const Vec& x) { out.emplace_back(MultiplicityVector{x}); });
    return out;
}

namespace {

void anticode_scan(const AnticodeSpec& spec, std::size_t pos, Int pos_sum, Int neg_sum, Vec& x,
                   std::vector<Vec>& out) {
    if (pos == x.size()) {
        out.push_back(x);
        return;
    }
    for (Int v = -spec.r_minus; v <= spec.r_plus; ++v) {
        Int p = pos_sum + (v > 0 ? v : 0);
        Int m = neg_sum + (v < 0 ? -v : 0);
        if (p > spec.r_plus || m > spec.r_minus) continue;
        x[pos] = v;
        anticode_scan(spec, pos + 1, p, m, x, out);
    }
    x[pos] = 0;
}

}  // namespace

std::vector<Vec> anticode_members(const AnticodeSpec& spec) {
    if (spec.m < 1 || spec.r_plus < 0 || spec.r_minus < 0)
        throw std::invalid_argument("anticode_members: need m >= 1 and r+/- >= 0");
    std::vector<Vec> out;
    Vec x(static_cast<std::size_t>(spec.m), 0);
    anticode_scan(spec, 0, 0, 0, x, out);
    return out;
}

Int anticode_size(const AnticodeSpec& spec) {
    if (spec.m < 1 || spec.r_plus < 0 || spec.r_minus < 0)
        throw std::invalid_argument("anticode_size: need m >= 1 and r+/- >= 0");
    Int total = 0;
    Int jmax = std::min(spec.m, spec.r_plus);
    for (Int j = 0; j <= jmax; ++j) {
        Int term = checked_mul(binom_int(spec.m, j), binom_int(spec.r_plus, j));
        term = checked_mul(term, binom_int(spec.r_minus + spec.m - j, spec.m - j));
        total = checked_add(total, term);
    }
    return total;
}

}  // namespace msc
