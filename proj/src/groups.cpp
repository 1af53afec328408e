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

#include "msc/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace msc {

AbelianGroup::AbelianGroup(Vec m) : moduli(std::move(m)) {
    if (moduli.empty()) throw std::invalid_argument("group needs at least one modulus");
    for (Int v : moduli)
        if (v < 2) throw std::invalid_argument("group moduli must be >= 2");
}

Int AbelianGroup::order() const {
    Int v = 1;
    for (Int m : moduli) v = checked_mul(v, m);
    return v;
}

bool AbelianGroup::contains(const GroupElement& e) const {
    if (e.size() != moduli.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] >= moduli[i]) return false;
    return true;
}

void AbelianGroup::require(const GroupElement& e) const {
    if (!contains(e)) throw std::invalid_argument("element does not belong to group " + name());
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    require(a);
    require(b);
    GroupElement r(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) r[i] = (a[i] + b[i]) % moduli[i];
    return r;
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
    require(a);
    GroupElement r(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) r[i] = (moduli[i] - a[i]) % moduli[i];
    return r;
}

GroupElement AbelianGroup::scalar_mul(Int c, const GroupElement& a) const {
    require(a);
    GroupElement r(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        Int m = moduli[i];
        Int cc = ((c % m) + m) % m;
        r[i] = (cc * a[i]) % m;  // cc, a[i] < 2^20 so the product fits easily
    }
    return r;
}

Int AbelianGroup::index_of(const GroupElement& e) const {
    require(e);
    Int idx = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) idx = checked_add(checked_mul(idx, moduli[i]), e[i]);
    return idx;
}

GroupElement AbelianGroup::element_at(Int idx) const {
    if (idx < 0 || idx >= order()) throw std::invalid_argument("element index out of range");
    GroupElement e(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
        e[i] = idx % moduli[i];
        idx /= moduli[i];
    }
    return e;
}

std::vector<GroupElement> AbelianGroup::enumerate(const Budget& budget) const {
    Int v = order();
    if (v > budget.max_group_order) throw BudgetExceeded("group order exceeds enumeration budget");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(v));
    for (Int i = 0; i < v; ++i) out.push_back(element_at(i));
    return out;
}

std::string AbelianGroup::name() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) os << "x";
        os << "Z" << moduli[i];
    }
    return os.str();
}

AbelianGroup parse_group(const std::string& name) {
    Vec moduli;
    std::size_t i = 0;
    while (i < name.size()) {
        if (name[i] != 'Z' && name[i] != 'z')
            throw std::invalid_argument("bad group name (expected ZmxZn...): " + name);
        ++i;
        std::size_t j = i;
        while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad group name: " + name);
        moduli.push_back(std::stoll(name.substr(i, j - i)));
        i = j;
        if (i < name.size()) {
            if (name[i] != 'x' && name[i] != 'X')
                throw std::invalid_argument("bad group name: " + name);
            ++i;
        }
    }
    return AbelianGroup(moduli);
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<Int, Int>> prime_power(Int n) {
    if (n < 2) return std::nullopt;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        Int e = 0, m = n;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) return std::nullopt;
        return std::make_pair(p, e);
    }
    return std::make_pair(n, Int(1));  // n itself prime
}

namespace {

void partitions_of(Int n, Int max_part, Vec& cur, std::vector<Vec>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (Int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(n - part, part, cur, out);
        cur.pop_back();
    }
}

// Invariant factor form of a list of prime-power cyclic orders.
Vec invariant_factors(std::vector<std::pair<Int, Int>> primary) {  // (p, p^e) parts
    // Group by prime, sort exponents descending, then zip the largest
    // powers of each prime into the largest invariant factor, and so on.
    std::map<Int, Vec> by_prime;
    for (auto& [p, q] : primary) by_prime[p].push_back(q);
    std::size_t rows = 0;
    for (auto& [p, qs] : by_prime) {
        std::sort(qs.begin(), qs.end(), std::greater<>());
        rows = std::max(rows, qs.size());
    }
    Vec factors(rows, 1);
    for (auto& [p, qs] : by_prime)
        for (std::size_t i = 0; i < qs.size(); ++i) factors[i] = checked_mul(factors[i], qs[i]);
    std::sort(factors.begin(), factors.end());  // d1 | d2 | ... ascending
    return factors;
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(Int v) {
    if (v < 2) throw std::invalid_argument("abelian_groups_of_order: need v >= 2");
    // Factor v, take one exponent partition per prime, combine.
    std::vector<std::pair<Int, Int>> facts;  // (p, e)
    Int m = v;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        Int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        facts.emplace_back(p, e);
    }
    if (m > 1) facts.emplace_back(m, 1);

    std::vector<std::vector<Vec>> per_prime;  // partitions of each exponent
    for (auto& [p, e] : facts) {
        std::vector<Vec> parts;
        Vec cur;
        partitions_of(e, e, cur, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<AbelianGroup> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    for (;;) {
        std::vector<std::pair<Int, Int>> primary;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            Int p = facts[i].first;
            for (Int e : per_prime[i][pick[i]]) primary.emplace_back(p, ipow_checked(p, e));
        }
        out.emplace_back(AbelianGroup(invariant_factors(std::move(primary))));
        // odometer over partition choices
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_prime[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const AbelianGroup& a, const AbelianGroup& b) { return a.moduli < b.moduli; });
    return out;
}

// ---------------------------------------------------------------------------
// Prime-field polynomial helpers for modulus construction.

namespace {

using Poly = Vec;  // coefficients c0..cd over Z_p, trailing (leading) zeros stripped

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& b, Int p) {
    a = trim(std::move(a));
    Int db = static_cast<Int>(b.size()) - 1;  // b monic of degree db
    while (static_cast<Int>(a.size()) - 1 >= db && !a.empty()) {
        Int shift = static_cast<Int>(a.size()) - 1 - db;
        Int c = a.back();
        for (Int i = 0; i <= db; ++i) {
            Int& t = a[static_cast<std::size_t>(shift + i)];
            t = ((t - c * b[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

bool divides(const Poly& g, const Poly& f, Int p) { return poly_mod(f, g, p).empty(); }

// Monic polynomial of degree d whose non-leading coefficients are the
// base-p digits of idx.
Poly monic_from_index(Int d, Int idx, Int p) {
    Poly g(static_cast<std::size_t>(d + 1), 0);
    for (Int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = idx % p;
        idx /= p;
    }
    g[static_cast<std::size_t>(d)] = 1;
    return g;
}

bool is_irreducible(const Poly& f, Int p) {
    Int k = static_cast<Int>(f.size()) - 1;
    if (k <= 0) return false;
    if (k == 1) return true;
    for (Int d = 1; 2 * d <= k; ++d) {
        Int count = ipow_checked(p, d);
        for (Int idx = 0; idx < count; ++idx) {
            if (divides(monic_from_index(d, idx, p), f, p)) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField FiniteField::make(Int p, Int k, const Budget& budget) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field extension degree must be >= 1");
    Int size = 1;
    for (Int i = 0; i < k; ++i) {
        size = checked_mul(size, p);
        if (size > budget.max_field_size) throw BudgetExceeded("field size exceeds budget");
    }
    Int count = ipow_checked(p, k);
    for (Int idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(k, idx, p);
        if (is_irreducible(f, p)) return FiniteField(p, k, std::move(f), size);
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FiniteField FiniteField::with_modulus(Int p, Vec modulus, const Budget& budget) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    Int k = static_cast<Int>(modulus.size()) - 1;
    if (k < 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (Int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must be reduced mod p");
    Int size = 1;
    for (Int i = 0; i < k; ++i) {
        size = checked_mul(size, p);
        if (size > budget.max_field_size) throw BudgetExceeded("field size exceeds budget");
    }
    if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    return FiniteField(p, k, std::move(modulus), size);
}

FieldElement FiniteField::one() const {
    FieldElement e = zero();
    e[0] = 1;
    return e;
}

FieldElement FiniteField::from_int(Int idx) const {
    if (idx < 0 || idx >= size_) throw std::invalid_argument("field element index out of range");
    FieldElement e(static_cast<std::size_t>(k_));
    for (Int i = 0; i < k_; ++i) {
        e[static_cast<std::size_t>(i)] = idx % p_;
        idx /= p_;
    }
    return e;
}

Int FiniteField::to_int(const FieldElement& e) const {
    if (static_cast<Int>(e.size()) != k_) throw std::invalid_argument("field element size mismatch");
    Int idx = 0;
    for (std::size_t i = e.size(); i-- > 0;) idx = idx * p_ + e[i];
    return idx;
}

bool FiniteField::is_zero(const FieldElement& a) const {
    for (Int c : a)
        if (c) return false;
    return true;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((a[i] - b[i]) % p_ + p_) % p_;
    return r;
}

FieldElement FiniteField::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
    Vec prod(static_cast<std::size_t>(2 * k_ - 1), 0);
    for (Int i = 0; i < k_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (Int j = 0; j < k_; ++j) {
            auto& t = prod[static_cast<std::size_t>(i + j)];
            t = (t + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p_;
        }
    }
    // reduce modulo the field polynomial
    for (Int d = 2 * k_ - 2; d >= k_; --d) {
        Int c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (Int i = 0; i < k_; ++i) {
            auto& t = prod[static_cast<std::size_t>(d - k_ + i)];
            t = ((t - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
    }
    prod.resize(static_cast<std::size_t>(k_));
    return prod;
}

FieldElement FiniteField::pow(const FieldElement& a, Int e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElement r = one(), b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::invalid_argument("division by zero in finite field");
    // a^(p^k - 2); fine at these field sizes and avoids a separate
    // polynomial extended-Euclid path.
    return pow(a, size_ - 2);
}

Int FiniteField::element_order(const FieldElement& a) const {
    if (is_zero(a)) throw std::invalid_argument("zero has no multiplicative order");
    Int n = size_ - 1;
    Int ord = n;
    Int m = n;
    for (Int q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        while (ord % q == 0 && to_int(pow(a, ord / q)) == to_int(one())) ord /= q;
    }
    if (m > 1)
        while (ord % m == 0 && to_int(pow(a, ord / m)) == to_int(one())) ord /= m;
    return ord;
}

FieldElement FiniteField::primitive_element() const {
    for (Int idx = 1; idx < size_; ++idx) {
        FieldElement e = from_int(idx);
        if (element_order(e) == size_ - 1) return e;
    }
    throw std::logic_error("no primitive element found");  // unreachable
}

std::vector<Int> FiniteField::discrete_log_table(const FieldElement& theta) const {
    if (element_order(theta) != size_ - 1)
        throw std::invalid_argument("discrete_log_table: element is not primitive");
    std::vector<Int> table(static_cast<std::size_t>(size_), -1);
    FieldElement cur = one();
    for (Int a = 0; a < size_ - 1; ++a) {
        table[static_cast<std::size_t>(to_int(cur))] = a;
        cur = mul(cur, theta);
    }
    return table;
}

}  // namespace msc
