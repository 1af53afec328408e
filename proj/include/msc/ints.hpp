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

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace msc {

// All vector entries, group residues and metric values are fixed 64-bit.
// Overflow throws instead of wrapping. Counting quantities that can grow
// beyond 64 bits (simplex cardinalities, bound evaluations) use BigInt/Rat.
using Int = std::int64_t;
using Vec = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Exact C(n, k) in 64 bits; throws on overflow rather than wrapping.
inline Int binom_int(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

inline BigInt binom_big(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (Int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt factorial_big(Int n) {
    BigInt r = 1;
    for (Int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt pow_big(const BigInt& base, Int e) {
    BigInt r = 1, b = base;
    for (Int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

inline Int ipow_checked(Int base, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Shared resource limits for searches and table constructions.
struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    Int max_field_size = Int(1) << 20;
    Int max_group_order = Int(1) << 20;
    std::uint64_t max_outputs = 1'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

// Cooperative budget ticker: call tick() at every search node.
class BudgetTicker {
   public:
    explicit BudgetTicker(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) return false;
        if (budget_.time_limit && (nodes_ & 0x3ff) == 0) {
            auto elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed > *budget_.time_limit) return false;
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

   private:
    Budget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// Counter-based generator (splitmix64): identical streams on every platform
// for a given seed, unlike the standard library distributions.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        std::uint64_t bound = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= bound);
        return v % n;
    }

    Int range(Int lo, Int hi) {  // inclusive
        return lo + static_cast<Int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

   private:
    std::uint64_t state_;
};

// Colexicographic order: compare at the last differing coordinate.
inline bool colex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace msc
