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

#include <map>

#include "msc/channel.hpp"
#include "msc/core.hpp"
#include "msc/sidon.hpp"

namespace msc {

/// Parameters of the Sidon-set code: all length-n multisets x over [q]
/// whose weighted sum  sum_i x_i * b_i  hits the target coset element b.
struct SidonCodeParams {
    SidonSet sidon;      // q = sidon.size() elements b_0..b_{q-1}
    GroupElement coset;  // the target b
    Int n = 0;

    Int q() const { return sidon.size(); }
};

class DegenerateCodeError : public std::runtime_error {
   public:
    explicit DegenerateCodeError(const std::string& what) : std::runtime_error(what) {}
};

class DecodeError : public std::runtime_error {
   public:
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

/// A multiset code: at least two codewords of common length n over [q],
/// kept in colexicographic order.
struct ExplicitCode {
    Int q = 0;
    Int n = 0;
    std::vector<MultiplicityVector> words;

    static ExplicitCode from_words(Int q, Int n, std::vector<MultiplicityVector> words);
    bool contains(const MultiplicityVector& w) const;

   private:
    friend Int min_distance(const ExplicitCode&);
    mutable std::optional<Int> cached_min_distance_;
};

/// Filtered simplex enumeration of the coset code. Throws
/// DegenerateCodeError when fewer than two codewords satisfy the coset
/// constraint.
ExplicitCode build_sidon_code(const SidonCodeParams& params);

/// Exact minimum pairwise d1 distance (quadratic scan, cached).
Int min_distance(const ExplicitCode& code);

/// Both capabilities are characterized by minimum distance > h. They are
/// distinct operations because they certify different channel guarantees:
/// unique recovery after h deletions vs. detection of h substitutions.
bool can_correct_deletions(const ExplicitCode& code, Int h);
bool can_detect_substitutions(const ExplicitCode& code, Int h);

struct DecodeResult {
    MultiplicityVector codeword;
    Int cost = 0;      // inferred insertions + deletions
    bool unique = true;
};

/// Syndrome decoder for pure-deletion (or erasure) channels over a Sidon
/// code: the deficit t = n - |received| is known, and the B_h property
/// makes the size-t deleted sub-multiset recoverable from the group
/// syndrome b - sum received_i * b_i via a precomputed table.
class SyndromeDecoder {
   public:
    explicit SyndromeDecoder(SidonCodeParams params);

    /// received must have length n - t with 0 <= t <= h; erased symbols
    /// are stripped by the caller and simply shorten the received vector.
    DecodeResult decode(const MultiplicityVector& received) const;

    const SidonCodeParams& params() const { return params_; }

   private:
    SidonCodeParams params_;
    // per deficit t: group element index of the missing sum -> missing counts
    std::vector<std::map<Int, Vec>> table_;
};

/// One-shot convenience wrapper around SyndromeDecoder.
DecodeResult syndrome_decode(const SidonCodeParams& params, const MultiplicityVector& received);

/// Minimum-cost decoding against an explicit codeword list, where
/// cost(x -> r) counts the deletions plus insertions transforming x into
/// the received counts. Erasure symbols are stripped first and act as
/// deletions. Recovery is guaranteed whenever
/// ins + del + 2*sub + ers < min_distance; beyond that ties are reported
/// with unique = false.
DecodeResult nearest_decode(const ExplicitCode& code, const ChannelOutput& received);

struct OptimalCodeResult {
    Int size = 0;
    bool exact = false;
    std::vector<MultiplicityVector> witness;
};

/// M_q(n, h): the largest number of length-n multisets over [q] with
/// pairwise d1 distance > h, via exact branch-and-bound (maximum clique on
/// the complement of the conflict graph with greedy coloring bounds).
/// Budget exhaustion returns the best found size flagged inexact.
OptimalCodeResult exact_optimal_size(Int q, Int n, Int h, const Budget& budget = {});

/// Sweeps all coset targets b in G and returns one of maximum code size;
/// the sizes over all b partition the simplex, so the best coset holds at
/// least |simplex| / |G| codewords.
std::pair<GroupElement, Int> best_coset(const AbelianGroup& G,
                                        const std::vector<GroupElement>& B, Int n);

/// Message index <-> codeword bijection by colexicographic rank within the
/// code.
MultiplicityVector rank_encode(const ExplicitCode& code, Int index);
Int rank_decode(const ExplicitCode& code, const MultiplicityVector& word);

}  // namespace msc
