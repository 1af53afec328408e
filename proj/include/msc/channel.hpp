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

namespace msc {

struct ExplicitCode;  // codes.hpp

/// Impairment budget: counts of insertions, deletions, substitutions and
/// erasures. One substitution spends two units of the combined budget
/// h = ins + del + 2*sub; erasures cost the same as deletions.
struct ErrorPattern {
    Int ins = 0;
    Int del = 0;
    Int sub = 0;
    Int ers = 0;

    Int combined_budget() const { return ins + del + 2 * sub + ers; }
};

/// A received multiset: symbol counts over the alphabet plus the number of
/// erased symbols (the erasure symbol carries no alphabet information).
/// Cardinality as seen by the receiver is sum(counts) + erasures.
struct ChannelOutput {
    Vec counts;
    Int erasures = 0;

    Int cardinality() const;
    bool operator==(const ChannelOutput& o) const {
        return erasures == o.erasures && counts == o.counts;
    }
    bool operator<(const ChannelOutput& o) const {
        if (erasures != o.erasures) return erasures < o.erasures;
        return counts < o.counts;
    }
};

/// Applies a uniformly random impairment with exactly the given counts,
/// driven by the portable seeded generator; identical seeds give identical
/// outputs on every platform. Deleted/substituted/erased elements are
/// drawn from the (remaining) transmitted multiset, substitutions replace
/// a symbol by a uniformly random different symbol, insertions add uniform
/// symbols.
ChannelOutput apply_pattern(const MultiplicityVector& x, const ErrorPattern& p, std::uint64_t seed);

/// Exact set of channel outputs reachable from x with exactly the given
/// impairment counts.
std::vector<ChannelOutput> enumerate_outputs(const MultiplicityVector& x, const ErrorPattern& p,
                                             const Budget& budget = {});

/// Whether x and y can produce a common output under exactly the counts in
/// p applied to each.
bool confusable(const MultiplicityVector& x, const MultiplicityVector& y, const ErrorPattern& p,
                const Budget& budget = {});

/// Independent correction oracle: no two distinct codewords may share an
/// output under ANY impairment with counts componentwise at most p. For a
/// pure-deletion pattern this reduces to testing exactly min(del, n)
/// deletions; mixed patterns are tested over the full count lattice.
bool verify_correction_capability(const ExplicitCode& code, const ErrorPattern& p,
                                  const Budget& budget = {});

/// Detection oracle: no codeword reaches a DIFFERENT codeword under any
/// pattern of at most h substitutions.
bool verify_detection_capability(const ExplicitCode& code, Int h_sub, const Budget& budget = {});

}  // namespace msc
