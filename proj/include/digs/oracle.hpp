/* Copyright 2026 The digs Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// Brute-force ideal membership: exact row reduction over every S-diword
// instantiation up to a length bound. Independent of the reduction engine.

#ifndef DIGS_ORACLE_HPP
#define DIGS_ORACLE_HPP

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "digs/rewriter.hpp"

namespace digs {

    /* A diword template a . s . b over X u {s} with center position m in
     * 1..|a|+1+|b|, where the slot s counts as a single letter. Any center is
     * allowed; the value need not be a normal S-diword.
     */
    struct SDiword {
        std::size_t rule;
        Word left;
        Word right;
        std::uint32_t center;

        bool operator==(const SDiword&) const = default;
    };

    /* Value of the template, computed from the two products alone:
     * center inside a:  [a]_m -| s -| [b]_1
     * center on s:      [a] |- s -| [b]
     * center inside b:  [a] |- s |- [b]_{m-|a|-1}
     */
    DiPolynomial sdiword_value(const SDiword& t, const RuleSet& set);

    struct Membership {
        bool certified = false;
        // f = sum coeff * sdiword_value(template) when certified.
        std::vector<std::pair<SDiword, Coefficient>> combination;
    };

    class SpanBasis {
    public:
        // Every template whose word a s~ b has length <= bound. Keeps a
        // reference to `set`.
        SpanBasis(const RuleSet& set, std::size_t bound);

        std::size_t bound() const { return bound_; }
        std::size_t generators() const { return templates_.size(); }
        std::size_t rank() const { return pivots_.size(); }

        // Throws std::invalid_argument if f has a term longer than the bound.
        Membership membership(const DiPolynomial& f) const;

    private:
        using Vec = std::map<std::size_t, Coefficient, std::greater<>>;
        using Combo = std::map<std::size_t, Coefficient>;
        struct Row {
            Vec entries;  // leading coefficient 1
            Combo combo;
        };

        std::optional<Vec> to_vec(const DiPolynomial& p) const;
        // Eliminates with existing pivots from the top; stops at the first
        // coordinate without a pivot.
        void eliminate(Vec& v, Combo& c) const;

        const RuleSet* set_;
        std::size_t bound_;
        std::unordered_map<NormalDiword, std::size_t, NormalDiwordHash> index_;
        std::vector<SDiword> templates_;
        std::unordered_map<std::size_t, Row> pivots_;
    };

    // Default bound: longest support word of f plus 2.
    Membership span_membership(const DiPolynomial& f, const RuleSet& set, std::optional<std::size_t> bound = {});

    // sum coeff * sdiword_value(template).
    DiPolynomial reconstruct(const Membership& m, const RuleSet& set);

}  // namespace digs

#endif  // DIGS_ORACLE_HPP
