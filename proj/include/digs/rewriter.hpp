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

// Rule sets, normal S-diwords and reduction to normal form.

#ifndef DIGS_REWRITER_HPP
#define DIGS_REWRITER_HPP

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "digs/polynomial.hpp"

namespace digs {

    struct RewriteRule {
        DiPolynomial poly;  // monic
        LeadingData lead;
        std::size_t id;
    };

    /* An ordered list of monic rules over a fixed alphabet and word order. Rule
     * ids are list positions. Rules are indexed by their associative word so
     * that occurrence search only probes factor lengths that some rule has.
     */
    class RuleSet {
    public:
        explicit RuleSet(Alphabet alphabet, std::shared_ptr<const WordOrder> order = deglex_order_ptr());

        const Alphabet& alphabet() const { return alphabet_; }
        const WordOrder& order() const { return *order_; }
        const std::shared_ptr<const WordOrder>& order_ptr() const { return order_; }

        // Stores monic(p), re-sorted under this set's order. Throws
        // std::invalid_argument on zero. Returns the new id.
        std::size_t add(const DiPolynomial& p);

        std::size_t size() const { return rules_.size(); }
        bool empty() const { return rules_.empty(); }
        const RewriteRule& operator[](std::size_t id) const { return rules_[id]; }
        std::span<const RewriteRule> rules() const { return rules_; }

        // Ids of rules whose associative word is w, ascending.
        std::span<const std::size_t> rules_with_word(const Word& w) const;

        // Distinct associative-word lengths present.
        const std::set<std::size_t>& lengths() const { return lengths_; }

        // A copy with the same alphabet and order but no rules.
        RuleSet empty_copy() const { return RuleSet(alphabet_, order_); }

        // The zero polynomial under this set's order.
        DiPolynomial zero() const { return DiPolynomial(*order_); }

    private:
        Alphabet alphabet_;
        std::shared_ptr<const WordOrder> order_;
        std::vector<RewriteRule> rules_;
        std::unordered_map<Word, std::vector<std::size_t>> by_word_;
        std::set<std::size_t> lengths_;
    };

    struct Occurrence {
        std::size_t rule;
        Word left;
        Word right;
        std::uint32_t center;

        bool operator==(const Occurrence&) const = default;
    };

    /* P([asb]): the centers at which the template a s b is normal. For strong s
     * this is {1..|a|} u {|a|+p(s)} u {|a s|+1 .. |a s b|}, otherwise only the
     * middle point.
     */
    std::vector<std::uint32_t> p_set(const LeadingData& s, std::size_t left_len, std::size_t right_len);
    bool admissible(const LeadingData& s, std::size_t left_len, std::size_t right_len, std::uint32_t m);

    /* The normal S-diword [a s b]_m as a polynomial: each term [v]_n of s becomes
     * a v b with center m (m <= |a|), |a|+n (m = |a|+p(s)) or m - |s| + |v|
     * (m > |a s|). Throws std::invalid_argument when m is not admissible.
     */
    DiPolynomial instantiate(const DiPolynomial& s, const LeadingData& lead, const Word& a, const Word& b,
                             std::uint32_t m);
    DiPolynomial instantiate(const RewriteRule& s, const Word& a, const Word& b, std::uint32_t m);
    DiPolynomial instantiate(const RuleSet& set, const Occurrence& occ);

    // Leftmost occurrence, ties broken by smallest rule id.
    std::optional<Occurrence> find_occurrence(const NormalDiword& t, const RuleSet& set);

    inline bool is_irreducible(const NormalDiword& t, const RuleSet& set) { return !find_occurrence(t, set); }

    struct TraceStep {
        Coefficient coeff;
        Occurrence occurrence;
    };

    struct Reduction {
        DiPolynomial remainder;
        // f - remainder = sum of coeff * instantiate(occurrence).
        std::vector<TraceStep> trace;
    };

    // Rewrites the greatest reducible term first until every term is irreducible.
    Reduction normal_form(const DiPolynomial& f, const RuleSet& set);

    // normal_form without recording the trace.
    DiPolynomial reduce(const DiPolynomial& f, const RuleSet& set);

    // Rebuilds sum of coeff * instantiate(occurrence) over a trace.
    DiPolynomial replay(const std::vector<TraceStep>& trace, const RuleSet& set);

    // Every normal diword of length <= max_len, in increasing order.
    std::vector<NormalDiword> all_diwords(const Alphabet& alphabet, std::size_t max_len,
                                          const WordOrder& order = deglex_order());

    // Irreducible diwords of length <= max_len, in increasing order.
    std::vector<NormalDiword> enumerate_irr(const RuleSet& set, std::size_t max_len);

}  // namespace digs

#endif  // DIGS_REWRITER_HPP
