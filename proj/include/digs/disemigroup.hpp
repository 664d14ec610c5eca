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

// Disemigroup presentations, their normal forms, and the four commutativity
// families with closed-form normal forms.

#ifndef DIGS_DISEMIGROUP_HPP
#define DIGS_DISEMIGROUP_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "digs/completion.hpp"

namespace digs {

    using Relation = std::pair<NormalDiword, NormalDiword>;

    /* Relations are stored oriented, lhs > rhs under the center order. Throws
     * std::invalid_argument when a relation has identical sides or uses a
     * letter outside the alphabet.
     */
    class Presentation {
    public:
        Presentation(Alphabet alphabet, std::vector<Relation> relations,
                     std::shared_ptr<const WordOrder> order = deglex_order_ptr());

        const Alphabet& alphabet() const { return alphabet_; }
        const std::vector<Relation>& relations() const { return relations_; }
        const std::shared_ptr<const WordOrder>& order_ptr() const { return order_; }

        // One rule lhs - rhs per relation, in stored order.
        RuleSet rules() const;

    private:
        Alphabet alphabet_;
        std::shared_ptr<const WordOrder> order_;
        std::vector<Relation> relations_;
    };

    class CompletionFailure : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    /* Completes a presentation once and answers normal-form queries against the
     * reduced basis. Relations are inter-reduced in increasing order of their
     * leading side, then the survivors are completed together.
     *
     * When max_query_len is nonzero, queries longer than max_query_len throw
     * std::out_of_range (the relations are only known up to some length).
     */
    class PresentationSolver {
    public:
        explicit PresentationSolver(const Presentation& p, CompletionConfig cfg = {}, std::size_t max_query_len = 0);

        const RuleSet& basis() const { return basis_; }
        bool bounded() const { return bounded_; }

        // Throws CompletionFailure if completion ran out of fuel.
        NormalDiword nf(const NormalDiword& d) const;
        bool equal(const NormalDiword& a, const NormalDiword& b) const { return nf(a) == nf(b); }

    private:
        RuleSet basis_;
        CompletionStatus status_ = CompletionStatus::Complete;
        bool bounded_ = false;
        std::size_t max_query_len_;
    };

    NormalDiword presentation_nf(const Presentation& p, const NormalDiword& d, std::size_t fuel = 512);
    bool word_problem(const Presentation& p, const NormalDiword& a, const NormalDiword& b, std::size_t fuel = 512);

    enum class Family { Commutative, Abelian, LeftCommutative, RightCommutative };
    std::string_view to_string(Family f);
    // Accepts "commutative", "abelian", "left-commutative", "right-commutative".
    Family family_by_name(std::string_view name);

    // Letters in increasing order (smallest symbol first).
    Word sort_word(const Word& u);

    // Letter at position m (1-based).
    Letter rho(const Word& u, std::uint32_t m);

    // First position of letter x in the sorted word w (1-based); w must contain x.
    std::uint32_t lambda(const Word& sorted, Letter x);

    // tau_u(m) = lambda_{sort(u)}(rho_u(m)).
    std::uint32_t tau(const Word& u, std::uint32_t m);

    // Multiset of letters as counts indexed by letter code.
    std::vector<std::size_t> cont(const Word& u, std::size_t alphabet_size);

    // Schema instances [d] - [d'] with word length <= bound (identical sides dropped).
    std::vector<Relation> family_relations(Family f, const Alphabet& a, std::size_t bound);
    RuleSet family_rules(Family f, const Alphabet& a, std::size_t bound);
    Presentation family_presentation(Family f, const Alphabet& a, std::size_t bound);

    // The finite reduced sets W (and, for RightCommutative, the printed W').
    RuleSet family_reduced(Family f, const Alphabet& a);

    // Normal form computed combinatorially, without rewriting.
    NormalDiword closed_form_nf(Family f, const NormalDiword& d);

    // Products of normal forms by the closed formulas (Commutative and Abelian).
    NormalDiword closed_form_product_right(Family f, const NormalDiword& a, const NormalDiword& b);
    NormalDiword closed_form_product_left(Family f, const NormalDiword& a, const NormalDiword& b);

    // The normal-form set described directly by its shape, word length <= max_len, increasing.
    std::vector<NormalDiword> family_normal_forms(Family f, const Alphabet& a, std::size_t max_len);

    struct RightCommutativeAudit {
        Verdict printed_verdict = Verdict::NotGS;   // check_gs on the printed W'
        bool irr_matches_mirror = false;             // Irr(W') vs mirror of left-commutative forms
        bool printed_matches_completion = false;     // W' vs reduced completion of S'
        bool schema_agrees_with_closed_form = false; // completion of S' vs closed_form_nf
        std::vector<std::string> discrepancies;

        bool consistent() const { return printed_verdict == Verdict::GS && irr_matches_mirror; }
    };

    RightCommutativeAudit audit_right_commutative(const Alphabet& a, std::size_t max_len = 4,
                                                  const CompletionConfig& cfg = {});

}  // namespace digs

#endif  // DIGS_DISEMIGROUP_HPP
