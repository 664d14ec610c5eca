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

// Critical situations between rules and the right-multiplication closure test.

#ifndef DIGS_COMPOSITIONS_HPP
#define DIGS_COMPOSITIONS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "digs/rewriter.hpp"

namespace digs {

    enum class CompositionKind {
        Inclusion,
        Intersection,
        LeftMultiplication,
        RightMultiplication,
        LeftMultInclusion,
        RightMultInclusion,
        LeftMultIntersection,
        RightMultIntersection,
    };

    inline constexpr std::size_t kCompositionKinds = 8;

    std::string_view to_string(CompositionKind kind);

    // Left and right multiplication involve a single rule and carry no
    // ambiguity of their own; the key used for them is [x f]_1 or [f u]_{|fu|}.
    bool is_multiplication(CompositionKind kind);

    struct Composition {
        CompositionKind kind;
        NormalDiword ambiguity;
        DiPolynomial value;
        std::size_t first;
        std::size_t second;
        Word left;   // context a of the clause
        Word right;  // context b of the clause
        std::optional<Letter> letter;
    };

    // f~ = a g~ b with (a, b) != (empty, empty) when f == g.
    std::vector<Composition> inclusion_compositions(const RuleSet& set, std::size_t f, std::size_t g);

    // Proper overlaps w = f~ b = a g~.
    std::vector<Composition> intersection_compositions(const RuleSet& set, std::size_t f, std::size_t g);

    // x -| f for every letter; empty for strong f.
    std::vector<Composition> left_multiplication_compositions(const RuleSet& set, std::size_t f);

    // Every two-rule and left-multiplication composition between `rule` and
    // the rules with id < rule, plus those of `rule` with itself, in a fixed order.
    std::vector<Composition> compositions_with(const RuleSet& set, std::size_t rule);

    // Every composition over all ordered pairs, deterministic order.
    std::vector<Composition> all_compositions(const RuleSet& set);

    struct ClosureVerdict {
        enum class Kind { Closed, ClosedUpToBound, Nontrivial };
        Kind kind = Kind::Closed;
        unsigned bound = 0;   // ClosedUpToBound: tail length that was not exceeded
        Word witness;         // Nontrivial: u with f |- [u]_{|u|} not reducing to zero
        DiPolynomial residual;
    };

    /* Decides whether f |- [u]_{|u|} reduces to zero for every nonempty u.
     *
     * Obligations are (rule, tail t) pairs meaning "s |- [t u]_{|tu|} is trivial
     * for every nonempty u". Discharging one reduces s |- [t x] for each letter
     * x; every non-strong occurrence (s', a', b') in the reduction trace yields
     * the obligation (s', b'), since a' |- s' -| b' followed by |- y equals
     * a' |- (s' |- [b' y]). A failing derived obligation only shows the
     * argument is stuck; the root product is then reduced directly and only a
     * nonzero root remainder is reported as Nontrivial. Tails longer than
     * depth_bound are not explored and downgrade the verdict.
     *
     * Throws std::invalid_argument when depth_bound < 1.
     */
    ClosureVerdict right_multiplication_closure(const RuleSet& set, std::size_t f, unsigned depth_bound = 8);

    // The RightMultiplication composition f |- [u]_{|u|}.
    Composition right_multiplication_composition(const RuleSet& set, std::size_t f, const Word& u);

    /* Reduces the composition value. Throws std::logic_error if the trace uses
     * an instantiation whose leading monomial is not below the ambiguity (not
     * above the value's own leading monomial for multiplication kinds).
     */
    DiPolynomial composition_remainder(const Composition& c, const RuleSet& set);

    inline bool is_trivial(const Composition& c, const RuleSet& set) {
        return composition_remainder(c, set).is_zero();
    }

}  // namespace digs

#endif  // DIGS_COMPOSITIONS_HPP
