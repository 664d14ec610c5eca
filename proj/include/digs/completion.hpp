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

// Basis checking, completion and reduced bases.

#ifndef DIGS_COMPLETION_HPP
#define DIGS_COMPLETION_HPP

#include <array>
#include <optional>
#include <vector>

#include "digs/compositions.hpp"

namespace digs {

    enum class Verdict { GS, GSUpToBound, NotGS };
    std::string_view to_string(Verdict v);

    struct Witness {
        Composition composition;
        DiPolynomial remainder;
    };

    struct ClosureRecord {
        std::size_t rule;
        ClosureVerdict verdict;
    };

    struct CheckConfig {
        unsigned rm_depth = 8;
        int threads = 1;
    };

    struct CheckReport {
        Verdict verdict = Verdict::GS;
        unsigned bound = 0;  // meaningful for GSUpToBound
        std::vector<Witness> witnesses;
        std::array<std::size_t, kCompositionKinds> counts{};
        // Every two-rule and left-multiplication composition, in enumeration order.
        std::vector<Composition> inventory;
        // One entry per non-strong rule.
        std::vector<ClosureRecord> closures;
    };

    CheckReport check_gs(const RuleSet& set, const CheckConfig& cfg = {});

    enum class AddPolicy {
        // Add monic(value) of a composition that does not reduce to zero.
        CompositionValue,
        // Add monic(remainder).
        NormalForm,
    };

    struct CompletionConfig {
        std::size_t fuel = 512;  // rules that may be added
        unsigned rm_depth = 8;
        int threads = 1;
        AddPolicy policy = AddPolicy::CompositionValue;
        // Rules [0, closed_prefix) are known to be closed among themselves; only
        // compositions involving a later rule are examined.
        std::size_t closed_prefix = 0;
    };

    enum class CompletionStatus { Complete, FuelExhausted };
    std::string_view to_string(CompletionStatus s);

    struct LogEntry {
        std::size_t rule;  // id of the added rule
        CompositionKind kind;
        NormalDiword ambiguity;
        std::size_t first;
        std::size_t second;
        std::optional<Letter> letter;
        Word witness;  // right multiplication only
    };

    struct CompletionResult {
        RuleSet basis;
        CompletionStatus status = CompletionStatus::Complete;
        // Some right-multiplication closure stayed ClosedUpToBound.
        bool bounded = false;
        unsigned bound = 0;
        std::vector<LogEntry> log;
    };

    // Throws std::invalid_argument when fuel < 1.
    CompletionResult complete(const RuleSet& initial, const CompletionConfig& cfg = {});

    struct ReduceReport {
        // The rules selected by the first pass, before any verification.
        RuleSet first_pass;
        std::size_t iterations = 0;
        CheckReport final_check;
        CompletionStatus status = CompletionStatus::Complete;
    };

    /* Rebuilds a basis in which every rule's support is irreducible by the
     * other rules: one rule per leading monomial, selection by increasing
     * leading monomial, inter-reduced tails. The candidate is verified with
     * check_gs; on failure it is completed and the pass repeats, all under the
     * configured fuel.
     *
     * Throws std::invalid_argument if the input is NotGS.
     */
    std::pair<RuleSet, ReduceReport> reduce_basis(const RuleSet& set, const CompletionConfig& cfg = {});

    // The reduced property: every support diword of each rule is irreducible
    // with respect to the remaining rules.
    bool is_reduced(const RuleSet& set);

}  // namespace digs

#endif  // DIGS_COMPLETION_HPP
