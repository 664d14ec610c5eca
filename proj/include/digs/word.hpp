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

// Alphabets, associative words and monomial word orders.

#ifndef DIGS_WORD_HPP
#define DIGS_WORD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace digs {

    /* A letter is an index into an Alphabet. Codes are assigned so that the
     * numeric order of codes is the order of the symbols: the symbol listed
     * first in a declaration gets the largest code.
     */
    using Letter = char16_t;

    /* A word over the alphabet. Words carried by diwords are never empty; the
     * same type doubles as a (possibly empty) left or right context.
     */
    using Word = std::basic_string<Letter>;

    class Alphabet {
    public:
        // Symbols are listed greatest-first. Throws std::invalid_argument on an
        // empty list, an empty name, or a duplicate.
        explicit Alphabet(std::vector<std::string> greatest_first);

        std::size_t size() const { return names_.size(); }

        // Name of a letter code.
        const std::string& name(Letter letter) const;

        std::optional<Letter> find(std::string_view name) const;

        // Letter codes in declaration order (greatest first).
        std::vector<Letter> letters() const;

        const std::vector<std::string>& names_greatest_first() const { return names_; }

        bool operator==(const Alphabet& other) const { return names_ == other.names_; }

    private:
        std::vector<std::string> names_;
    };

    // Space separated rendering of a word, e.g. "x1 x2 x3".
    std::string to_string(const Word& word, const Alphabet& alphabet);

    /* Comparison contract on words. Implementations must be strict total orders
     * satisfying u > v => uw > vw and wu > wv.
     */
    class WordOrder {
    public:
        virtual ~WordOrder() = default;
        virtual std::strong_ordering compare(const Word& lhs, const Word& rhs) const = 0;
        virtual std::string name() const = 0;
    };

    // Length first, then lexicographic by letter code.
    class DegLexOrder final : public WordOrder {
    public:
        std::strong_ordering compare(const Word& lhs, const Word& rhs) const override {
            return deglex_compare(lhs, rhs);
        }
        std::string name() const override { return "deglex"; }

        static std::strong_ordering deglex_compare(const Word& lhs, const Word& rhs) {
            if (lhs.size() != rhs.size()) {
                return lhs.size() <=> rhs.size();
            }
            int c = lhs.compare(rhs);
            return c <=> 0;
        }
    };

    // The process-wide deg-lex instance; polynomials default to it.
    const WordOrder& deglex_order();
    std::shared_ptr<const WordOrder> deglex_order_ptr();

    // Looks up a built-in order by name ("deglex"). Throws std::invalid_argument.
    std::shared_ptr<const WordOrder> order_by_name(std::string_view name);

    /* Samples random words and checks strictness, transitivity and the
     * monomial law. Returns a description of the first violation found.
     */
    std::optional<std::string> find_monomial_violation(const WordOrder& order, const Alphabet& alphabet,
                                                       std::size_t samples = 2000, std::uint64_t seed = 1);

    // Validates a user supplied order; throws std::invalid_argument on any violation.
    std::shared_ptr<const WordOrder> checked_order(std::shared_ptr<const WordOrder> order, const Alphabet& alphabet);

}  // namespace digs

#endif  // DIGS_WORD_HPP
