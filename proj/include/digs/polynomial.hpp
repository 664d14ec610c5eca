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

// Elements of the free dialgebra over the rationals and their leading-term data.

#ifndef DIGS_POLYNOMIAL_HPP
#define DIGS_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "digs/diword.hpp"

namespace digs {

    // Exact rational coefficient; GMP keeps it canonical after every operation.
    using Coefficient = mpq_class;

    struct Term {
        NormalDiword diword;
        Coefficient coeff;

        bool operator==(const Term&) const = default;
    };

    /* A finite linear combination of normal diwords with nonzero rational
     * coefficients. Terms are kept strictly decreasing under the center order
     * induced by the polynomial's word order, so the first term is the leading
     * term. The word order is referenced, not owned.
     */
    class DiPolynomial {
    public:
        DiPolynomial() : order_(&deglex_order()) {}
        explicit DiPolynomial(const WordOrder& order) : order_(&order) {}
        DiPolynomial(NormalDiword d, const WordOrder& order = deglex_order());
        DiPolynomial(NormalDiword d, Coefficient c, const WordOrder& order = deglex_order());

        // Sorts, merges equal diwords and drops zero coefficients.
        static DiPolynomial from_terms(std::vector<Term> terms, const WordOrder& order = deglex_order());

        // Trusts the caller: terms already strictly decreasing with nonzero coefficients.
        static DiPolynomial from_sorted_terms(std::vector<Term> terms, const WordOrder& order);

        bool is_zero() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }
        std::span<const Term> terms() const { return terms_; }
        const WordOrder& order() const { return *order_; }

        // Throws std::logic_error on the zero polynomial.
        const Term& leading_term() const;
        const NormalDiword& leading() const { return leading_term().diword; }

        // Removes and returns the leading term.
        Term take_leading();

        Coefficient coefficient_of(const NormalDiword& d) const;
        std::size_t max_length() const;

        // Three-way comparison of diwords under this polynomial's order.
        std::strong_ordering compare_diwords(const NormalDiword& a, const NormalDiword& b) const;

        DiPolynomial& operator+=(const DiPolynomial& other);
        DiPolynomial& operator-=(const DiPolynomial& other);
        DiPolynomial& operator*=(const Coefficient& c);

        // this += c * other
        void add_scaled(const DiPolynomial& other, const Coefficient& c);

        friend DiPolynomial operator+(DiPolynomial lhs, const DiPolynomial& rhs) { return lhs += rhs; }
        friend DiPolynomial operator-(DiPolynomial lhs, const DiPolynomial& rhs) { return lhs -= rhs; }
        friend DiPolynomial operator*(DiPolynomial lhs, const Coefficient& c) { return lhs *= c; }
        friend DiPolynomial operator*(const Coefficient& c, DiPolynomial rhs) { return rhs *= c; }
        DiPolynomial operator-() const;

        bool operator==(const DiPolynomial& other) const { return terms_ == other.terms_; }

    private:
        const WordOrder* order_;
        std::vector<Term> terms_;
    };

    // The |- product, extended bilinearly.
    DiPolynomial product_right(const DiPolynomial& lhs, const DiPolynomial& rhs);

    // The -| product, extended bilinearly.
    DiPolynomial product_left(const DiPolynomial& lhs, const DiPolynomial& rhs);

    DiPolynomial mirror(const DiPolynomial& p);

    struct LeadingData {
        NormalDiword leading;
        Coefficient coeff;
        Word assoc_word;
        // The leading word strictly exceeds the word of the tail's leading term
        // (true when the tail is zero).
        bool strong;
    };

    // Throws std::invalid_argument on zero.
    LeadingData leading_data(const DiPolynomial& f);

    // Divides by the leading coefficient. Throws std::invalid_argument on zero.
    DiPolynomial monic(const DiPolynomial& f);

    // Canonical text, e.g. "2 [x1 x2 x3 @ 3] - 1/2 [x1 x3 @ 2]"; zero prints as "0".
    std::string to_string(const DiPolynomial& p, const Alphabet& alphabet);

}  // namespace digs

#endif  // DIGS_POLYNOMIAL_HPP
