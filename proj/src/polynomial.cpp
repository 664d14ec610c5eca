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

#include "digs/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace digs {

    namespace {
        bool is_deglex(const WordOrder* order) { return order == &deglex_order(); }
    }  // namespace

    std::strong_ordering DiPolynomial::compare_diwords(const NormalDiword& a, const NormalDiword& b) const {
        if (is_deglex(order_)) {
            if (auto c = DegLexOrder::deglex_compare(a.word(), b.word()); c != std::strong_ordering::equal) {
                return c;
            }
            return a.center() <=> b.center();
        }
        return compare(a, b, *order_);
    }

    DiPolynomial::DiPolynomial(NormalDiword d, const WordOrder& order) : order_(&order) {
        terms_.push_back(Term{std::move(d), Coefficient(1)});
    }

    DiPolynomial::DiPolynomial(NormalDiword d, Coefficient c, const WordOrder& order) : order_(&order) {
        if (c != 0) {
            terms_.push_back(Term{std::move(d), std::move(c)});
        }
    }

    DiPolynomial DiPolynomial::from_terms(std::vector<Term> terms, const WordOrder& order) {
        DiPolynomial p(order);
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return p.compare_diwords(a.diword, b.diword) == std::strong_ordering::greater;
        });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().diword == t.diword) {
                p.terms_.back().coeff += t.coeff;
            } else {
                if (!p.terms_.empty() && p.terms_.back().coeff == 0) {
                    p.terms_.pop_back();
                }
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) {
            p.terms_.pop_back();
        }
        return p;
    }

    DiPolynomial DiPolynomial::from_sorted_terms(std::vector<Term> terms, const WordOrder& order) {
        DiPolynomial p(order);
        p.terms_ = std::move(terms);
        return p;
    }

    Term DiPolynomial::take_leading() {
        if (terms_.empty()) {
            throw std::logic_error("zero polynomial has no leading term");
        }
        Term t = std::move(terms_.front());
        terms_.erase(terms_.begin());
        return t;
    }

    const Term& DiPolynomial::leading_term() const {
        if (terms_.empty()) {
            throw std::logic_error("zero polynomial has no leading term");
        }
        return terms_.front();
    }

    Coefficient DiPolynomial::coefficient_of(const NormalDiword& d) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), d, [&](const Term& t, const NormalDiword& key) {
            return compare_diwords(t.diword, key) == std::strong_ordering::greater;
        });
        if (it != terms_.end() && it->diword == d) {
            return it->coeff;
        }
        return Coefficient(0);
    }

    std::size_t DiPolynomial::max_length() const {
        std::size_t m = 0;
        for (const auto& t : terms_) m = std::max(m, t.diword.length());
        return m;
    }

    void DiPolynomial::add_scaled(const DiPolynomial& other, const Coefficient& c) {
        if (c == 0 || other.terms_.empty()) return;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        while (a != terms_.end() || b != other.terms_.end()) {
            if (b == other.terms_.end()) {
                merged.push_back(std::move(*a++));
                continue;
            }
            if (a == terms_.end()) {
                merged.push_back(Term{b->diword, b->coeff * c});
                ++b;
                continue;
            }
            auto cmp = compare_diwords(a->diword, b->diword);
            if (cmp == std::strong_ordering::greater) {
                merged.push_back(std::move(*a++));
            } else if (cmp == std::strong_ordering::less) {
                merged.push_back(Term{b->diword, b->coeff * c});
                ++b;
            } else {
                Coefficient sum = a->coeff + b->coeff * c;
                if (sum != 0) {
                    merged.push_back(Term{std::move(a->diword), std::move(sum)});
                }
                ++a;
                ++b;
            }
        }
        terms_ = std::move(merged);
    }

    DiPolynomial& DiPolynomial::operator+=(const DiPolynomial& other) {
        add_scaled(other, Coefficient(1));
        return *this;
    }

    DiPolynomial& DiPolynomial::operator-=(const DiPolynomial& other) {
        add_scaled(other, Coefficient(-1));
        return *this;
    }

    DiPolynomial& DiPolynomial::operator*=(const Coefficient& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.coeff *= c;
        }
        return *this;
    }

    DiPolynomial DiPolynomial::operator-() const {
        DiPolynomial out = *this;
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    namespace {
        template <class Product>
        DiPolynomial bilinear(const DiPolynomial& lhs, const DiPolynomial& rhs, Product product) {
            std::vector<Term> terms;
            terms.reserve(lhs.size() * rhs.size());
            for (const auto& s : lhs.terms()) {
                for (const auto& t : rhs.terms()) {
                    terms.push_back(Term{product(s.diword, t.diword), s.coeff * t.coeff});
                }
            }
            return DiPolynomial::from_terms(std::move(terms), lhs.order());
        }
    }  // namespace

    DiPolynomial product_right(const DiPolynomial& lhs, const DiPolynomial& rhs) {
        return bilinear(lhs, rhs, [](const NormalDiword& a, const NormalDiword& b) { return product_right(a, b); });
    }

    DiPolynomial product_left(const DiPolynomial& lhs, const DiPolynomial& rhs) {
        return bilinear(lhs, rhs, [](const NormalDiword& a, const NormalDiword& b) { return product_left(a, b); });
    }

    DiPolynomial mirror(const DiPolynomial& p) {
        std::vector<Term> terms;
        terms.reserve(p.size());
        for (const auto& t : p.terms()) terms.push_back(Term{mirror(t.diword), t.coeff});
        return DiPolynomial::from_terms(std::move(terms), p.order());
    }

    LeadingData leading_data(const DiPolynomial& f) {
        if (f.is_zero()) {
            throw std::invalid_argument("leading data of the zero polynomial");
        }
        const Term& lt = f.terms().front();
        bool strong = true;
        if (f.size() > 1) {
            const Word& tail_word = f.terms()[1].diword.word();
            strong = f.order().compare(lt.diword.word(), tail_word) == std::strong_ordering::greater;
        }
        return LeadingData{lt.diword, lt.coeff, lt.diword.word(), strong};
    }

    DiPolynomial monic(const DiPolynomial& f) {
        if (f.is_zero()) {
            throw std::invalid_argument("cannot make the zero polynomial monic");
        }
        Coefficient inv = 1 / f.terms().front().coeff;
        return f * inv;
    }

    std::string to_string(const DiPolynomial& p, const Alphabet& alphabet) {
        if (p.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : p.terms()) {
            Coefficient c = t.coeff;
            if (first) {
                if (c < 0) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            if (c != 1) {
                out += c.get_str() + " ";
            }
            out += to_string(t.diword, alphabet);
            first = false;
        }
        return out;
    }

}  // namespace digs
