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

#include "digs/rewriter.hpp"

#include <algorithm>
#include <stdexcept>

namespace digs {

    RuleSet::RuleSet(Alphabet alphabet, std::shared_ptr<const WordOrder> order)
        : alphabet_(std::move(alphabet)), order_(std::move(order)) {
        if (!order_) {
            throw std::invalid_argument("rule set needs a word order");
        }
    }

    std::size_t RuleSet::add(const DiPolynomial& p) {
        if (p.is_zero()) {
            throw std::invalid_argument("cannot add the zero polynomial as a rule");
        }
        for (const auto& t : p.terms()) {
            for (Letter c : t.diword.word()) {
                if (c >= alphabet_.size()) {
                    throw std::invalid_argument("rule uses a letter outside the alphabet");
                }
            }
        }
        DiPolynomial resorted = DiPolynomial::from_terms({p.terms().begin(), p.terms().end()}, *order_);
        DiPolynomial m = monic(resorted);
        LeadingData lead = leading_data(m);
        std::size_t id = rules_.size();
        by_word_[lead.assoc_word].push_back(id);
        lengths_.insert(lead.assoc_word.size());
        rules_.push_back(RewriteRule{std::move(m), std::move(lead), id});
        return id;
    }

    std::span<const std::size_t> RuleSet::rules_with_word(const Word& w) const {
        auto it = by_word_.find(w);
        if (it == by_word_.end()) return {};
        return it->second;
    }

    std::vector<std::uint32_t> p_set(const LeadingData& s, std::size_t left_len, std::size_t right_len) {
        const auto p = static_cast<std::uint32_t>(left_len + s.leading.center());
        if (!s.strong) return {p};
        std::vector<std::uint32_t> out;
        for (std::uint32_t m = 1; m <= left_len; ++m) out.push_back(m);
        out.push_back(p);
        const std::size_t mid = left_len + s.assoc_word.size();
        for (std::size_t m = mid + 1; m <= mid + right_len; ++m) out.push_back(static_cast<std::uint32_t>(m));
        return out;
    }

    bool admissible(const LeadingData& s, std::size_t left_len, std::size_t right_len, std::uint32_t m) {
        if (m == left_len + s.leading.center()) return true;
        if (!s.strong) return false;
        const std::size_t mid = left_len + s.assoc_word.size();
        return (m >= 1 && m <= left_len) || (m > mid && m <= mid + right_len);
    }

    DiPolynomial instantiate(const DiPolynomial& s, const LeadingData& lead, const Word& a, const Word& b,
                             std::uint32_t m) {
        if (!admissible(lead, a.size(), b.size(), m)) {
            throw std::invalid_argument("center is not admissible for this template");
        }
        const std::size_t la = a.size();
        const std::size_t ls = lead.assoc_word.size();
        const bool middle = m == la + lead.leading.center();
        std::vector<Term> terms;
        terms.reserve(s.size());
        for (const auto& t : s.terms()) {
            const Word& v = t.diword.word();
            std::uint32_t c;
            if (middle) {
                c = static_cast<std::uint32_t>(la + t.diword.center());
            } else if (m <= la) {
                c = m;
            } else {
                c = static_cast<std::uint32_t>(m - ls + v.size());
            }
            Word w;
            w.reserve(la + v.size() + b.size());
            w.append(a).append(v).append(b);
            terms.push_back(Term{NormalDiword(std::move(w), c), t.coeff});
        }
        return DiPolynomial::from_terms(std::move(terms), s.order());
    }

    DiPolynomial instantiate(const RewriteRule& s, const Word& a, const Word& b, std::uint32_t m) {
        return instantiate(s.poly, s.lead, a, b, m);
    }

    DiPolynomial instantiate(const RuleSet& set, const Occurrence& occ) {
        return instantiate(set[occ.rule], occ.left, occ.right, occ.center);
    }

    std::optional<Occurrence> find_occurrence(const NormalDiword& t, const RuleSet& set) {
        const Word& w = t.word();
        const std::size_t n = w.size();
        Word probe;
        for (std::size_t i = 0; i < n; ++i) {
            std::optional<std::size_t> best;
            std::size_t best_len = 0;
            for (std::size_t len : set.lengths()) {
                if (i + len > n) break;
                probe.assign(w, i, len);
                for (std::size_t id : set.rules_with_word(probe)) {
                    if (best && id >= *best) break;
                    if (admissible(set[id].lead, i, n - i - len, t.center())) {
                        best = id;
                        best_len = len;
                        break;
                    }
                }
            }
            if (best) {
                return Occurrence{*best, w.substr(0, i), w.substr(i + best_len), t.center()};
            }
        }
        return std::nullopt;
    }

    namespace {
        template <bool WithTrace>
        DiPolynomial reduce_impl(const DiPolynomial& f, const RuleSet& set, std::vector<TraceStep>* trace) {
            DiPolynomial work = DiPolynomial::from_terms({f.terms().begin(), f.terms().end()}, set.order());
            std::vector<Term> rest;
            while (!work.is_zero()) {
                const Term& lt = work.leading_term();
                auto occ = find_occurrence(lt.diword, set);
                if (!occ) {
                    rest.push_back(work.take_leading());
                    continue;
                }
                Coefficient c = lt.coeff;
                // Rules are monic, so the instantiation's leading term cancels lt exactly.
                work.add_scaled(instantiate(set, *occ), -c);
                if constexpr (WithTrace) {
                    trace->push_back(TraceStep{std::move(c), std::move(*occ)});
                }
            }
            return DiPolynomial::from_sorted_terms(std::move(rest), set.order());
        }
    }  // namespace

    Reduction normal_form(const DiPolynomial& f, const RuleSet& set) {
        Reduction r{set.zero(), {}};
        r.remainder = reduce_impl<true>(f, set, &r.trace);
        return r;
    }

    DiPolynomial reduce(const DiPolynomial& f, const RuleSet& set) { return reduce_impl<false>(f, set, nullptr); }

    DiPolynomial replay(const std::vector<TraceStep>& trace, const RuleSet& set) {
        DiPolynomial sum = set.zero();
        for (const auto& step : trace) sum.add_scaled(instantiate(set, step.occurrence), step.coeff);
        return sum;
    }

    std::vector<NormalDiword> all_diwords(const Alphabet& alphabet, std::size_t max_len, const WordOrder& order) {
        std::vector<NormalDiword> out;
        const std::size_t k = alphabet.size();
        for (std::size_t len = 1; len <= max_len; ++len) {
            Word w(len, Letter{0});
            std::vector<NormalDiword> layer;
            while (true) {
                for (std::uint32_t m = 1; m <= len; ++m) layer.emplace_back(w, m);
                // odometer increment, last letter fastest
                std::size_t pos = len;
                while (pos > 0 && w[pos - 1] + 1u == k) {
                    w[pos - 1] = 0;
                    --pos;
                }
                if (pos == 0) break;
                ++w[pos - 1];
            }
            out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
        }
        if (&order != &deglex_order()) {
            std::stable_sort(out.begin(), out.end(), [&](const NormalDiword& a, const NormalDiword& b) {
                return compare(a, b, order) == std::strong_ordering::less;
            });
        }
        return out;
    }

    std::vector<NormalDiword> enumerate_irr(const RuleSet& set, std::size_t max_len) {
        std::vector<NormalDiword> out;
        for (auto& d : all_diwords(set.alphabet(), max_len, set.order())) {
            if (is_irreducible(d, set)) out.push_back(std::move(d));
        }
        return out;
    }

}  // namespace digs
