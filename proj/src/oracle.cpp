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

#include "digs/oracle.hpp"

#include <stdexcept>

namespace digs {

    namespace {
        std::vector<Word> words_up_to(std::size_t k, std::size_t max_len) {
            std::vector<Word> out{Word{}};
            std::vector<Word> layer{Word{}};
            for (std::size_t n = 1; n <= max_len; ++n) {
                std::vector<Word> next;
                for (const Word& w : layer) {
                    for (std::size_t c = 0; c < k; ++c) next.push_back(w + Word(1, static_cast<Letter>(c)));
                }
                out.insert(out.end(), next.begin(), next.end());
                layer = std::move(next);
            }
            return out;
        }
    }  // namespace

    DiPolynomial sdiword_value(const SDiword& t, const RuleSet& set) {
        const WordOrder& order = set.order();
        const DiPolynomial& s = set[t.rule].poly;
        const std::size_t k = t.left.size() + 1;
        if (t.center < 1 || t.center > k + t.right.size()) {
            throw std::invalid_argument("template center out of range");
        }
        auto mono = [&](const Word& w, std::uint32_t m) {
            return DiPolynomial(NormalDiword(w, m), order);
        };
        DiPolynomial v = s;
        if (t.center < k) {
            v = product_left(mono(t.left, t.center), v);
            if (!t.right.empty()) v = product_left(v, mono(t.right, 1));
        } else if (t.center == k) {
            if (!t.left.empty()) v = product_right(mono(t.left, 1), v);
            if (!t.right.empty()) v = product_left(v, mono(t.right, 1));
        } else {
            if (!t.left.empty()) v = product_right(mono(t.left, 1), v);
            v = product_right(v, mono(t.right, static_cast<std::uint32_t>(t.center - k)));
        }
        return v;
    }

    SpanBasis::SpanBasis(const RuleSet& set, std::size_t bound) : set_(&set), bound_(bound) {
        auto coords = all_diwords(set.alphabet(), bound, set.order());
        for (std::size_t i = 0; i < coords.size(); ++i) index_.emplace(coords[i], i);

        const auto contexts = words_up_to(set.alphabet().size(), bound);
        for (const auto& r : set.rules()) {
            const std::size_t ls = r.lead.assoc_word.size();
            if (ls > bound) continue;
            for (const Word& a : contexts) {
                if (a.size() + ls > bound) break;
                for (const Word& b : contexts) {
                    if (a.size() + ls + b.size() > bound) break;
                    const auto slots = static_cast<std::uint32_t>(a.size() + 1 + b.size());
                    for (std::uint32_t m = 1; m <= slots; ++m) templates_.push_back(SDiword{r.id, a, b, m});
                }
            }
        }

        for (std::size_t g = 0; g < templates_.size(); ++g) {
            auto vec = to_vec(sdiword_value(templates_[g], set));
            if (!vec) continue;
            Combo combo{{g, Coefficient(1)}};
            eliminate(*vec, combo);
            if (vec->empty()) continue;
            const std::size_t lead = vec->begin()->first;
            const Coefficient inv = 1 / vec->begin()->second;
            for (auto& [_, c] : *vec) c *= inv;
            for (auto& [_, c] : combo) c *= inv;
            pivots_.emplace(lead, Row{std::move(*vec), std::move(combo)});
        }
    }

    std::optional<SpanBasis::Vec> SpanBasis::to_vec(const DiPolynomial& p) const {
        Vec v;
        for (const auto& t : p.terms()) {
            auto it = index_.find(t.diword);
            if (it == index_.end()) return std::nullopt;
            v.emplace(it->second, t.coeff);
        }
        return v;
    }

    void SpanBasis::eliminate(Vec& v, Combo& c) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.begin()->first);
            if (it == pivots_.end()) return;
            const Coefficient factor = v.begin()->second;
            for (const auto& [k, val] : it->second.entries) {
                Coefficient& slot = v[k];
                slot -= factor * val;
                if (slot == 0) v.erase(k);
            }
            for (const auto& [k, val] : it->second.combo) {
                Coefficient& slot = c[k];
                slot -= factor * val;
                if (slot == 0) c.erase(k);
            }
        }
    }

    Membership SpanBasis::membership(const DiPolynomial& f) const {
        auto vec = to_vec(f);
        if (!vec) {
            throw std::invalid_argument("polynomial has terms longer than the oracle bound");
        }
        Combo combo;
        eliminate(*vec, combo);
        Membership out;
        if (!vec->empty()) return out;
        out.certified = true;
        // f - sum combo * g = 0 after elimination, so f = -sum combo * g.
        for (const auto& [g, c] : combo) out.combination.emplace_back(templates_[g], -c);
        return out;
    }

    Membership span_membership(const DiPolynomial& f, const RuleSet& set, std::optional<std::size_t> bound) {
        const std::size_t need = f.max_length();
        const std::size_t b = bound.value_or(need + 2);
        if (b < need) {
            throw std::invalid_argument("oracle bound is smaller than the polynomial's longest word");
        }
        return SpanBasis(set, b).membership(f);
    }

    DiPolynomial reconstruct(const Membership& m, const RuleSet& set) {
        DiPolynomial sum = set.zero();
        for (const auto& [t, c] : m.combination) sum.add_scaled(sdiword_value(t, set), c);
        return sum;
    }

}  // namespace digs
