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

#include "digs/compositions.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace digs {

    std::string_view to_string(CompositionKind kind) {
        switch (kind) {
            case CompositionKind::Inclusion: return "inclusion";
            case CompositionKind::Intersection: return "intersection";
            case CompositionKind::LeftMultiplication: return "left-multiplication";
            case CompositionKind::RightMultiplication: return "right-multiplication";
            case CompositionKind::LeftMultInclusion: return "left-mult-inclusion";
            case CompositionKind::RightMultInclusion: return "right-mult-inclusion";
            case CompositionKind::LeftMultIntersection: return "left-mult-intersection";
            case CompositionKind::RightMultIntersection: return "right-mult-intersection";
        }
        return "unknown";
    }

    bool is_multiplication(CompositionKind kind) {
        return kind == CompositionKind::LeftMultiplication || kind == CompositionKind::RightMultiplication;
    }

    namespace {
        Word letter_word(Letter x) { return Word(1, x); }

        std::uint32_t len32(std::size_t n) { return static_cast<std::uint32_t>(n); }
    }  // namespace

    std::vector<Composition> inclusion_compositions(const RuleSet& set, std::size_t f, std::size_t g) {
        std::vector<Composition> out;
        const RewriteRule& rf = set[f];
        const RewriteRule& rg = set[g];
        const Word& fw = rf.lead.assoc_word;
        const Word& gw = rg.lead.assoc_word;
        if (gw.size() > fw.size()) return out;
        const std::uint32_t pf = rf.lead.leading.center();
        for (std::size_t i = 0; i + gw.size() <= fw.size(); ++i) {
            if (fw.compare(i, gw.size(), gw) != 0) continue;
            Word a = fw.substr(0, i);
            Word b = fw.substr(i + gw.size());
            if (f == g && a.empty() && b.empty()) continue;
            if (admissible(rg.lead, a.size(), b.size(), pf)) {
                out.push_back(Composition{CompositionKind::Inclusion, rf.lead.leading,
                                          rf.poly - instantiate(rg, a, b, pf), f, g, a, b, std::nullopt});
                continue;
            }
            if (!rf.lead.strong || !rg.lead.strong) continue;
            for (Letter x : set.alphabet().letters()) {
                const Word xw = letter_word(x) + fw;
                out.push_back(Composition{CompositionKind::LeftMultInclusion, NormalDiword(xw, 1),
                                          instantiate(rf, letter_word(x), {}, 1) -
                                              instantiate(rg, letter_word(x) + a, b, 1),
                                          f, g, a, b, x});
            }
            for (Letter x : set.alphabet().letters()) {
                const Word wx = fw + letter_word(x);
                const std::uint32_t m = len32(wx.size());
                out.push_back(Composition{CompositionKind::RightMultInclusion, NormalDiword(wx, m),
                                          instantiate(rf, {}, letter_word(x), m) -
                                              instantiate(rg, a, b + letter_word(x), m),
                                          f, g, a, b, x});
            }
        }
        return out;
    }

    std::vector<Composition> intersection_compositions(const RuleSet& set, std::size_t f, std::size_t g) {
        std::vector<Composition> out;
        const RewriteRule& rf = set[f];
        const RewriteRule& rg = set[g];
        const Word& fw = rf.lead.assoc_word;
        const Word& gw = rg.lead.assoc_word;
        const std::size_t max_overlap = std::min(fw.size(), gw.size());
        // Smallest overlap (longest w) first, then by center.
        for (std::size_t k = 1; k < max_overlap; ++k) {
            if (fw.compare(fw.size() - k, k, gw, 0, k) != 0) continue;
            Word a = fw.substr(0, fw.size() - k);
            Word b = gw.substr(k);
            const Word w = fw + b;
            auto pf = p_set(rf.lead, 0, b.size());
            bool any = false;
            for (std::uint32_t m : pf) {
                if (!admissible(rg.lead, a.size(), 0, m)) continue;
                any = true;
                out.push_back(Composition{CompositionKind::Intersection, NormalDiword(w, m),
                                          instantiate(rf, {}, b, m) - instantiate(rg, a, {}, m), f, g, a, b,
                                          std::nullopt});
            }
            if (any || !rf.lead.strong || !rg.lead.strong) continue;
            for (Letter x : set.alphabet().letters()) {
                const Word xw = letter_word(x) + w;
                out.push_back(Composition{CompositionKind::LeftMultIntersection, NormalDiword(xw, 1),
                                          instantiate(rf, letter_word(x), b, 1) -
                                              instantiate(rg, letter_word(x) + a, {}, 1),
                                          f, g, a, b, x});
            }
            for (Letter x : set.alphabet().letters()) {
                const Word wx = w + letter_word(x);
                const std::uint32_t m = len32(wx.size());
                out.push_back(Composition{CompositionKind::RightMultIntersection, NormalDiword(wx, m),
                                          instantiate(rf, {}, b + letter_word(x), m) -
                                              instantiate(rg, a, letter_word(x), m),
                                          f, g, a, b, x});
            }
        }
        return out;
    }

    std::vector<Composition> left_multiplication_compositions(const RuleSet& set, std::size_t f) {
        std::vector<Composition> out;
        const RewriteRule& rf = set[f];
        if (rf.lead.strong) return out;
        for (Letter x : set.alphabet().letters()) {
            DiPolynomial xd(NormalDiword(letter_word(x), 1), set.order());
            out.push_back(Composition{CompositionKind::LeftMultiplication,
                                      NormalDiword(letter_word(x) + rf.lead.assoc_word, 1),
                                      product_left(xd, rf.poly), f, f, {}, {}, x});
        }
        return out;
    }

    std::vector<Composition> compositions_with(const RuleSet& set, std::size_t rule) {
        std::vector<Composition> out;
        auto append = [&out](std::vector<Composition>&& v) {
            out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
        };
        append(left_multiplication_compositions(set, rule));
        for (std::size_t i = 0; i <= rule; ++i) {
            append(inclusion_compositions(set, rule, i));
            append(intersection_compositions(set, rule, i));
            if (i == rule) continue;
            append(inclusion_compositions(set, i, rule));
            append(intersection_compositions(set, i, rule));
        }
        return out;
    }

    std::vector<Composition> all_compositions(const RuleSet& set) {
        std::vector<Composition> out;
        for (std::size_t r = 0; r < set.size(); ++r) {
            auto v = compositions_with(set, r);
            out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
        }
        return out;
    }

    Composition right_multiplication_composition(const RuleSet& set, std::size_t f, const Word& u) {
        const RewriteRule& rf = set[f];
        DiPolynomial ud(NormalDiword(u, len32(u.size())), set.order());
        const Word w = rf.lead.assoc_word + u;
        return Composition{CompositionKind::RightMultiplication, NormalDiword(w, len32(w.size())),
                           product_right(rf.poly, ud), f, f, {}, u, std::nullopt};
    }

    ClosureVerdict right_multiplication_closure(const RuleSet& set, std::size_t f, unsigned depth_bound) {
        if (depth_bound < 1) {
            throw std::invalid_argument("right-multiplication depth bound must be at least 1");
        }
        ClosureVerdict verdict;
        verdict.residual = set.zero();
        if (set[f].lead.strong) return verdict;

        struct Obligation {
            std::size_t rule;
            Word tail;
            Word prefix;  // root word u with f |- [u ...] containing this obligation
        };
        std::deque<Obligation> queue;
        std::set<std::pair<std::size_t, Word>> seen;
        queue.push_back({f, {}, {}});
        seen.insert({f, {}});
        bool bounded = false;
        const auto letters = set.alphabet().letters();

        while (!queue.empty()) {
            Obligation ob = std::move(queue.front());
            queue.pop_front();
            if (ob.tail.size() > depth_bound) {
                bounded = true;
                continue;
            }
            for (Letter x : letters) {
                Word tx = ob.tail + letter_word(x);
                DiPolynomial txd(NormalDiword(tx, len32(tx.size())), set.order());
                Reduction red = normal_form(product_right(set[ob.rule].poly, txd), set);
                Word root = ob.prefix + letter_word(x);
                if (!red.remainder.is_zero()) {
                    DiPolynomial direct = red.remainder;
                    if (ob.rule != f || !ob.tail.empty()) {
                        direct = reduce(right_multiplication_composition(set, f, root).value, set);
                    }
                    if (!direct.is_zero()) {
                        verdict.kind = ClosureVerdict::Kind::Nontrivial;
                        verdict.witness = std::move(root);
                        verdict.residual = std::move(direct);
                        return verdict;
                    }
                    bounded = true;
                    continue;
                }
                for (const auto& step : red.trace) {
                    const auto& occ = step.occurrence;
                    if (set[occ.rule].lead.strong) continue;
                    if (seen.insert({occ.rule, occ.right}).second) {
                        queue.push_back({occ.rule, occ.right, root});
                    }
                }
            }
        }
        if (bounded) {
            verdict.kind = ClosureVerdict::Kind::ClosedUpToBound;
            verdict.bound = depth_bound;
        }
        return verdict;
    }

    DiPolynomial composition_remainder(const Composition& c, const RuleSet& set) {
        Reduction red = normal_form(c.value, set);
        if (!red.trace.empty()) {
            const bool mult = is_multiplication(c.kind);
            for (const auto& step : red.trace) {
                const auto& occ = step.occurrence;
                Word w = occ.left + set[occ.rule].lead.assoc_word + occ.right;
                NormalDiword lead(std::move(w), occ.center);
                auto cmp = compare(lead, mult ? c.value.leading() : c.ambiguity, set.order());
                if (mult ? cmp == std::strong_ordering::greater : cmp != std::strong_ordering::less) {
                    throw std::logic_error("reduction trace exceeds the composition's ambiguity");
                }
            }
        }
        return std::move(red.remainder);
    }

}  // namespace digs
