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

#include "digs/disemigroup.hpp"

#include <algorithm>
#include <set>

namespace digs {

    namespace {
        std::uint32_t len32(std::size_t n) { return static_cast<std::uint32_t>(n); }

        bool is_sorted_range(const Word& w, std::size_t from, std::size_t to) {
            return std::is_sorted(w.begin() + static_cast<std::ptrdiff_t>(from),
                                  w.begin() + static_cast<std::ptrdiff_t>(to));
        }

        // Sorts w[from, to).
        Word sort_range(Word w, std::size_t from, std::size_t to) {
            std::sort(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
            return w;
        }

        // Every word of exactly length n over k letters, increasing.
        std::vector<Word> words_of_length(std::size_t k, std::size_t n) {
            std::vector<Word> out;
            Word w(n, Letter{0});
            while (true) {
                out.push_back(w);
                std::size_t pos = n;
                while (pos > 0 && w[pos - 1] + 1u == k) {
                    w[pos - 1] = 0;
                    --pos;
                }
                if (pos == 0) break;
                ++w[pos - 1];
            }
            return out;
        }

        DiPolynomial binomial(const NormalDiword& a, const NormalDiword& b, const WordOrder& order) {
            DiPolynomial p(a, order);
            p -= DiPolynomial(b, order);
            return p;
        }
    }  // namespace

    Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations,
                               std::shared_ptr<const WordOrder> order)
        : alphabet_(std::move(alphabet)), order_(std::move(order)) {
        for (auto& [lhs, rhs] : relations) {
            for (const NormalDiword* d : {&lhs, &rhs}) {
                for (Letter c : d->word()) {
                    if (c >= alphabet_.size()) throw std::invalid_argument("relation uses a letter outside the alphabet");
                }
            }
            auto c = compare(lhs, rhs, *order_);
            if (c == std::strong_ordering::equal) {
                throw std::invalid_argument("relation with identical sides " + to_string(lhs, alphabet_));
            }
            if (c == std::strong_ordering::less) std::swap(lhs, rhs);
            relations_.push_back({std::move(lhs), std::move(rhs)});
        }
    }

    RuleSet Presentation::rules() const {
        RuleSet s(alphabet_, order_);
        for (const auto& [lhs, rhs] : relations_) s.add(binomial(lhs, rhs, *order_));
        return s;
    }

    PresentationSolver::PresentationSolver(const Presentation& p, CompletionConfig cfg, std::size_t max_query_len)
        : basis_(p.alphabet(), p.order_ptr()), max_query_len_(max_query_len) {
        cfg.policy = AddPolicy::NormalForm;
        const WordOrder& order = *p.order_ptr();
        std::vector<const Relation*> sorted;
        for (const auto& r : p.relations()) sorted.push_back(&r);
        std::stable_sort(sorted.begin(), sorted.end(), [&](const Relation* a, const Relation* b) {
            return compare(a->first, b->first, order) == std::strong_ordering::less;
        });

        // Completing after every relation would complete partial ideals, which
        // need not have finite bases; inter-reduce everything first instead.
        for (const Relation* r : sorted) {
            DiPolynomial rem = reduce(binomial(r->first, r->second, order), basis_);
            if (!rem.is_zero()) basis_.add(rem);
        }
        CompletionResult done = complete(basis_, cfg);
        basis_ = std::move(done.basis);
        if (done.status == CompletionStatus::FuelExhausted) {
            status_ = CompletionStatus::FuelExhausted;
            return;
        }
        const std::size_t fuel_left = cfg.fuel - std::min(cfg.fuel, done.log.size());
        cfg.fuel = std::max<std::size_t>(fuel_left, 1);
        auto [reduced, report] = reduce_basis(basis_, cfg);
        basis_ = std::move(reduced);
        status_ = report.status;
        bounded_ = report.final_check.verdict == Verdict::GSUpToBound;
    }

    NormalDiword PresentationSolver::nf(const NormalDiword& d) const {
        if (status_ == CompletionStatus::FuelExhausted) {
            throw CompletionFailure("completion of the presentation ran out of fuel");
        }
        if (max_query_len_ != 0 && d.length() > max_query_len_) {
            throw std::out_of_range("query of length " + std::to_string(d.length()) +
                                    " exceeds the instantiated relations (max " + std::to_string(max_query_len_) +
                                    ")");
        }
        DiPolynomial r = reduce(DiPolynomial(d, basis_.order()), basis_);
        if (r.size() != 1 || r.terms().front().coeff != 1) {
            throw std::logic_error("normal form of a diword is not a single diword");
        }
        return r.terms().front().diword;
    }

    NormalDiword presentation_nf(const Presentation& p, const NormalDiword& d, std::size_t fuel) {
        CompletionConfig cfg;
        cfg.fuel = fuel;
        return PresentationSolver(p, cfg).nf(d);
    }

    bool word_problem(const Presentation& p, const NormalDiword& a, const NormalDiword& b, std::size_t fuel) {
        CompletionConfig cfg;
        cfg.fuel = fuel;
        return PresentationSolver(p, cfg).equal(a, b);
    }

    std::string_view to_string(Family f) {
        switch (f) {
            case Family::Commutative: return "commutative";
            case Family::Abelian: return "abelian";
            case Family::LeftCommutative: return "left-commutative";
            case Family::RightCommutative: return "right-commutative";
        }
        return "unknown";
    }

    Family family_by_name(std::string_view name) {
        for (Family f : {Family::Commutative, Family::Abelian, Family::LeftCommutative, Family::RightCommutative}) {
            if (to_string(f) == name) return f;
        }
        throw std::invalid_argument("unknown family '" + std::string(name) + "'");
    }

    Word sort_word(const Word& u) { return sort_range(u, 0, u.size()); }

    Letter rho(const Word& u, std::uint32_t m) {
        if (m < 1 || m > u.size()) throw std::out_of_range("position out of range");
        return u[m - 1];
    }

    std::uint32_t lambda(const Word& sorted, Letter x) {
        auto it = std::find(sorted.begin(), sorted.end(), x);
        if (it == sorted.end()) throw std::invalid_argument("letter does not occur in the word");
        return len32(static_cast<std::size_t>(it - sorted.begin()) + 1);
    }

    std::uint32_t tau(const Word& u, std::uint32_t m) { return lambda(sort_word(u), rho(u, m)); }

    std::vector<std::size_t> cont(const Word& u, std::size_t alphabet_size) {
        std::vector<std::size_t> counts(alphabet_size, 0);
        for (Letter c : u) ++counts.at(c);
        return counts;
    }

    std::vector<Relation> family_relations(Family f, const Alphabet& a, std::size_t bound) {
        std::vector<Relation> out;
        auto emit = [&out](NormalDiword lhs, NormalDiword rhs) {
            if (lhs != rhs) out.emplace_back(std::move(lhs), std::move(rhs));
        };
        const std::size_t k = a.size();
        for (std::size_t n = 2; n <= bound; ++n) {
            for (const Word& w : words_of_length(k, n)) {
                for (std::uint32_t m = 1; m <= n; ++m) {
                    NormalDiword d(w, m);
                    switch (f) {
                        case Family::Commutative:
                            // [u]_m - floor(u)_m for |u| = 2, [v]_n - floor(v)_1 for |v| >= 3
                            emit(d, NormalDiword(sort_word(w), n == 2 ? m : 1));
                            break;
                        case Family::Abelian:
                            emit(d, NormalDiword(sort_word(w), tau(w, m)));
                            break;
                        case Family::LeftCommutative:
                            // [u x v]_{|u|+1} - [floor(u) x v]_{|u|+1}, |u| >= 2, |v| <= 1
                            if (m >= 3 && n - m <= 1) emit(d, NormalDiword(sort_range(w, 0, m - 1), m));
                            // [u x v y]_{|u|+1} - [floor(u x v) y]_1, |v| >= 1
                            if (n >= m + 2) emit(d, NormalDiword(sort_range(w, 0, n - 1), 1));
                            break;
                        case Family::RightCommutative:
                            // [v x u]_{|v|+1} - [v x floor(u)]_{|v|+1}, |u| >= 2, |v| <= 1
                            if (m <= 2 && n >= m + 2) emit(d, NormalDiword(sort_range(w, m, n), m));
                            // [y v x u]_{|v|+2} - [y floor(v x u)]_3, |v| >= 1
                            if (m >= 3) emit(d, NormalDiword(sort_range(w, 1, n), 3));
                            break;
                    }
                }
            }
        }
        return out;
    }

    Presentation family_presentation(Family f, const Alphabet& a, std::size_t bound) {
        return Presentation(a, family_relations(f, a, bound));
    }

    RuleSet family_rules(Family f, const Alphabet& a, std::size_t bound) {
        return family_presentation(f, a, bound).rules();
    }

    RuleSet family_reduced(Family f, const Alphabet& a) {
        RuleSet s(a);
        const auto& order = s.order();
        auto rel = [&](Word lw, std::uint32_t lm, Word rw, std::uint32_t rm) {
            s.add(binomial(NormalDiword(std::move(lw), lm), NormalDiword(std::move(rw), rm), order));
        };
        const auto k = static_cast<Letter>(a.size());
        auto w2 = [](Letter x, Letter y) { return Word{x, y}; };
        auto w3 = [](Letter x, Letter y, Letter z) { return Word{x, y, z}; };
        switch (f) {
            case Family::Commutative:
                for (Letter i = 0; i < k; ++i) {
                    for (Letter j = 0; j < i; ++j) {
                        rel(w2(i, j), 1, w2(j, i), 1);
                        rel(w2(i, j), 2, w2(j, i), 2);
                    }
                }
                for (const Word& w : words_of_length(k, 3)) {
                    if (!is_sorted_range(w, 0, 3)) continue;
                    rel(w, 2, w, 1);
                    rel(w, 3, w, 1);
                }
                break;
            case Family::Abelian:
                for (Letter i = 0; i < k; ++i) {
                    for (Letter j = 0; j < i; ++j) {
                        rel(w2(i, j), 2, w2(j, i), 1);
                        rel(w2(i, j), 1, w2(j, i), 2);
                    }
                    rel(w2(i, i), 2, w2(i, i), 1);
                }
                break;
            case Family::LeftCommutative:
                for (Letter i = 0; i < k; ++i) {
                    for (Letter j = 0; j < i; ++j) {
                        for (Letter t = 0; t < k; ++t) {
                            rel(w3(i, j, t), 3, w3(j, i, t), 3);
                            rel(w3(i, j, t), 1, w3(j, i, t), 1);
                        }
                    }
                }
                for (Letter l = 0; l < k; ++l) {
                    for (Letter i = 0; i < k; ++i) {
                        for (Letter j = i; j < k; ++j) {
                            for (Letter t = 0; t < k; ++t) {
                                Word w{l, i, j, t};
                                rel(w, 2, sort_range(w, 0, 3), 1);
                            }
                        }
                    }
                }
                break;
            case Family::RightCommutative:
                for (Letter i = 0; i < k; ++i) {
                    for (Letter j = 0; j < i; ++j) {
                        for (Letter t = 0; t < k; ++t) {
                            rel(w3(t, i, j), 1, w3(t, j, i), 1);
                            rel(w3(t, i, j), 3, w3(t, j, i), 3);
                        }
                    }
                }
                for (Letter t = 0; t < k; ++t) {
                    for (Letter i = 0; i < k; ++i) {
                        for (Letter j = i; j < k; ++j) {
                            for (Letter l = 0; l < k; ++l) {
                                Word w{t, i, j, l};
                                Word r = sort_range(w, 1, 4);
                                if (r != w) rel(w, 3, r, 3);
                            }
                        }
                    }
                }
                break;
        }
        return s;
    }

    NormalDiword closed_form_nf(Family f, const NormalDiword& d) {
        const Word& w = d.word();
        const std::size_t n = w.size();
        const std::uint32_t m = d.center();
        switch (f) {
            case Family::Commutative:
                if (n == 1) return d;
                return NormalDiword(sort_word(w), n == 2 ? m : 1);
            case Family::Abelian:
                return NormalDiword(sort_word(w), tau(w, m));
            case Family::LeftCommutative:
                if (n >= m + 2) return NormalDiword(sort_range(w, 0, n - 1), 1);
                return NormalDiword(sort_range(w, 0, m - 1), m);
            case Family::RightCommutative:
                if (m <= 2) return NormalDiword(sort_range(w, m, n), m);
                return NormalDiword(sort_range(w, 1, n), 3);
        }
        return d;
    }

    NormalDiword closed_form_product_right(Family f, const NormalDiword& a, const NormalDiword& b) {
        const Word uv = a.word() + b.word();
        switch (f) {
            case Family::Commutative:
                return NormalDiword(sort_word(uv), a.length() * b.length() > 1 ? 1 : 2);
            case Family::Abelian:
                return NormalDiword(sort_word(uv), tau(sort_word(b.word()) + sort_word(a.word()), b.center()));
            default:
                throw std::invalid_argument("no closed product formula for this family");
        }
    }

    NormalDiword closed_form_product_left(Family f, const NormalDiword& a, const NormalDiword& b) {
        const Word uv = a.word() + b.word();
        switch (f) {
            case Family::Commutative:
                return NormalDiword(sort_word(uv), 1);
            case Family::Abelian:
                return NormalDiword(sort_word(uv), tau(sort_word(a.word()) + sort_word(b.word()), a.center()));
            default:
                throw std::invalid_argument("no closed product formula for this family");
        }
    }

    std::vector<NormalDiword> family_normal_forms(Family f, const Alphabet& a, std::size_t max_len) {
        std::vector<NormalDiword> out;
        for (auto& d : all_diwords(a, max_len)) {
            const Word& w = d.word();
            const std::size_t n = w.size();
            const std::uint32_t m = d.center();
            bool keep = false;
            switch (f) {
                case Family::Commutative:
                    keep = is_sorted_range(w, 0, n) && (m == 1 || n == 2);
                    break;
                case Family::Abelian:
                    keep = is_sorted_range(w, 0, n) && (m == 1 || w[m - 1] != w[m - 2]);
                    break;
                case Family::LeftCommutative:
                    keep = (n <= m + 1 && is_sorted_range(w, 0, m - 1)) ||
                           (m == 1 && n >= 3 && is_sorted_range(w, 0, n - 1));
                    break;
                case Family::RightCommutative:
                    keep = (m <= 2 && is_sorted_range(w, m, n)) || (m == 3 && is_sorted_range(w, 1, n));
                    break;
            }
            if (keep) out.push_back(std::move(d));
        }
        return out;
    }

    namespace {
        std::vector<std::string> rule_strings(const RuleSet& s) {
            std::vector<std::string> out;
            for (const auto& r : s.rules()) out.push_back(to_string(r.poly, s.alphabet()));
            std::sort(out.begin(), out.end());
            return out;
        }

        std::string sample(const std::vector<NormalDiword>& ds, const Alphabet& a, std::size_t limit = 4) {
            std::string out;
            for (std::size_t i = 0; i < ds.size() && i < limit; ++i) {
                if (i) out += ", ";
                out += to_string(ds[i], a);
            }
            if (ds.size() > limit) out += ", ...";
            return out;
        }

        // "n1/n2/..." counts of diwords per word length 1..max_len.
        std::string length_profile(const std::vector<NormalDiword>& ds, std::size_t max_len) {
            std::vector<std::size_t> counts(max_len + 1, 0);
            for (const auto& d : ds) ++counts[d.length()];
            std::string out;
            for (std::size_t n = 1; n <= max_len; ++n) out += (n > 1 ? "/" : "") + std::to_string(counts[n]);
            return out;
        }
    }  // namespace

    RightCommutativeAudit audit_right_commutative(const Alphabet& a, std::size_t max_len,
                                                  const CompletionConfig& cfg) {
        RightCommutativeAudit audit;
        RuleSet printed = family_reduced(Family::RightCommutative, a);

        CheckReport chk = check_gs(printed, CheckConfig{cfg.rm_depth, cfg.threads});
        audit.printed_verdict = chk.verdict;
        if (chk.verdict != Verdict::GS) {
            std::string line = "check_gs(W') = " + std::string(to_string(chk.verdict));
            if (!chk.witnesses.empty()) {
                const auto& w = chk.witnesses.front();
                line += "; first witness " + std::string(to_string(w.composition.kind)) + " at " +
                        to_string(w.composition.ambiguity, a) + " leaves " + to_string(w.remainder, a);
            }
            audit.discrepancies.push_back(std::move(line));
        }

        auto irr = enumerate_irr(printed, max_len);
        std::vector<NormalDiword> mirrored;
        for (const auto& d : family_normal_forms(Family::LeftCommutative, a, max_len)) mirrored.push_back(mirror(d));
        std::sort(mirrored.begin(), mirrored.end(), [&](const NormalDiword& x, const NormalDiword& y) {
            return compare(x, y) == std::strong_ordering::less;
        });
        audit.irr_matches_mirror = irr == mirrored;
        if (!audit.irr_matches_mirror) {
            std::vector<NormalDiword> only_irr, only_mirror;
            auto less = [](const NormalDiword& x, const NormalDiword& y) {
                return compare(x, y) == std::strong_ordering::less;
            };
            std::set_difference(irr.begin(), irr.end(), mirrored.begin(), mirrored.end(),
                                std::back_inserter(only_irr), less);
            std::set_difference(mirrored.begin(), mirrored.end(), irr.begin(), irr.end(),
                                std::back_inserter(only_mirror), less);
            audit.discrepancies.push_back("Irr(W') up to length " + std::to_string(max_len) + " has " +
                                          std::to_string(irr.size()) + " elements, mirrored left-commutative forms " +
                                          std::to_string(mirrored.size()) + "; only in Irr(W'): " +
                                          std::to_string(only_irr.size()) + " [" + sample(only_irr, a) +
                                          "]; only mirrored: " + std::to_string(only_mirror.size()) + " [" +
                                          sample(only_mirror, a) + "]; per-length counts " +
                                          length_profile(irr, max_len) + " vs " +
                                          length_profile(mirrored, max_len));
        }

        PresentationSolver solver(family_presentation(Family::RightCommutative, a, max_len + 1), cfg, max_len);
        audit.printed_matches_completion = rule_strings(solver.basis()) == rule_strings(printed);
        if (!audit.printed_matches_completion) {
            std::set<std::string> printed_set;
            for (const auto& s : rule_strings(printed)) printed_set.insert(s);
            std::size_t missing = 0;
            std::string example;
            for (const auto& s : rule_strings(solver.basis())) {
                if (!printed_set.count(s)) {
                    if (missing++ == 0) example = s;
                }
            }
            audit.discrepancies.push_back("reduced completion of S' (" + std::to_string(solver.basis().size()) +
                                          " rules) differs from W' (" + std::to_string(printed.size()) +
                                          " rules); " + std::to_string(missing) + " completed rules not in W'" +
                                          (example.empty() ? std::string() : ", e.g. " + example));
        }

        std::size_t mismatches = 0;
        std::string first;
        for (const auto& d : all_diwords(a, max_len)) {
            NormalDiword got = solver.nf(d);
            if (got != closed_form_nf(Family::RightCommutative, d)) {
                if (mismatches++ == 0) first = to_string(d, a) + " -> " + to_string(got, a);
            }
        }
        audit.schema_agrees_with_closed_form = mismatches == 0;
        if (mismatches) {
            audit.discrepancies.push_back("completion of S' disagrees with the closed form on " +
                                          std::to_string(mismatches) + " diwords, e.g. " + first);
        }
        return audit;
    }

}  // namespace digs
