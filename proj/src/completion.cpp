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

#include "digs/completion.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

#include "digs/parallel.hpp"

namespace digs {

    std::string_view to_string(Verdict v) {
        switch (v) {
            case Verdict::GS: return "GS";
            case Verdict::GSUpToBound: return "GSUpToBound";
            case Verdict::NotGS: return "NotGS";
        }
        return "unknown";
    }

    std::string_view to_string(CompletionStatus s) {
        return s == CompletionStatus::Complete ? "Complete" : "FuelExhausted";
    }

    namespace {
        std::vector<ClosureVerdict> closures_for(const RuleSet& set, const std::vector<std::size_t>& rules,
                                                 unsigned depth, int threads) {
            std::vector<ClosureVerdict> out(rules.size());
            std::vector<std::exception_ptr> errors(rules.size());
            const int t = threads == 1 ? 1 : effective_threads(threads);
            const auto n = static_cast<long>(rules.size());
#pragma omp parallel for num_threads(t) schedule(dynamic, 1) if (t > 1)
            for (long i = 0; i < n; ++i) {
                const auto k = static_cast<std::size_t>(i);
                try {
                    out[k] = right_multiplication_closure(set, rules[k], depth);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
            return out;
        }
    }  // namespace

    CheckReport check_gs(const RuleSet& set, const CheckConfig& cfg) {
        CheckReport report;
        report.inventory = all_compositions(set);
        auto remainders = cfg.threads == 1 ? remainders_serial(report.inventory, set)
                                           : remainders_parallel(report.inventory, set, cfg.threads);
        for (std::size_t i = 0; i < report.inventory.size(); ++i) {
            ++report.counts[static_cast<std::size_t>(report.inventory[i].kind)];
            if (!remainders[i].is_zero()) {
                report.witnesses.push_back(Witness{report.inventory[i], std::move(remainders[i])});
            }
        }

        std::vector<std::size_t> weak;
        for (const auto& r : set.rules()) {
            if (!r.lead.strong) weak.push_back(r.id);
        }
        auto verdicts = closures_for(set, weak, cfg.rm_depth, cfg.threads);
        bool bounded = false;
        for (std::size_t i = 0; i < weak.size(); ++i) {
            ++report.counts[static_cast<std::size_t>(CompositionKind::RightMultiplication)];
            const auto& v = verdicts[i];
            if (v.kind == ClosureVerdict::Kind::Nontrivial) {
                report.witnesses.push_back(
                    Witness{right_multiplication_composition(set, weak[i], v.witness), v.residual});
            } else if (v.kind == ClosureVerdict::Kind::ClosedUpToBound) {
                bounded = true;
            }
            report.closures.push_back(ClosureRecord{weak[i], v});
        }

        if (!report.witnesses.empty()) {
            report.verdict = Verdict::NotGS;
        } else if (bounded) {
            report.verdict = Verdict::GSUpToBound;
            report.bound = cfg.rm_depth;
        }
        return report;
    }

    namespace {
        struct Task {
            NormalDiword key;
            std::size_t seq;
            std::size_t rule;                  // closure tasks
            std::optional<Composition> comp;   // composition tasks
        };

        struct Outcome {
            DiPolynomial remainder;
            ClosureVerdict closure;
        };

        class Completer {
        public:
            Completer(const RuleSet& initial, const CompletionConfig& cfg)
                : cfg_(cfg), result_{initial, CompletionStatus::Complete, false, 0, {}} {}

            CompletionResult run() {
                const RuleSet& basis = result_.basis;
                for (std::size_t r = std::min(cfg_.closed_prefix, basis.size()); r < basis.size(); ++r) {
                    enqueue_rule(r);
                }
                while (true) {
                    if (!drain()) return finish();
                    // Bounded closures are rechecked against the final basis.
                    bool added = false;
                    for (std::size_t r : std::vector<std::size_t>(bounded_.begin(), bounded_.end())) {
                        auto v = right_multiplication_closure(basis, r, cfg_.rm_depth);
                        if (v.kind == ClosureVerdict::Kind::Closed) {
                            bounded_.erase(r);
                        } else if (v.kind == ClosureVerdict::Kind::Nontrivial) {
                            bounded_.erase(r);
                            if (!add_closure_residual(r, v)) return finish();
                            added = true;
                            break;
                        }
                    }
                    if (!added) return finish();
                }
            }

        private:
            bool less(const Task& a, const Task& b) const {
                auto c = compare(a.key, b.key, result_.basis.order());
                if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
                return a.seq < b.seq;
            }

            void push(Task t) {
                heap_.push_back(std::move(t));
                std::push_heap(heap_.begin(), heap_.end(), [this](const Task& a, const Task& b) { return less(b, a); });
            }

            Task pop() {
                std::pop_heap(heap_.begin(), heap_.end(), [this](const Task& a, const Task& b) { return less(b, a); });
                Task t = std::move(heap_.back());
                heap_.pop_back();
                return t;
            }

            void enqueue_closure(std::size_t r) {
                const RuleSet& basis = result_.basis;
                Word w = basis[r].lead.assoc_word + Word(1, Letter{0});
                auto m = static_cast<std::uint32_t>(basis[r].lead.assoc_word.size() + 1);
                push(Task{NormalDiword(std::move(w), m), seq_++, r, std::nullopt});
            }

            void enqueue_rule(std::size_t r) {
                for (auto& c : compositions_with(result_.basis, r)) {
                    NormalDiword key = c.ambiguity;
                    push(Task{std::move(key), seq_++, r, std::move(c)});
                }
                if (!result_.basis[r].lead.strong) enqueue_closure(r);
            }

            Outcome evaluate(const Task& t) const {
                const RuleSet& basis = result_.basis;
                if (t.comp) return Outcome{reduce(t.comp->value, basis), {}};
                return Outcome{basis.zero(), right_multiplication_closure(basis, t.rule, cfg_.rm_depth)};
            }

            // False once fuel is exhausted.
            bool add_rule(const DiPolynomial& p, LogEntry entry) {
                if (result_.log.size() >= cfg_.fuel) {
                    result_.status = CompletionStatus::FuelExhausted;
                    return false;
                }
                const std::size_t id = result_.basis.add(p);
                entry.rule = id;
                result_.log.push_back(std::move(entry));
                enqueue_rule(id);
                return true;
            }

            bool add_closure_residual(std::size_t r, const ClosureVerdict& v) {
                const RuleSet& basis = result_.basis;
                Word w = basis[r].lead.assoc_word + v.witness;
                auto m = static_cast<std::uint32_t>(w.size());
                LogEntry e{0, CompositionKind::RightMultiplication, NormalDiword(std::move(w), m), r, r,
                           std::nullopt, v.witness};
                if (!add_rule(v.residual, std::move(e))) return false;
                enqueue_closure(r);
                return true;
            }

            // Returns false when fuel ran out.
            bool handle(const Task& t, Outcome& o) {
                if (t.comp) {
                    if (o.remainder.is_zero()) return true;
                    const Composition& c = *t.comp;
                    const DiPolynomial& p = cfg_.policy == AddPolicy::CompositionValue ? c.value : o.remainder;
                    return add_rule(p, LogEntry{0, c.kind, c.ambiguity, c.first, c.second, c.letter, {}});
                }
                switch (o.closure.kind) {
                    case ClosureVerdict::Kind::Closed: bounded_.erase(t.rule); return true;
                    case ClosureVerdict::Kind::ClosedUpToBound: bounded_.insert(t.rule); return true;
                    case ClosureVerdict::Kind::Nontrivial: bounded_.erase(t.rule); return add_closure_residual(t.rule, o.closure);
                }
                return true;
            }

            /* Processes the worklist to exhaustion. With several threads a batch of
             * the smallest tasks is evaluated speculatively; as soon as one of them
             * adds a rule, the rest of the batch goes back to the queue, so the
             * sequence of additions is exactly the single-threaded one.
             */
            bool drain() {
                const int threads = cfg_.threads == 1 ? 1 : effective_threads(cfg_.threads);
                const std::size_t batch_size = threads > 1 ? static_cast<std::size_t>(threads) * 4 : 1;
                while (!heap_.empty()) {
                    std::vector<Task> batch;
                    while (!heap_.empty() && batch.size() < batch_size) batch.push_back(pop());
                    std::vector<Outcome> outcomes(batch.size(), Outcome{result_.basis.zero(), {}});
                    std::vector<std::exception_ptr> errors(batch.size());
                    const auto n = static_cast<long>(batch.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1) if (threads > 1 && n > 1)
                    for (long i = 0; i < n; ++i) {
                        const auto k = static_cast<std::size_t>(i);
                        try {
                            outcomes[k] = evaluate(batch[k]);
                        } catch (...) {
                            errors[k] = std::current_exception();
                        }
                    }
                    for (auto& e : errors) {
                        if (e) std::rethrow_exception(e);
                    }
                    const std::size_t size_before = result_.basis.size();
                    for (std::size_t k = 0; k < batch.size(); ++k) {
                        if (result_.basis.size() != size_before) {
                            for (std::size_t j = k; j < batch.size(); ++j) push(std::move(batch[j]));
                            break;
                        }
                        if (!handle(batch[k], outcomes[k])) return false;
                    }
                }
                return true;
            }

            CompletionResult finish() {
                result_.bounded = !bounded_.empty();
                result_.bound = result_.bounded ? cfg_.rm_depth : 0;
                return std::move(result_);
            }

            CompletionConfig cfg_;
            CompletionResult result_;
            std::vector<Task> heap_;
            std::size_t seq_ = 0;
            std::set<std::size_t> bounded_;
        };
    }  // namespace

    CompletionResult complete(const RuleSet& initial, const CompletionConfig& cfg) {
        if (cfg.fuel < 1) {
            throw std::invalid_argument("completion fuel must be at least 1");
        }
        if (cfg.rm_depth < 1) {
            throw std::invalid_argument("right-multiplication depth bound must be at least 1");
        }
        return Completer(initial, cfg).run();
    }

    namespace {
        // Selection by increasing leading monomial with tails reduced by the rules
        // kept so far. A rule can only rewrite diwords at or above its own leading
        // monomial, so later rules never touch an earlier rule's support, and a
        // repeated leading monomial is always reducible by its first holder.
        RuleSet select_reduced(const RuleSet& set) {
            std::vector<std::size_t> ids(set.size());
            for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
            std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
                return compare(set[a].lead.leading, set[b].lead.leading, set.order()) == std::strong_ordering::less;
            });
            RuleSet kept = set.empty_copy();
            for (std::size_t id : ids) {
                const RewriteRule& r = set[id];
                if (find_occurrence(r.lead.leading, kept)) continue;
                DiPolynomial tail = r.poly;
                tail.take_leading();
                DiPolynomial rule(r.lead.leading, set.order());
                rule += reduce(tail, kept);
                kept.add(rule);
            }
            return kept;
        }
    }  // namespace

    std::pair<RuleSet, ReduceReport> reduce_basis(const RuleSet& set, const CompletionConfig& cfg) {
        const CheckConfig check_cfg{cfg.rm_depth, cfg.threads};
        CheckReport initial = check_gs(set, check_cfg);
        if (initial.verdict == Verdict::NotGS) {
            throw std::invalid_argument("reduce_basis needs a Groebner-Shirshov basis; complete the input first");
        }
        ReduceReport report{set.empty_copy(), 0, {}, CompletionStatus::Complete};
        RuleSet current = set;
        std::size_t fuel_left = cfg.fuel;
        while (true) {
            ++report.iterations;
            RuleSet candidate = select_reduced(current);
            if (report.iterations == 1) report.first_pass = candidate;
            report.final_check = check_gs(candidate, check_cfg);
            if (report.final_check.verdict != Verdict::NotGS) {
                return {std::move(candidate), std::move(report)};
            }
            if (fuel_left == 0) {
                report.status = CompletionStatus::FuelExhausted;
                return {std::move(candidate), std::move(report)};
            }
            CompletionConfig sub = cfg;
            sub.fuel = fuel_left;
            sub.policy = AddPolicy::NormalForm;
            sub.closed_prefix = 0;
            CompletionResult done = complete(candidate, sub);
            fuel_left -= std::min(fuel_left, done.log.size());
            if (done.status == CompletionStatus::FuelExhausted) {
                report.status = CompletionStatus::FuelExhausted;
                return {std::move(done.basis), std::move(report)};
            }
            current = std::move(done.basis);
        }
    }

    bool is_reduced(const RuleSet& set) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            RuleSet others = set.empty_copy();
            for (std::size_t j = 0; j < set.size(); ++j) {
                if (j != i) others.add(set[j].poly);
            }
            for (const auto& t : set[i].poly.terms()) {
                if (find_occurrence(t.diword, others)) return false;
            }
        }
        return true;
    }

}  // namespace digs
