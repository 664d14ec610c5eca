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

// Command-line driver: check, complete, reduce, nf, irr, wp, family, oracle.
//
// Exit codes: 0 success or true, 1 property false, 2 bounded or out of fuel,
// 3 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <algorithm>
#include <set>
#include <string>

#include "digs/oracle.hpp"
#include "digs/parallel.hpp"
#include "digs/text.hpp"

using namespace digs;
using json = nlohmann::ordered_json;

namespace {

    constexpr int kOk = 0;
    constexpr int kFalse = 1;
    constexpr int kBounded = 2;
    constexpr int kInputError = 3;

    struct Options {
        std::size_t fuel = 512;
        std::size_t max_len = 4;
        unsigned rm_depth = 8;
        int threads = 1;
        std::string order;
        bool json = false;
        bool as_is = false;
    };

    // Rule names: file names for the input rules, fresh names for the rest.
    class Names {
    public:
        Names() = default;
        explicit Names(const ProblemFile& file) {
            for (const auto& p : file.polys) add(p.name);
            for (std::size_t i = 0; i < file.relations.size(); ++i) add(fresh("rel"));
        }

        const std::string& operator()(std::size_t id) {
            while (names_.size() <= id) add(fresh("r"));
            return names_[id];
        }

        void add(const std::string& n) {
            names_.push_back(n);
            taken_.insert(n);
        }
        std::string fresh(const std::string& stem) {
            for (std::size_t k = names_.size() + 1;; ++k) {
                std::string n = stem + std::to_string(k);
                if (!taken_.count(n)) return n;
            }
        }

    private:
        std::vector<std::string> names_;
        std::set<std::string> taken_;
    };

    ProblemFile load(const std::string& path, const Options& opt) {
        ProblemFile file = read_problem_file(path);
        if (!opt.order.empty()) {
            order_by_name(opt.order);
            file.order = opt.order;
        }
        return file;
    }

    // Polynomials first, then one binomial per relation.
    RuleSet all_rules(const ProblemFile& file) {
        RuleSet s = rules_of(file);
        if (!file.relations.empty()) {
            RuleSet rel = presentation_of(file).rules();
            for (const auto& r : rel.rules()) s.add(r.poly);
        }
        return s;
    }

    CompletionConfig completion_config(const Options& opt, AddPolicy policy = AddPolicy::CompositionValue) {
        CompletionConfig cfg;
        cfg.fuel = opt.fuel;
        cfg.rm_depth = opt.rm_depth;
        cfg.threads = opt.threads;
        cfg.policy = policy;
        return cfg;
    }

    std::string str(const Word& w, const Alphabet& a) { return w.empty() ? "" : to_string(w, a); }

    std::string describe(const Composition& c, const Alphabet& a, Names& names) {
        std::string kind(to_string(c.kind));
        switch (c.kind) {
            case CompositionKind::LeftMultiplication:
                return kind + " " + a.name(*c.letter) + " -| " + names(c.first);
            case CompositionKind::RightMultiplication:
                return kind + " " + names(c.first) + " |- " + str(c.right, a);
            default: break;
        }
        std::string s = kind + " (" + names(c.first) + ", " + names(c.second) + ")";
        if (c.letter) s += " x=" + a.name(*c.letter);
        return s + " at " + to_string(c.ambiguity, a);
    }

    json composition_json(const Composition& c, const Alphabet& a, Names& names) {
        json j;
        j["kind"] = to_string(c.kind);
        j["ambiguity"] = to_string(c.ambiguity, a);
        j["value"] = to_string(c.value, a);
        j["first"] = names(c.first);
        j["second"] = names(c.second);
        j["left"] = str(c.left, a);
        j["right"] = str(c.right, a);
        j["letter"] = c.letter ? json(a.name(*c.letter)) : json(nullptr);
        return j;
    }

    std::string_view closure_kind(ClosureVerdict::Kind k) {
        switch (k) {
            case ClosureVerdict::Kind::Closed: return "closed";
            case ClosureVerdict::Kind::ClosedUpToBound: return "closed-up-to-bound";
            case ClosureVerdict::Kind::Nontrivial: return "nontrivial";
        }
        return "unknown";
    }

    json check_json(const CheckReport& r, const Alphabet& a, Names& names) {
        json j;
        j["verdict"] = to_string(r.verdict);
        j["bound"] = r.bound;
        j["witnesses"] = json::array();
        for (const auto& w : r.witnesses) {
            j["witnesses"].push_back(
                {{"composition", composition_json(w.composition, a, names)}, {"remainder", to_string(w.remainder, a)}});
        }
        j["counts"] = json::object();
        for (std::size_t k = 0; k < kCompositionKinds; ++k) {
            j["counts"][std::string(to_string(static_cast<CompositionKind>(k)))] = r.counts[k];
        }
        j["inventory"] = json::array();
        for (const auto& c : r.inventory) j["inventory"].push_back(composition_json(c, a, names));
        j["closures"] = json::array();
        for (const auto& c : r.closures) {
            j["closures"].push_back({{"rule", names(c.rule)},
                                     {"verdict",
                                      {{"kind", closure_kind(c.verdict.kind)},
                                       {"bound", c.verdict.bound},
                                       {"witness", str(c.verdict.witness, a)},
                                       {"residual", to_string(c.verdict.residual, a)}}}});
        }
        return j;
    }

    void print_check(const CheckReport& r, const Alphabet& a, Names& names) {
        std::cout << "verdict: " << to_string(r.verdict);
        if (r.verdict == Verdict::GSUpToBound) std::cout << " " << r.bound;
        std::cout << "\n";
        for (std::size_t k = 0; k < kCompositionKinds; ++k) {
            if (r.counts[k]) std::cout << "count " << to_string(static_cast<CompositionKind>(k)) << ": " << r.counts[k] << "\n";
        }
        for (const auto& c : r.closures) {
            std::cout << "closure " << names(c.rule) << ": " << closure_kind(c.verdict.kind);
            if (c.verdict.kind == ClosureVerdict::Kind::ClosedUpToBound) std::cout << " " << c.verdict.bound;
            if (c.verdict.kind == ClosureVerdict::Kind::Nontrivial) std::cout << " u=" << str(c.verdict.witness, a);
            std::cout << "\n";
        }
        for (const auto& w : r.witnesses) {
            std::cout << "witness: " << describe(w.composition, a, names) << " = " << to_string(w.composition.value, a)
                      << " -> " << to_string(w.remainder, a) << "\n";
        }
    }

    int check_exit(Verdict v) {
        switch (v) {
            case Verdict::GS: return kOk;
            case Verdict::GSUpToBound: return kBounded;
            case Verdict::NotGS: return kFalse;
        }
        return kFalse;
    }

    ProblemFile basis_file(const ProblemFile& src, const RuleSet& basis, Names& names) {
        ProblemFile out{src.alphabet, basis.order().name(), {}, {}, src.options};
        for (const auto& r : basis.rules()) out.polys.push_back(NamedPolynomial{names(r.id), r.poly});
        return out;
    }

    json basis_json(const RuleSet& basis, Names& names) {
        json arr = json::array();
        for (const auto& r : basis.rules()) {
            arr.push_back({{"name", names(r.id)}, {"poly", to_string(r.poly, basis.alphabet())}});
        }
        return arr;
    }

    int cmd_check(const std::string& path, const Options& opt) {
        ProblemFile file = load(path, opt);
        RuleSet s = all_rules(file);
        Names names(file);
        CheckReport r = check_gs(s, CheckConfig{opt.rm_depth, opt.threads});
        if (opt.json) {
            std::cout << check_json(r, s.alphabet(), names).dump(2) << "\n";
        } else {
            print_check(r, s.alphabet(), names);
        }
        return check_exit(r.verdict);
    }

    int completion_exit(const CompletionResult& r) {
        return r.status == CompletionStatus::Complete && !r.bounded ? kOk : kBounded;
    }

    int cmd_complete(const std::string& path, const Options& opt, const std::string& policy) {
        ProblemFile file = load(path, opt);
        RuleSet s = all_rules(file);
        Names names(file);
        AddPolicy p = policy == "nf" ? AddPolicy::NormalForm : AddPolicy::CompositionValue;
        CompletionResult r = complete(s, completion_config(opt, p));
        const Alphabet& a = s.alphabet();
        if (opt.json) {
            json j;
            j["basis"] = basis_json(r.basis, names);
            j["status"] = to_string(r.status);
            j["bounded"] = r.bounded;
            j["bound"] = r.bound;
            j["log"] = json::array();
            for (const auto& e : r.log) {
                j["log"].push_back({{"rule", names(e.rule)},
                                    {"kind", to_string(e.kind)},
                                    {"ambiguity", to_string(e.ambiguity, a)},
                                    {"first", names(e.first)},
                                    {"second", names(e.second)},
                                    {"letter", e.letter ? json(a.name(*e.letter)) : json(nullptr)},
                                    {"witness", str(e.witness, a)}});
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "# status: " << to_string(r.status);
            if (r.bounded) std::cout << " (closures verified up to tail length " << r.bound << ")";
            std::cout << "\n";
            for (const auto& e : r.log) {
                std::cout << "# added " << names(e.rule) << " from " << to_string(e.kind) << " (" << names(e.first)
                          << ", " << names(e.second) << ") at " << to_string(e.ambiguity, a) << "\n";
            }
            std::cout << print_problem(basis_file(file, r.basis, names));
        }
        return completion_exit(r);
    }

    int cmd_reduce(const std::string& path, const Options& opt) {
        ProblemFile file = load(path, opt);
        RuleSet s = all_rules(file);
        Names names(file);
        CompletionConfig cfg = completion_config(opt, AddPolicy::NormalForm);
        RuleSet start = s;
        bool bounded = false;
        if (!opt.as_is) {
            CheckReport first = check_gs(s, CheckConfig{opt.rm_depth, opt.threads});
            if (first.verdict == Verdict::NotGS) {
                CompletionResult c = complete(s, cfg);
                if (c.status == CompletionStatus::FuelExhausted) {
                    std::cerr << "completion ran out of fuel\n";
                    return kBounded;
                }
                start = std::move(c.basis);
            }
        }
        auto [reduced, report] = reduce_basis(start, cfg);
        bounded = report.final_check.verdict == Verdict::GSUpToBound;

        // Keep the input name of any rule that survives unchanged.
        Names out_names;
        std::vector<std::string> given;
        for (std::size_t i = 0; i < s.size(); ++i) given.push_back(names(i));
        std::set<std::string> used;
        std::vector<std::string> chosen(reduced.size());
        for (const auto& r : reduced.rules()) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i].poly == r.poly && !used.count(given[i])) {
                    chosen[r.id] = given[i];
                    used.insert(given[i]);
                    break;
                }
            }
        }
        for (std::size_t id = 0, k = 1; id < chosen.size(); ++id) {
            while (chosen[id].empty()) {
                std::string n = "w" + std::to_string(k++);
                if (!used.count(n) && std::find(given.begin(), given.end(), n) == given.end()) {
                    chosen[id] = n;
                    used.insert(n);
                }
            }
            out_names.add(chosen[id]);
        }

        const Alphabet& a = s.alphabet();
        if (opt.json) {
            json j;
            j["basis"] = basis_json(reduced, out_names);
            j["iterations"] = report.iterations;
            j["status"] = to_string(report.status);
            j["verdict"] = to_string(report.final_check.verdict);
            j["first_pass"] = json::array();
            for (const auto& r : report.first_pass.rules()) j["first_pass"].push_back(to_string(r.poly, a));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "# iterations: " << report.iterations << "\n";
            std::cout << "# first pass:";
            for (const auto& r : report.first_pass.rules()) std::cout << " {" << to_string(r.poly, a) << "}";
            std::cout << "\n# verdict: " << to_string(report.final_check.verdict) << "\n";
            std::cout << print_problem(basis_file(file, reduced, out_names));
        }
        if (report.status == CompletionStatus::FuelExhausted || bounded) return kBounded;
        return kOk;
    }

    // The basis used for normal forms: the rules completed, or as given with --as-is.
    struct Basis {
        RuleSet rules;
        bool bounded = false;
    };

    Basis working_basis(const ProblemFile& file, const Options& opt) {
        RuleSet s = all_rules(file);
        if (opt.as_is) return Basis{std::move(s), false};
        CompletionResult r = complete(s, completion_config(opt, AddPolicy::NormalForm));
        if (r.status == CompletionStatus::FuelExhausted) throw CompletionFailure("completion ran out of fuel");
        return Basis{std::move(r.basis), r.bounded};
    }

    int cmd_nf(const std::string& path, const std::string& expr, const Options& opt) {
        ProblemFile file = load(path, opt);
        if (file.polys.empty() && !file.relations.empty() && !opt.as_is) {
            PresentationSolver solver(presentation_of(file), completion_config(opt, AddPolicy::NormalForm));
            NormalDiword d = parse_diword(expr, file.alphabet);
            std::cout << to_string(solver.nf(d), file.alphabet) << "\n";
            return solver.bounded() ? kBounded : kOk;
        }
        Basis b = working_basis(file, opt);
        DiPolynomial f = parse_polynomial(expr, file.alphabet, b.rules.order());
        std::cout << to_string(reduce(f, b.rules), file.alphabet) << "\n";
        return b.bounded ? kBounded : kOk;
    }

    int cmd_irr(const std::string& path, const Options& opt) {
        ProblemFile file = load(path, opt);
        Basis b = working_basis(file, opt);
        auto irr = enumerate_irr(b.rules, opt.max_len);
        if (opt.json) {
            json arr = json::array();
            for (const auto& d : irr) arr.push_back(to_string(d, file.alphabet));
            std::cout << json{{"max_len", opt.max_len}, {"irr", arr}}.dump(2) << "\n";
        } else {
            for (const auto& d : irr) std::cout << to_string(d, file.alphabet) << "\n";
        }
        return b.bounded ? kBounded : kOk;
    }

    int cmd_wp(const std::string& path, const std::string& d1, const std::string& d2, const Options& opt) {
        ProblemFile file = load(path, opt);
        NormalDiword a = parse_diword(d1, file.alphabet);
        NormalDiword b = parse_diword(d2, file.alphabet);
        bool equal = false;
        bool bounded = false;
        if (file.polys.empty()) {
            PresentationSolver solver(presentation_of(file), completion_config(opt, AddPolicy::NormalForm));
            equal = solver.equal(a, b);
            bounded = solver.bounded();
        } else {
            Basis w = working_basis(file, opt);
            equal = reduce(DiPolynomial(a, w.rules.order()) - DiPolynomial(b, w.rules.order()), w.rules).is_zero();
            bounded = w.bounded;
        }
        std::cout << (equal ? "true" : "false") << "\n";
        if (bounded) return kBounded;
        return equal ? kOk : kFalse;
    }

    Alphabet family_alphabet(std::size_t letters) {
        if (letters < 1) throw std::invalid_argument("--letters must be at least 1");
        std::vector<std::string> names;
        for (std::size_t i = letters; i >= 1; --i) names.push_back("x" + std::to_string(i));
        return Alphabet(std::move(names));
    }

    int cmd_family(const std::string& name, std::size_t letters, std::size_t bound, bool reduced, bool audit,
                   const Options& opt) {
        Family f = family_by_name(name);
        Alphabet a = family_alphabet(letters);
        if (audit) {
            if (f != Family::RightCommutative) throw std::invalid_argument("--audit applies to right-commutative");
            RightCommutativeAudit r = audit_right_commutative(a, opt.max_len, completion_config(opt));
            if (opt.json) {
                json j;
                j["printed_verdict"] = to_string(r.printed_verdict);
                j["irr_matches_mirror"] = r.irr_matches_mirror;
                j["printed_matches_completion"] = r.printed_matches_completion;
                j["schema_agrees_with_closed_form"] = r.schema_agrees_with_closed_form;
                j["discrepancies"] = r.discrepancies;
                j["consistent"] = r.consistent();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "printed basis verdict: " << to_string(r.printed_verdict) << "\n";
                std::cout << "irr matches mirror: " << (r.irr_matches_mirror ? "yes" : "no") << "\n";
                std::cout << "printed basis matches completion: " << (r.printed_matches_completion ? "yes" : "no")
                          << "\n";
                std::cout << "schema agrees with closed form: " << (r.schema_agrees_with_closed_form ? "yes" : "no")
                          << "\n";
                for (const auto& d : r.discrepancies) std::cout << "discrepancy: " << d << "\n";
            }
            return r.consistent() ? kOk : kFalse;
        }
        ProblemFile out{a, "deglex", {}, {}, {}};
        if (reduced) {
            RuleSet w = family_reduced(f, a);
            for (const auto& r : w.rules()) out.polys.push_back(NamedPolynomial{"w" + std::to_string(r.id + 1), r.poly});
        } else {
            out.relations = family_relations(f, a, bound);
        }
        std::cout << print_problem(out);
        return kOk;
    }

    int cmd_oracle(const std::string& path, const std::string& expr, std::optional<std::size_t> bound,
                   const Options& opt) {
        ProblemFile file = load(path, opt);
        RuleSet s = all_rules(file);
        DiPolynomial f = parse_polynomial(expr, file.alphabet, s.order());
        Names names(file);
        Membership m = span_membership(f, s, bound);
        const Alphabet& a = file.alphabet;
        auto tmpl = [&](const SDiword& t) {
            return "[" + str(t.left, a) + (t.left.empty() ? "" : " ") + "<" + names(t.rule) + ">" +
                   (t.right.empty() ? "" : " ") + str(t.right, a) + " @ " + std::to_string(t.center) + "]";
        };
        if (opt.json) {
            json j;
            j["certified"] = m.certified;
            j["combination"] = json::array();
            for (const auto& [t, c] : m.combination) {
                j["combination"].push_back({{"template", tmpl(t)}, {"coeff", c.get_str()}});
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (m.certified ? "certified" : "unknown-at-bound") << "\n";
            for (const auto& [t, c] : m.combination) std::cout << c.get_str() << " " << tmpl(t) << "\n";
        }
        return m.certified ? kOk : kBounded;
    }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Composition-Diamond lemma engine for dialgebras"};
    app.require_subcommand(1);
    // Global flags are accepted after the subcommand too; subcommands inherit this.
    app.fallthrough();
    Options opt;
    app.add_option("--fuel", opt.fuel, "Rules completion may add")->check(CLI::PositiveNumber);
    app.add_option("--max-len", opt.max_len, "Word-length bound for enumeration and audits");
    app.add_option("--rm-depth", opt.rm_depth, "Tail bound for right-multiplication closure")
        ->check(CLI::PositiveNumber);
    app.add_option("--order", opt.order, "Word order (deglex)");
    app.add_option("--threads", opt.threads, "Worker threads");
    app.add_flag("--json", opt.json, "Machine-readable report");
    app.add_flag("--as-is", opt.as_is, "Use the rules as given, without completing them first");

    std::string file, expr, expr2, policy = "value", family;
    std::size_t letters = 3, bound = 5;
    std::optional<std::size_t> oracle_bound;
    bool reduced = false, audit = false;

    auto* check = app.add_subcommand("check", "Decide whether the rules form a Groebner-Shirshov basis");
    check->add_option("file", file)->required();
    auto* comp = app.add_subcommand("complete", "Complete the rules");
    comp->add_option("file", file)->required();
    comp->add_option("--policy", policy, "value: add composition values; nf: add normal forms")
        ->check(CLI::IsMember({"value", "nf"}));
    auto* red = app.add_subcommand("reduce", "Reduced basis (completes first unless --as-is)");
    red->add_option("file", file)->required();
    auto* nf = app.add_subcommand("nf", "Normal form of a polynomial or diword");
    nf->add_option("file", file)->required();
    nf->add_option("expr", expr)->required();
    auto* irr = app.add_subcommand("irr", "Irreducible diwords up to --max-len");
    irr->add_option("file", file)->required();
    auto* wp = app.add_subcommand("wp", "Word problem for two diwords");
    wp->add_option("file", file)->required();
    wp->add_option("d1", expr)->required();
    wp->add_option("d2", expr2)->required();
    auto* fam = app.add_subcommand("family", "Print a built-in family or audit it");
    fam->add_option("name", family)->required();
    fam->add_option("--letters", letters, "Alphabet size (x1 < x2 < ...)");
    fam->add_option("--bound", bound, "Word-length bound of the schema instances");
    fam->add_flag("--reduced", reduced, "Print the reduced basis instead of the schema");
    fam->add_flag("--audit", audit, "Run the right-commutative audit");
    auto* orc = app.add_subcommand("oracle", "Brute-force ideal membership");
    orc->add_option("file", file)->required();
    orc->add_option("poly", expr)->required();
    orc->add_option("--bound", oracle_bound, "Length bound (default: longest support word + 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*check) return cmd_check(file, opt);
        if (*comp) return cmd_complete(file, opt, policy);
        if (*red) return cmd_reduce(file, opt);
        if (*nf) return cmd_nf(file, expr, opt);
        if (*irr) return cmd_irr(file, opt);
        if (*wp) return cmd_wp(file, expr, expr2, opt);
        if (*fam) return cmd_family(family, letters, bound, reduced, audit, opt);
        if (*orc) return cmd_oracle(file, expr, oracle_bound, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const CompletionFailure& e) {
        std::cerr << e.what() << "\n";
        return kBounded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
