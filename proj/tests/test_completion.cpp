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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "digs/oracle.hpp"

using namespace digs;
using namespace digs::testing;

namespace {
    const Alphabet x = unary();

    std::set<std::string> rule_texts(const RuleSet& s) {
        std::set<std::string> out;
        for (const auto& r : s.rules()) out.insert(to_string(r.poly, s.alphabet()));
        return out;
    }

    std::set<std::string> texts(std::initializer_list<DiPolynomial> ps) {
        std::set<std::string> out;
        for (const auto& p : ps) out.insert(to_string(monic(p), x));
        return out;
    }
}  // namespace

TEST_CASE("basis checks") {
    Alphabet a({"x1", "x2", "x3"});
    RuleSet m(a);
    m.add(poly("[x1 x2 @ 2]", a));
    CHECK(check_gs(m).verdict == Verdict::GS);

    CheckReport r = check_gs(unary_set("fghp"));
    CHECK(r.verdict == Verdict::GS);
    CHECK(r.witnesses.empty());
    CHECK(r.closures.size() == 3);

    CheckReport bad = check_gs(unary_set("ghp"));
    CHECK(bad.verdict == Verdict::NotGS);
    REQUIRE_FALSE(bad.witnesses.empty());
    const Witness& w = bad.witnesses.front();
    CHECK(w.composition.kind == CompositionKind::LeftMultiplication);
    CHECK(w.composition.first == 1);
    CHECK(w.remainder == poly("2 [x x x x x @ 1]", x));
}

TEST_CASE("check counts match the inventory") {
    CheckReport r = check_gs(unary_set("fghp"));
    std::array<std::size_t, kCompositionKinds> counts{};
    for (const auto& c : r.inventory) ++counts[static_cast<std::size_t>(c.kind)];
    counts[static_cast<std::size_t>(CompositionKind::RightMultiplication)] += r.closures.size();
    CHECK(counts == r.counts);
}

TEST_CASE("bounded closure downgrades the verdict") {
    // Tails of length 1 suffice to see g |- x = 0 but the f |- [x1 x1] witness needs 2.
    RuleSet s = load_rules("fgh-closure");
    CheckReport shallow = check_gs(s, CheckConfig{1, 1});
    CHECK(shallow.verdict == Verdict::NotGS);
    CheckReport deep = check_gs(s, CheckConfig{8, 1});
    CHECK(deep.verdict == Verdict::NotGS);
    CHECK(std::any_of(deep.witnesses.begin(), deep.witnesses.end(), [](const Witness& w) {
        return w.composition.kind == CompositionKind::RightMultiplication;
    }));
}

TEST_CASE("completion") {
    CompletionResult g = complete(unary_set("g"));
    CHECK(g.status == CompletionStatus::Complete);
    CHECK(rule_texts(g.basis) == rule_texts(unary_set("g")));

    CompletionResult fg = complete(unary_set("fg"));
    CHECK(fg.status == CompletionStatus::Complete);
    CHECK_FALSE(fg.bounded);
    CHECK(rule_texts(fg.basis) ==
          texts({unary_rule('f'), unary_rule('g'), unary_rule('h'), unary_rule('p')}));
    REQUIRE(fg.log.size() == 2);
    CHECK(fg.log[0].kind == CompositionKind::Inclusion);
    CHECK(fg.log[0].ambiguity == xpow(4, 4));

    CompletionResult none = complete(RuleSet(x));
    CHECK(none.basis.empty());
    CHECK(none.status == CompletionStatus::Complete);

    CompletionConfig zero;
    zero.fuel = 0;
    CHECK_THROWS_AS(complete(unary_set("g"), zero), std::invalid_argument);
}

TEST_CASE("completion output is a basis of the same ideal") {
    for (const char* start : {"fg", "ghp", "gh"}) {
        RuleSet s0 = unary_set(start);
        CompletionResult r = complete(s0);
        REQUIRE(r.status == CompletionStatus::Complete);
        CHECK(check_gs(r.basis).verdict == Verdict::GS);
        for (const auto& rule : r.basis.rules()) {
            CHECK(span_membership(rule.poly, s0).certified);
        }
        for (const auto& e : r.log) CHECK(e.rule < r.basis.size());
    }
}

TEST_CASE("fuel exhaustion is reported") {
    CompletionConfig cfg;
    cfg.fuel = 1;
    CompletionResult r = complete(unary_set("fg"), cfg);
    CHECK(r.status == CompletionStatus::FuelExhausted);
    CHECK(r.log.size() == 1);
}

TEST_CASE("both add policies reach a basis of the same ideal") {
    CompletionConfig nf;
    nf.policy = AddPolicy::NormalForm;
    CompletionResult a = complete(unary_set("fg"), nf);
    CompletionResult b = complete(unary_set("fg"));
    CHECK(check_gs(a.basis).verdict == Verdict::GS);
    CHECK(rule_texts(reduce_basis(a.basis).first) == rule_texts(reduce_basis(b.basis).first));
}

TEST_CASE("reduced bases") {
    auto [w, rep] = reduce_basis(unary_set("fghp"));
    CHECK(rule_texts(w) == texts({unary_rule('g'), unary_rule('p'), DiPolynomial(xpow(5, 1))}));
    CHECK(rule_texts(rep.first_pass) == texts({unary_rule('g'), unary_rule('p')}));
    CHECK(check_gs(rep.first_pass).verdict == Verdict::NotGS);
    CHECK(rep.final_check.verdict == Verdict::GS);
    CHECK(rep.iterations >= 2);
    CHECK(is_reduced(w));
    CHECK_FALSE(is_reduced(unary_set("fghp")));

    auto [again, rep2] = reduce_basis(w);
    CHECK(rule_texts(again) == rule_texts(w));
    CHECK(rep2.iterations == 1);

    CHECK_THROWS_AS(reduce_basis(unary_set("ghp")), std::invalid_argument);
}

TEST_CASE("reduced basis is independent of the starting basis") {
    std::string order = "fghp";
    const auto expected = rule_texts(reduce_basis(unary_set(order)).first);
    do {
        CHECK(rule_texts(reduce_basis(unary_set(order)).first) == expected);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(rule_texts(reduce_basis(complete(unary_set("fg")).basis).first) == expected);
}

TEST_CASE("parallel checking and completion match the serial run") {
    for (const auto& c : corpus()) {
        CheckReport s = check_gs(c.rules, CheckConfig{8, 1});
        CheckReport p = check_gs(c.rules, CheckConfig{8, 4});
        CHECK(s.verdict == p.verdict);
        CHECK(s.counts == p.counts);
        REQUIRE(s.witnesses.size() == p.witnesses.size());
        for (std::size_t i = 0; i < s.witnesses.size(); ++i) {
            CHECK(s.witnesses[i].remainder == p.witnesses[i].remainder);
            CHECK(s.witnesses[i].composition.ambiguity == p.witnesses[i].composition.ambiguity);
        }
    }
    for (const char* start : {"fg", "ghp"}) {
        CompletionConfig one, four;
        four.threads = 4;
        CompletionResult a = complete(unary_set(start), one), b = complete(unary_set(start), four);
        REQUIRE(a.basis.size() == b.basis.size());
        for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i].poly == b.basis[i].poly);
        REQUIRE(a.log.size() == b.log.size());
        for (std::size_t i = 0; i < a.log.size(); ++i) CHECK(a.log[i].ambiguity == b.log[i].ambiguity);
    }
}
