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

#include <set>

#include "corpus.hpp"

using namespace digs;
using namespace digs::testing;

namespace {
    const Alphabet x = unary();
    Word xs(std::size_t n) { return Word(n, Letter{0}); }
}  // namespace

TEST_CASE("rule sets store monic rules") {
    RuleSet s(x);
    CHECK(s.add(Coefficient(3, 2) * unary_rule('h')) == 0);
    CHECK(s[0].poly == unary_rule('h'));
    CHECK(s[0].id == 0);
    CHECK_THROWS_AS(s.add(DiPolynomial()), std::invalid_argument);
    CHECK_THROWS_AS(s.add(DiPolynomial(NormalDiword(Word{0, 1}, 1))), std::invalid_argument);
    CHECK(s.lengths() == std::set<std::size_t>{4});
    CHECK(s.rules_with_word(xs(4)).size() == 1);
    CHECK(s.rules_with_word(xs(3)).empty());
}

TEST_CASE("admissible centers") {
    RuleSet s = unary_set("gh");
    CHECK(p_set(s[0].lead, 1, 0) == std::vector<std::uint32_t>{4});
    CHECK(p_set(s[1].lead, 0, 1) == std::vector<std::uint32_t>{3});
    Alphabet a({"x1", "x2", "x3"});
    RuleSet m(a);
    m.add(poly("[x1 x2 @ 2]", a));
    CHECK(p_set(m[0].lead, 1, 1) == std::vector<std::uint32_t>{1, 3, 4});
    CHECK(admissible(m[0].lead, 1, 1, 3));
    CHECK_FALSE(admissible(m[0].lead, 1, 1, 2));
    CHECK(p_set(m[0].lead, 1, 1) == admissible_centers(m[0], 1, 1));
}

TEST_CASE("instantiation") {
    RuleSet s = unary_set("g");
    CHECK(instantiate(s[0], xs(1), {}, 4) == poly("[x x x x @ 4] - 1/2 [x x x x @ 3] - 1/2 [x x x x @ 2]", x));
    CHECK_THROWS_AS(instantiate(s[0], xs(1), {}, 3), std::invalid_argument);
    RuleSet f = unary_set("f");
    CHECK(instantiate(f[0], {}, {}, 4) == f[0].poly);
}

TEST_CASE("instantiation agrees with the products") {
    Rng rng(23);
    for (const auto& c : corpus()) {
        for (const auto& s : c.rules.rules()) {
            const std::size_t k = c.rules.alphabet().size();
            for (int t = 0; t < 20; ++t) {
                Word a = random_word(rng, k, rng() % 3), b = random_word(rng, k, rng() % 3);
                for (std::uint32_t m : p_set(s.lead, a.size(), b.size())) {
                    DiPolynomial inst = instantiate(s, a, b, m);
                    CHECK(inst == product_instance(s, a, b, m));
                    CHECK(inst.leading() == NormalDiword(a + s.lead.assoc_word + b, m));
                }
            }
        }
    }
}

TEST_CASE("occurrences") {
    CHECK_FALSE(find_occurrence(xpow(5, 1), unary_set("ghp")));
    auto occ = find_occurrence(xpow(5, 1), unary_set("fghp"));
    REQUIRE(occ);
    CHECK(occ->rule == 0);
    CHECK(occ->left == xs(1));
    CHECK(occ->right.empty());
    CHECK(occ->center == 1);
    auto self = find_occurrence(xpow(3, 3), unary_set("g"));
    REQUIRE(self);
    CHECK(*self == Occurrence{0, {}, {}, 3});
}

TEST_CASE("normal forms") {
    auto r = normal_form(DiPolynomial(xpow(4, 4)), unary_set("g"));
    CHECK(r.remainder == poly("3/4 [x x x x @ 2] + 1/4 [x x x x @ 1]", x));
    CHECK(r.remainder == Coefficient(3, 4) * unary_rule('p'));
    CHECK(r.trace.size() == 2);

    RuleSet comm = family_reduced(Family::Commutative, Alphabet({"y", "x"}));
    Alphabet yx({"y", "x"});
    CHECK(reduce(poly("[y x @ 2]", yx), comm) == poly("[x y @ 2]", yx));

    auto irr = normal_form(DiPolynomial(xpow(2, 1)), unary_set("g"));
    CHECK(irr.remainder == DiPolynomial(xpow(2, 1)));
    CHECK(irr.trace.empty());
}

TEST_CASE("normal form properties") {
    Rng rng(29);
    for (const auto& c : corpus()) {
        const std::size_t k = c.rules.alphabet().size();
        for (int t = 0; t < 30; ++t) {
            DiPolynomial f = random_poly(rng, k, 5, 5);
            f += random_ideal_element(rng, c.rules, 5, 2);
            Reduction r = normal_form(f, c.rules);
            for (const auto& term : r.remainder.terms()) CHECK(is_irreducible(term.diword, c.rules));
            CHECK(f - r.remainder == replay(r.trace, c.rules));
            auto again = normal_form(r.remainder, c.rules);
            CHECK(again.remainder == r.remainder);
            CHECK(again.trace.empty());
            if (f.is_zero()) continue;
            for (const auto& step : r.trace) {
                CHECK(compare(instantiate(c.rules, step.occurrence).leading(), f.leading()) !=
                      std::strong_ordering::greater);
            }
            if (!r.remainder.is_zero()) {
                CHECK(compare(r.remainder.leading(), f.leading()) != std::strong_ordering::greater);
            }
        }
    }
}

TEST_CASE("irreducible diwords of a single monomial rule") {
    Alphabet a({"x1", "x2", "x3"});
    RuleSet s(a);
    s.add(poly("[x1 x2 @ 2]", a));
    const Letter x1 = *a.find("x1"), x2 = *a.find("x2");
    // Every factor x1 x2 must start exactly at the center.
    auto described = [&](const NormalDiword& d) {
        for (std::size_t i = 0; i + 1 < d.length(); ++i) {
            if (d.word()[i] == x1 && d.word()[i + 1] == x2 && i + 1 != d.center()) return false;
        }
        return true;
    };
    auto irr = enumerate_irr(s, 5);
    std::size_t expected = 0;
    for (const auto& d : all_diwords(a, 5)) expected += described(d);
    CHECK(irr.size() == expected);
    for (const auto& d : irr) CHECK(described(d));
}

TEST_CASE("enumeration") {
    Alphabet a({"y", "x"});
    RuleSet empty(a);
    auto all = enumerate_irr(empty, 3);
    CHECK(all.size() == 2 * 1 + 4 * 2 + 8 * 3);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(compare(all[i - 1], all[i]) == std::strong_ordering::less);

    auto irr = enumerate_irr(family_reduced(Family::Commutative, indexed(3)), 5);
    std::vector<std::size_t> by_len(6, 0);
    for (const auto& d : irr) ++by_len[d.length()];
    CHECK(by_len == std::vector<std::size_t>{0, 3, 12, 10, 15, 21});
}
