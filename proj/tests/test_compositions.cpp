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
#include <map>
#include <tuple>

#include "corpus.hpp"

using namespace digs;
using namespace digs::testing;

namespace {
    const Alphabet x = unary();
    DiPolynomial P(const std::string& s) { return poly(s, x); }

    // (kind, first, second, length, center) for comparing inventories.
    using Key = std::tuple<CompositionKind, std::size_t, std::size_t, std::size_t, std::uint32_t>;
    Key key(CompositionKind k, std::size_t f, std::size_t g, std::size_t n, std::uint32_t m) { return {k, f, g, n, m}; }
}  // namespace

TEST_CASE("inclusion compositions") {
    RuleSet s = unary_set("fghp");
    auto fg = inclusion_compositions(s, 0, 1);
    REQUIRE(fg.size() == 1);
    CHECK(fg[0].kind == CompositionKind::Inclusion);
    CHECK(fg[0].ambiguity == xpow(4, 4));
    CHECK(fg[0].value == Coefficient(1, 2) * unary_rule('h'));

    auto hg = inclusion_compositions(s, 2, 1);
    REQUIRE(hg.size() == 1);
    CHECK(hg[0].ambiguity == xpow(4, 3));
    CHECK(hg[0].value == P("3/2 [x x x x @ 2] + 1/2 [x x x x @ 1]"));
    CHECK(monic(hg[0].value) == unary_rule('p'));

    CHECK(inclusion_compositions(s, 1, 0).empty());
    CHECK(inclusion_compositions(s, 0, 0).empty());
}

TEST_CASE("inclusion at a strong rule's side centers") {
    Alphabet a({"y", "x"});
    RuleSet s(a);
    s.add(poly("[y x y @ 1]", a));
    s.add(poly("[x @ 1]", a));
    // g is a monomial, so every center of [y g y] is admissible.
    auto inc = inclusion_compositions(s, 0, 1);
    REQUIRE(inc.size() == 1);
    CHECK(inc[0].kind == CompositionKind::Inclusion);
    CHECK(inc[0].value.is_zero());

    RuleSet t(a);
    t.add(poly("[y x @ 1] + [x @ 1]", a));
    t.add(poly("[x @ 1] + [y @ 1]", a));
    // g's leading word is y; P([g x]) = {1, 2} contains p(f) = 1.
    auto inc2 = inclusion_compositions(t, 0, 1);
    REQUIRE(inc2.size() == 1);
    CHECK(inc2[0].value == t[0].poly - instantiate(t[1], {}, Word{*a.find("x")}, 1));
}

TEST_CASE("multiplicative variants appear when no center is shared") {
    Alphabet a({"y", "x"});
    const Letter y = *a.find("y"), xl = *a.find("x");
    RuleSet s(a);
    s.add(poly("[y x y @ 3] + [x @ 1]", a));
    s.add(poly("[x y @ 2] + [y @ 1]", a));
    // P([y g]) = {1, 3} contains p(f) = 3.
    auto inc = inclusion_compositions(s, 0, 1);
    REQUIRE(inc.size() == 1);
    CHECK(inc[0].kind == CompositionKind::Inclusion);

    RuleSet v(a);
    v.add(poly("[y x y x @ 3] + [x @ 1]", a));
    v.add(poly("[x y @ 1] + [y @ 1]", a));
    // P([y g x]) = {1, 2, 4} misses p(f) = 3; both strong, so one left and one right variant per letter.
    auto mult = inclusion_compositions(v, 0, 1);
    REQUIRE(mult.size() == 4);
    std::size_t left = 0, right = 0;
    for (const auto& c : mult) {
        left += c.kind == CompositionKind::LeftMultInclusion;
        right += c.kind == CompositionKind::RightMultInclusion;
        REQUIRE(c.letter);
        const Word l{*c.letter};
        if (c.kind == CompositionKind::LeftMultInclusion) {
            CHECK(c.ambiguity == NormalDiword(l + v[0].lead.assoc_word, 1));
            CHECK(c.value == product_left(DiPolynomial(NormalDiword(l, 1)), v[0].poly) -
                                 instantiate(v[1], l + Word{y}, Word{xl}, 1));
        } else {
            CHECK(c.ambiguity == NormalDiword(v[0].lead.assoc_word + l, 5));
            CHECK(c.value == product_right(v[0].poly, DiPolynomial(NormalDiword(l, 1))) -
                                 instantiate(v[1], Word{y}, Word{xl} + l, 5));
        }
        if (!c.value.is_zero()) CHECK(compare(c.value.leading(), c.ambiguity) == std::strong_ordering::less);
    }
    CHECK(left == 2);
    CHECK(right == 2);
}

TEST_CASE("intersection compositions") {
    RuleSet s = unary_set("fghp");
    auto ff = intersection_compositions(s, 0, 0);
    std::vector<NormalDiword> amb;
    for (const auto& c : ff) amb.push_back(c.ambiguity);
    CHECK(std::count(amb.begin(), amb.end(), xpow(7, 7)) == 1);
    for (const auto& c : ff) {
        if (c.ambiguity.length() == 7) CHECK(c.ambiguity.center() == 7);
    }
    CHECK(intersection_compositions(s, 1, 1).empty());
    auto pf = intersection_compositions(s, 3, 0);
    REQUIRE(!pf.empty());
    CHECK(pf[0].ambiguity == xpow(7, 2));
}

TEST_CASE("left multiplication") {
    RuleSet s = unary_set("fghp");
    auto g = left_multiplication_compositions(s, 1);
    REQUIRE(g.size() == 1);
    CHECK(g[0].value.is_zero());
    auto h = left_multiplication_compositions(s, 2);
    REQUIRE(h.size() == 1);
    CHECK(h[0].value == P("2 [x x x x x @ 1]"));
    CHECK(h[0].ambiguity == xpow(5, 1));
    CHECK(left_multiplication_compositions(s, 0).empty());
}

TEST_CASE("the composition inventory of the four-rule example") {
    RuleSet s = unary_set("fghp");
    const std::size_t f = 0, g = 1, h = 2, p = 3;
    std::multiset<Key> expected = {
        key(CompositionKind::Intersection, f, f, 7, 7), key(CompositionKind::Intersection, f, f, 6, 6),
        key(CompositionKind::Intersection, f, f, 5, 5), key(CompositionKind::Intersection, f, g, 6, 6),
        key(CompositionKind::Intersection, f, g, 5, 5), key(CompositionKind::Intersection, f, h, 7, 6),
        key(CompositionKind::Intersection, f, h, 6, 5), key(CompositionKind::Intersection, f, h, 5, 4),
        key(CompositionKind::Intersection, f, p, 7, 5), key(CompositionKind::Intersection, f, p, 6, 4),
        key(CompositionKind::Intersection, g, p, 5, 3), key(CompositionKind::Intersection, h, f, 7, 3),
        key(CompositionKind::Intersection, h, p, 5, 3), key(CompositionKind::Intersection, p, f, 7, 2),
        key(CompositionKind::Intersection, p, f, 6, 2), key(CompositionKind::Inclusion, f, g, 4, 4),
        key(CompositionKind::Inclusion, h, g, 4, 3),
    };
    std::multiset<Key> got;
    for (const auto& c : all_compositions(s)) {
        if (c.kind == CompositionKind::Inclusion || c.kind == CompositionKind::Intersection) {
            got.insert(key(c.kind, c.first, c.second, c.ambiguity.length(), c.ambiguity.center()));
        }
    }
    CHECK(got == expected);
}

TEST_CASE("composition values stay below their ambiguity") {
    for (const auto& c : corpus()) {
        for (const auto& comp : all_compositions(c.rules)) {
            if (comp.value.is_zero()) continue;
            if (is_multiplication(comp.kind)) {
                CHECK(compare(comp.value.leading(), comp.ambiguity) != std::strong_ordering::greater);
            } else {
                CHECK(compare(comp.value.leading(), comp.ambiguity) == std::strong_ordering::less);
            }
        }
    }
}

TEST_CASE("right multiplication closure") {
    RuleSet g = unary_set("g");
    CHECK(right_multiplication_closure(g, 0).kind == ClosureVerdict::Kind::Closed);
    CHECK_THROWS_AS(right_multiplication_closure(g, 0, 0), std::invalid_argument);

    RuleSet strong(x);
    strong.add(DiPolynomial(xpow(2, 1)));
    CHECK(right_multiplication_closure(strong, 0).kind == ClosureVerdict::Kind::Closed);

    RuleSet s = load_rules("fgh-closure");
    const Alphabet& a = s.alphabet();
    const Letter x1 = *a.find("x1");
    // Single-letter products are trivial.
    for (Letter l : a.letters()) {
        CHECK(is_trivial(right_multiplication_composition(s, 0, Word{l}), s));
    }
    ClosureVerdict v = right_multiplication_closure(s, 0);
    REQUIRE(v.kind == ClosureVerdict::Kind::Nontrivial);
    CHECK(v.witness == (Word{x1, x1}));
    CHECK_FALSE(v.residual.is_zero());
    CHECK(v.residual == composition_remainder(right_multiplication_composition(s, 0, v.witness), s));
    for (std::size_t r : {1u, 2u}) CHECK(right_multiplication_closure(s, r).kind == ClosureVerdict::Kind::Closed);
}

TEST_CASE("triviality") {
    RuleSet s = unary_set("fghp");
    auto fg = inclusion_compositions(s, 0, 1);
    CHECK(is_trivial(fg[0], s));
    RuleSet ghp = unary_set("ghp");
    auto xh = left_multiplication_compositions(ghp, 1);
    CHECK_FALSE(is_trivial(xh[0], ghp));
    CHECK(composition_remainder(xh[0], ghp) == P("2 [x x x x x @ 1]"));
    Composition zero = xh[0];
    zero.value = DiPolynomial();
    CHECK(is_trivial(zero, ghp));
}

TEST_CASE("a trace above the ambiguity is rejected") {
    RuleSet s = unary_set("fghp");
    Composition c = inclusion_compositions(s, 0, 1)[0];
    c.ambiguity = xpow(4, 2);
    CHECK_THROWS_AS(composition_remainder(c, s), std::logic_error);
}
