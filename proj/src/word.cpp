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

#include "digs/word.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace digs {

    Alphabet::Alphabet(std::vector<std::string> greatest_first) : names_(std::move(greatest_first)) {
        if (names_.empty()) {
            throw std::invalid_argument("alphabet must not be empty");
        }
        if (names_.size() > 0xFFFF) {
            throw std::invalid_argument("alphabet too large");
        }
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) {
                throw std::invalid_argument("empty symbol name");
            }
            if (!seen.insert(n).second) {
                throw std::invalid_argument("duplicate symbol '" + n + "'");
            }
        }
    }

    const std::string& Alphabet::name(Letter letter) const {
        if (letter >= names_.size()) {
            throw std::out_of_range("letter code out of range");
        }
        return names_[names_.size() - 1 - letter];
    }

    std::optional<Letter> Alphabet::find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) {
                return static_cast<Letter>(names_.size() - 1 - i);
            }
        }
        return std::nullopt;
    }

    std::vector<Letter> Alphabet::letters() const {
        std::vector<Letter> out;
        out.reserve(names_.size());
        for (std::size_t i = 0; i < names_.size(); ++i) {
            out.push_back(static_cast<Letter>(names_.size() - 1 - i));
        }
        return out;
    }

    std::string to_string(const Word& word, const Alphabet& alphabet) {
        std::string out;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) out += ' ';
            out += alphabet.name(word[i]);
        }
        return out;
    }

    const WordOrder& deglex_order() {
        static const DegLexOrder instance;
        return instance;
    }

    std::shared_ptr<const WordOrder> deglex_order_ptr() {
        // Non-owning handle to the static instance.
        return std::shared_ptr<const WordOrder>(std::shared_ptr<const WordOrder>{}, &deglex_order());
    }

    std::shared_ptr<const WordOrder> order_by_name(std::string_view name) {
        if (name == "deglex") {
            return deglex_order_ptr();
        }
        throw std::invalid_argument("unknown word order '" + std::string(name) + "'");
    }

    namespace {
        Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len) {
            std::uniform_int_distribution<std::size_t> len(1, max_len);
            std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
            Word w(len(rng), Letter{0});
            for (auto& c : w) c = static_cast<Letter>(pick(rng));
            return w;
        }

        std::string describe(const Word& w, const Alphabet& a) { return "'" + to_string(w, a) + "'"; }
    }  // namespace

    std::optional<std::string> find_monomial_violation(const WordOrder& order, const Alphabet& alphabet,
                                                       std::size_t samples, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const std::size_t n = alphabet.size();
        for (std::size_t i = 0; i < samples; ++i) {
            Word u = random_word(rng, n, 6);
            Word v = random_word(rng, n, 6);
            Word w = random_word(rng, n, 3);
            auto uv = order.compare(u, v);
            auto vu = order.compare(v, u);
            if ((uv == std::strong_ordering::equal) != (u == v)) {
                return "ties on distinct words " + describe(u, alphabet) + ", " + describe(v, alphabet);
            }
            if ((uv == std::strong_ordering::less) != (vu == std::strong_ordering::greater)) {
                return "asymmetric comparison of " + describe(u, alphabet) + ", " + describe(v, alphabet);
            }
            if (uv == std::strong_ordering::equal) continue;
            const Word& hi = uv == std::strong_ordering::greater ? u : v;
            const Word& lo = uv == std::strong_ordering::greater ? v : u;
            if (order.compare(hi + w, lo + w) != std::strong_ordering::greater ||
                order.compare(w + hi, w + lo) != std::strong_ordering::greater) {
                return "monomial law fails for " + describe(hi, alphabet) + " > " + describe(lo, alphabet) +
                       " with " + describe(w, alphabet);
            }
            // transitivity on a third sample
            Word t = random_word(rng, n, 6);
            if (order.compare(hi, lo) == std::strong_ordering::greater &&
                order.compare(lo, t) == std::strong_ordering::greater &&
                order.compare(hi, t) != std::strong_ordering::greater) {
                return "not transitive on " + describe(hi, alphabet) + ", " + describe(lo, alphabet) + ", " +
                       describe(t, alphabet);
            }
        }
        return std::nullopt;
    }

    std::shared_ptr<const WordOrder> checked_order(std::shared_ptr<const WordOrder> order, const Alphabet& alphabet) {
        if (!order) {
            throw std::invalid_argument("null word order");
        }
        if (auto violation = find_monomial_violation(*order, alphabet)) {
            throw std::invalid_argument("word order '" + order->name() + "' rejected: " + *violation);
        }
        return order;
    }

}  // namespace digs
