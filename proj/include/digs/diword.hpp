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

// Normal diwords [u]_m: a nonempty word with a distinguished center position.

#ifndef DIGS_DIWORD_HPP
#define DIGS_DIWORD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "digs/word.hpp"

namespace digs {

    class NormalDiword {
    public:
        // Throws std::invalid_argument unless 1 <= center <= |word|.
        NormalDiword(Word word, std::uint32_t center);

        const Word& word() const { return word_; }
        std::uint32_t center() const { return center_; }
        std::size_t length() const { return word_.size(); }

        bool operator==(const NormalDiword&) const = default;

    private:
        Word word_;
        std::uint32_t center_;
    };

    // Word first under `order`, then center; a larger center is greater.
    inline std::strong_ordering compare(const NormalDiword& a, const NormalDiword& b,
                                        const WordOrder& order = deglex_order()) {
        if (auto c = order.compare(a.word(), b.word()); c != std::strong_ordering::equal) {
            return c;
        }
        return a.center() <=> b.center();
    }

    // [u]_m |- [v]_n = [uv]_{|u|+n}
    NormalDiword product_right(const NormalDiword& lhs, const NormalDiword& rhs);

    // [u]_m -| [v]_n = [uv]_m
    NormalDiword product_left(const NormalDiword& lhs, const NormalDiword& rhs);

    // Word reversed, center m -> |u| + 1 - m.
    NormalDiword mirror(const NormalDiword& d);

    // "[x1 x2 x3 @ 3]"
    std::string to_string(const NormalDiword& d, const Alphabet& alphabet);

    struct NormalDiwordHash {
        std::size_t operator()(const NormalDiword& d) const noexcept {
            std::size_t h = std::hash<Word>{}(d.word());
            return h ^ (static_cast<std::size_t>(d.center()) * 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2));
        }
    };

}  // namespace digs

#endif  // DIGS_DIWORD_HPP
