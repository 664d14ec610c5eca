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

#include "digs/diword.hpp"

#include <algorithm>
#include <stdexcept>

namespace digs {

    NormalDiword::NormalDiword(Word word, std::uint32_t center) : word_(std::move(word)), center_(center) {
        if (word_.empty()) {
            throw std::invalid_argument("diword word must be nonempty");
        }
        if (center_ < 1 || center_ > word_.size()) {
            throw std::invalid_argument("diword center out of range");
        }
    }

    NormalDiword product_right(const NormalDiword& lhs, const NormalDiword& rhs) {
        return NormalDiword(lhs.word() + rhs.word(), static_cast<std::uint32_t>(lhs.length()) + rhs.center());
    }

    NormalDiword product_left(const NormalDiword& lhs, const NormalDiword& rhs) {
        return NormalDiword(lhs.word() + rhs.word(), lhs.center());
    }

    NormalDiword mirror(const NormalDiword& d) {
        Word w = d.word();
        std::reverse(w.begin(), w.end());
        return NormalDiword(std::move(w), static_cast<std::uint32_t>(d.length()) + 1 - d.center());
    }

    std::string to_string(const NormalDiword& d, const Alphabet& alphabet) {
        return "[" + to_string(d.word(), alphabet) + " @ " + std::to_string(d.center()) + "]";
    }

}  // namespace digs
