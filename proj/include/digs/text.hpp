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

// The line-oriented problem file format and canonical printing.
//
//   # comment
//   alphabet: x1 x2 x3          (greatest first)
//   order: deglex
//   poly f: 2 [x1 x2 x3 @ 3] - 2 [x1 x2 x3 @ 2] + 3 [x1 x3 @ 2]
//   rel: [y x @ 1] = [x y @ 1]
//   option fuel: 64

#ifndef DIGS_TEXT_HPP
#define DIGS_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digs/disemigroup.hpp"

namespace digs {

    class ParseError : public std::runtime_error {
    public:
        ParseError(std::size_t line, const std::string& message);
        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
    };

    struct NamedPolynomial {
        std::string name;
        DiPolynomial poly;
    };

    struct ProblemFile {
        Alphabet alphabet;
        std::string order = "deglex";
        std::vector<NamedPolynomial> polys;
        std::vector<Relation> relations;
        std::vector<std::pair<std::string, std::string>> options;
    };

    // Diwords and polynomials outside a file; errors are reported as line 0.
    NormalDiword parse_diword(std::string_view text, const Alphabet& alphabet);
    DiPolynomial parse_polynomial(std::string_view text, const Alphabet& alphabet,
                                  const WordOrder& order = deglex_order());

    ProblemFile parse_problem(std::string_view text);
    ProblemFile read_problem_file(const std::string& path);

    std::string print_problem(const ProblemFile& file);

    // The file's polynomials as rules, in file order.
    RuleSet rules_of(const ProblemFile& file);
    Presentation presentation_of(const ProblemFile& file);

}  // namespace digs

#endif  // DIGS_TEXT_HPP
