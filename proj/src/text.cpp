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

#include "digs/text.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace digs {

    ParseError::ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    namespace {
        bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
        bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

        std::string_view trim(std::string_view s) {
            while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
            while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
            return s;
        }

        std::vector<std::string> split_ws(std::string_view s) {
            std::vector<std::string> out;
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && is_space(s[i])) ++i;
                std::size_t j = i;
                while (j < s.size() && !is_space(s[j])) ++j;
                if (j > i) out.emplace_back(s.substr(i, j - i));
                i = j;
            }
            return out;
        }

        bool valid_symbol(const std::string& s) {
            for (char c : s) {
                if (c == '[' || c == ']' || c == '@' || c == '#' || c == ':' || c == '=' || c == '+' || c == '-' ||
                    c == '/') {
                    return false;
                }
            }
            return !s.empty() && !is_digit(s.front());
        }

        bool valid_name(std::string_view s) {
            if (s.empty()) return false;
            for (char c : s) {
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'' && c != '.') return false;
            }
            return true;
        }

        // Parses "l1 l2 ... @ m" (the inside of the brackets).
        NormalDiword diword_body(std::string_view body, const Alphabet& alphabet) {
            auto at = body.find('@');
            if (at == std::string_view::npos) throw ParseError(0, "diword needs '@ center'");
            auto names = split_ws(body.substr(0, at));
            if (names.empty()) throw ParseError(0, "diword has an empty word");
            Word w;
            for (const auto& n : names) {
                auto letter = alphabet.find(n);
                if (!letter) throw ParseError(0, "unknown symbol '" + n + "'");
                w.push_back(*letter);
            }
            auto center_text = trim(body.substr(at + 1));
            if (center_text.empty() || center_text.size() > 9) throw ParseError(0, "bad diword center");
            std::uint32_t m = 0;
            for (char c : center_text) {
                if (!is_digit(c)) throw ParseError(0, "bad diword center '" + std::string(center_text) + "'");
                m = m * 10 + static_cast<std::uint32_t>(c - '0');
            }
            if (m < 1 || m > w.size()) throw ParseError(0, "diword center " + std::to_string(m) + " out of range");
            return NormalDiword(std::move(w), m);
        }

        std::size_t bracket_end(std::string_view text, std::size_t open) {
            auto close = text.find(']', open);
            if (close == std::string_view::npos) throw ParseError(0, "missing ']'");
            return close;
        }

        ParseError at_line(const ParseError& e, std::size_t line) { return ParseError(line, e.what()); }
    }  // namespace

    NormalDiword parse_diword(std::string_view text, const Alphabet& alphabet) {
        text = trim(text);
        if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
            throw ParseError(0, "expected a diword '[... @ m]'");
        }
        if (bracket_end(text, 0) != text.size() - 1) throw ParseError(0, "trailing text after diword");
        return diword_body(text.substr(1, text.size() - 2), alphabet);
    }

    DiPolynomial parse_polynomial(std::string_view text, const Alphabet& alphabet, const WordOrder& order) {
        text = trim(text);
        if (text == "0") return DiPolynomial(order);
        if (text.empty()) throw ParseError(0, "empty polynomial");
        std::vector<Term> terms;
        std::size_t i = 0;
        bool first = true;
        auto skip = [&] {
            while (i < text.size() && is_space(text[i])) ++i;
        };
        while (true) {
            skip();
            if (i == text.size()) break;
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip();
            } else if (!first) {
                throw ParseError(0, "expected '+' or '-' between terms");
            }
            Coefficient c(1);
            if (i < text.size() && is_digit(text[i])) {
                std::size_t j = i;
                while (j < text.size() && is_digit(text[j])) ++j;
                std::string num(text.substr(i, j - i));
                std::string den = "1";
                if (j < text.size() && text[j] == '/') {
                    std::size_t k = j + 1;
                    while (k < text.size() && is_digit(text[k])) ++k;
                    if (k == j + 1) throw ParseError(0, "missing denominator");
                    den = std::string(text.substr(j + 1, k - j - 1));
                    j = k;
                }
                mpz_class n(num), d(den);
                if (d == 0) throw ParseError(0, "zero denominator");
                c = Coefficient(n, d);
                c.canonicalize();
                i = j;
                skip();
            }
            if (i == text.size() || text[i] != '[') throw ParseError(0, "expected '[' to start a diword");
            std::size_t close = bracket_end(text, i);
            NormalDiword d = diword_body(text.substr(i + 1, close - i - 1), alphabet);
            i = close + 1;
            if (sign < 0) c = -c;
            terms.push_back(Term{std::move(d), std::move(c)});
            first = false;
        }
        return DiPolynomial::from_terms(std::move(terms), order);
    }

    ProblemFile parse_problem(std::string_view text) {
        std::optional<Alphabet> alphabet;
        std::string order = "deglex";
        std::vector<NamedPolynomial> polys;
        std::vector<Relation> relations;
        std::vector<std::pair<std::string, std::string>> options;
        std::set<std::string> names;

        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;

            auto colon = line.find(':');
            if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
            auto key = split_ws(line.substr(0, colon));
            std::string_view value = trim(line.substr(colon + 1));
            if (key.empty()) throw ParseError(line_no, "missing key");

            try {
                if (key[0] == "alphabet" && key.size() == 1) {
                    if (alphabet) throw ParseError(0, "duplicate alphabet declaration");
                    auto symbols = split_ws(value);
                    for (const auto& s : symbols) {
                        if (!valid_symbol(s)) throw ParseError(0, "invalid symbol '" + s + "'");
                    }
                    try {
                        alphabet.emplace(std::move(symbols));
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(0, e.what());
                    }
                } else if (key[0] == "order" && key.size() == 1) {
                    try {
                        order_by_name(value);
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(0, e.what());
                    }
                    order = std::string(value);
                } else if (key[0] == "poly" && key.size() == 2) {
                    if (!alphabet) throw ParseError(0, "poly before alphabet");
                    if (!valid_name(key[1])) throw ParseError(0, "invalid name '" + key[1] + "'");
                    if (!names.insert(key[1]).second) throw ParseError(0, "duplicate name '" + key[1] + "'");
                    polys.push_back(NamedPolynomial{key[1], parse_polynomial(value, *alphabet)});
                } else if (key[0] == "rel" && key.size() == 1) {
                    if (!alphabet) throw ParseError(0, "rel before alphabet");
                    auto eq = value.find('=');
                    if (eq == std::string_view::npos) throw ParseError(0, "relation needs '='");
                    NormalDiword lhs = parse_diword(value.substr(0, eq), *alphabet);
                    NormalDiword rhs = parse_diword(value.substr(eq + 1), *alphabet);
                    if (lhs == rhs) throw ParseError(0, "relation with identical sides");
                    relations.emplace_back(std::move(lhs), std::move(rhs));
                } else if (key[0] == "option" && key.size() == 2) {
                    options.emplace_back(key[1], std::string(value));
                } else {
                    throw ParseError(0, "unknown key '" + std::string(trim(line.substr(0, colon))) + "'");
                }
            } catch (const ParseError& e) {
                if (e.line() != 0) throw;
                throw at_line(e, line_no);
            }
        }
        if (!alphabet) throw ParseError(line_no, "missing alphabet declaration");
        return ProblemFile{std::move(*alphabet), std::move(order), std::move(polys), std::move(relations),
                           std::move(options)};
    }

    ProblemFile read_problem_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_problem(buf.str());
    }

    std::string print_problem(const ProblemFile& file) {
        std::string out = "alphabet:";
        for (const auto& s : file.alphabet.names_greatest_first()) out += " " + s;
        out += "\norder: " + file.order + "\n";
        for (const auto& p : file.polys) out += "poly " + p.name + ": " + to_string(p.poly, file.alphabet) + "\n";
        for (const auto& [lhs, rhs] : file.relations) {
            out += "rel: " + to_string(lhs, file.alphabet) + " = " + to_string(rhs, file.alphabet) + "\n";
        }
        for (const auto& [k, v] : file.options) out += "option " + k + ": " + v + "\n";
        return out;
    }

    RuleSet rules_of(const ProblemFile& file) {
        RuleSet s(file.alphabet, order_by_name(file.order));
        for (const auto& p : file.polys) {
            if (p.poly.is_zero()) throw std::invalid_argument("polynomial '" + p.name + "' is zero");
            s.add(p.poly);
        }
        return s;
    }

    Presentation presentation_of(const ProblemFile& file) {
        return Presentation(file.alphabet, file.relations, order_by_name(file.order));
    }

}  // namespace digs
