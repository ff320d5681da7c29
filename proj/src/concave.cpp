// Copyright 2026 The Stabforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabforge/concave.hpp"

#include <cctype>
#include <cmath>
#include <memory>

#include "stabforge/errors.hpp"

namespace stabforge {

namespace {

double safe_log(double v) { return std::log(std::max(v, 1e-300)); }

// Minimal recursive-descent parser for expressions in t:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := primary ('^' integer)?
//   primary:= number | 't' | 'log' '(' expr ')' | '(' expr ')'
class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    std::function<double(double)> parse() {
        auto f = expr();
        skip_ws();
        if (pos_ != s_.size()) throw invalid_input_error("trailing input in G expression");
        return f;
    }

  private:
    using Fn = std::function<double(double)>;

    Fn expr() {
        Fn acc = term();
        while (true) {
            skip_ws();
            if (consume('+')) {
                Fn rhs = term();
                acc = [acc, rhs](double t) { return acc(t) + rhs(t); };
            } else if (consume('-')) {
                Fn rhs = term();
                acc = [acc, rhs](double t) { return acc(t) - rhs(t); };
            } else {
                return acc;
            }
        }
    }

    Fn term() {
        Fn acc = unary();
        while (true) {
            skip_ws();
            if (consume('*')) {
                Fn rhs = unary();
                acc = [acc, rhs](double t) { return acc(t) * rhs(t); };
            } else if (consume('/')) {
                Fn rhs = unary();
                acc = [acc, rhs](double t) { return acc(t) / rhs(t); };
            } else {
                return acc;
            }
        }
    }

    Fn unary() {
        skip_ws();
        if (consume('-')) {
            Fn inner = unary();
            return [inner](double t) { return -inner(t); };
        }
        return power();
    }

    Fn power() {
        Fn base = primary();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw invalid_input_error("expected integer exponent after '^'");
            const int k = std::stoi(s_.substr(start, pos_ - start));
            return [base, k](double t) { return std::pow(base(t), k); };
        }
        return base;
    }

    Fn primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw invalid_input_error("unexpected end of G expression");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            const double v = std::stod(s_.substr(pos_), &used);
            pos_ += used;
            return [v](double) { return v; };
        }
        if (c == '(') {
            ++pos_;
            Fn inner = expr();
            skip_ws();
            if (!consume(')')) throw invalid_input_error("missing ')' in G expression");
            return inner;
        }
        if (match_word("log")) {
            skip_ws();
            if (!consume('(')) throw invalid_input_error("log requires parentheses");
            Fn inner = expr();
            skip_ws();
            if (!consume(')')) throw invalid_input_error("missing ')' after log");
            return [inner](double t) { return safe_log(inner(t)); };
        }
        if (c == 't' || c == 'T') {
            ++pos_;
            return [](double t) { return t; };
        }
        throw invalid_input_error(std::string("unexpected character '") + c +
                                  "' in G expression");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool match_word(const char* word) {
        std::size_t len = 0;
        while (word[len]) ++len;
        if (s_.compare(pos_, len, word) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

constexpr int kGridPoints = 101;

double grid_point(int i) { return static_cast<double>(i) / (kGridPoints - 1); }

}  // namespace

ConcaveFn builtin_concave(const std::string& name) {
    if (name == "shannon" || name == "-t*log(t)")
        return ConcaveFn{"shannon", [](double t) { return t > 0 ? -t * std::log(t) : 0.0; },
                         true, false};
    if (name == "quadratic" || name == "t-t^2")
        return ConcaveFn{"quadratic", [](double t) { return t - t * t; }, true, false};
    if (name == "sine")
        return ConcaveFn{"sine",
                         [](double t) {
                             static constexpr double pi = 3.14159265358979323846;
                             return std::sin(pi * t) / pi;
                         },
                         true, false};
    if (name == "linear") return ConcaveFn{"linear", [](double t) { return t; }, false, true};
    throw invalid_input_error("unknown built-in G '" + name + "'");
}

std::vector<ConcaveFn> builtin_concave_family() {
    return {builtin_concave("shannon"), builtin_concave("quadratic"), builtin_concave("sine")};
}

ConcaveFn parse_concave(const std::string& spec) {
    for (const char* name : {"shannon", "quadratic", "sine", "linear"})
        if (spec == name) return builtin_concave(name);

    auto g = Parser(spec).parse();
    ConcaveFn fn{spec, std::move(g), false, false};

    const double g1 = fn.g(1.0);
    bool linear = true;
    for (int i = 0; i < kGridPoints && linear; ++i) {
        const double t = grid_point(i);
        if (std::abs(fn.g(t) - t * g1) > 1e-12) linear = false;
    }
    fn.linear = linear;

    bool strict = !linear;
    for (int i = 0; i + 2 < kGridPoints && strict; i += 2) {
        const double s = grid_point(i), t = grid_point(i + 2);
        if (fn.g((s + t) / 2) - (fn.g(s) + fn.g(t)) / 2 <= 1e-12) strict = false;
    }
    fn.strictly_concave = strict;

    validate_concave(fn);
    return fn;
}

void validate_concave(const ConcaveFn& fn) {
    if (std::abs(fn.g(0.0)) > 1e-12)
        throw invalid_input_error("G(0) must be 0 for '" + fn.id + "'");
    for (int i = 0; i < kGridPoints; ++i) {
        for (int j = i; j < kGridPoints; ++j) {
            const double s = grid_point(i), t = grid_point(j);
            if (fn.g((s + t) / 2) < (fn.g(s) + fn.g(t)) / 2 - 1e-12)
                throw invalid_input_error("G is not concave on [0,1] for '" + fn.id + "'");
        }
    }
}

}  // namespace stabforge
