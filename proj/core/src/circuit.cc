// Copyright 2026 The qperc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperc/circuit.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

namespace qperc {

Circuit compile(const EventSequence &seq, const EncoderConfig &cfg) {
    validate(cfg);
    if (seq.tau() != cfg.tau) {
        throw std::invalid_argument("compile: sequence length " + std::to_string(seq.tau()) +
                                    " does not match configured tau " + std::to_string(cfg.tau));
    }
    Circuit c;
    if (cfg.init == InitState::kPlus) {
        c.gates.reserve(seq.tau() + 1);
        c.gates.push_back(Gate::h());
        for (Event e : seq.events()) {
            c.gates.push_back(Gate::ry(event_angle(e, cfg)));
        }
    } else {
        c.gates.reserve(seq.tau_back());
        double step = event_angle(Event::kBack, cfg);
        for (size_t k = 0; k < seq.tau_back(); k++) {
            c.gates.push_back(Gate::ry(step));
        }
    }
    c.measured = true;
    return c;
}

QubitState simulate(const Circuit &c) {
    QubitState s;
    for (const Gate &g : c.gates) {
        s = apply(g.kind == GateKind::kRy ? rotation_y(g.angle) : hadamard(), s);
    }
    return s;
}

std::string format_angle(double angle) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), angle);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_angle: conversion failed");
    }
    return std::string(buf, ptr);
}

std::string emit(const Circuit &c) {
    std::string out =
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[1];\n"
        "creg c[1];\n";
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::kH) {
            out += "h q[0];\n";
        } else {
            if (!std::isfinite(g.angle)) {
                throw std::invalid_argument("emit: non-finite rotation angle");
            }
            out += "ry(";
            out += format_angle(g.angle);
            out += ") q[0];\n";
        }
    }
    if (c.measured) {
        out += "measure q[0] -> c[0];\n";
    }
    return out;
}

CircuitParseError::CircuitParseError(size_t line, size_t column, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kIdent, kNumber, kString, kPunct, kArrow, kEnd };

struct Token {
    Tok kind;
    std::string_view text;
    size_t line;
    size_t column;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::kEnd, {}, line_, col_});
                return out;
            }
            size_t start = pos_;
            size_t line = line_;
            size_t col = col_;
            char ch = src_[pos_];
            Tok kind;
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    advance();
                }
                kind = Tok::kIdent;
            } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                while (pos_ < src_.size()) {
                    char c = src_[pos_];
                    bool exp_sign = (c == '+' || c == '-') && pos_ > start &&
                                    (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E');
                    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && !exp_sign) {
                        break;
                    }
                    advance();
                }
                kind = Tok::kNumber;
            } else if (ch == '"') {
                advance();
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                    advance();
                }
                if (pos_ >= src_.size() || src_[pos_] != '"') {
                    throw CircuitParseError(line, col, "unterminated string literal");
                }
                advance();
                kind = Tok::kString;
            } else if (ch == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                advance();
                advance();
                kind = Tok::kArrow;
            } else if (std::string_view("()[];,-+/*").find(ch) != std::string_view::npos) {
                advance();
                kind = Tok::kPunct;
            } else {
                throw CircuitParseError(line, col, std::string("unexpected character '") + ch + "'");
            }
            out.push_back({kind, src_.substr(start, pos_ - start), line, col});
        }
    }

   private:
    void advance() {
        if (src_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char ch = src_[pos_];
            if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
                advance();
            } else if (ch == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    size_t line_ = 1;
    size_t col_ = 1;
};

class Parser {
   public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Circuit run() {
        parse_header();
        Circuit c;
        while (peek().kind != Tok::kEnd) {
            const Token &head = peek();
            if (head.kind != Tok::kIdent) {
                fail(head, "expected a gate name, got '" + std::string(head.text) + "'");
            }
            if (c.measured) {
                fail(head, "measurement must be the last operation");
            }
            if (head.text == "ry") {
                next();
                expect_punct("(");
                double angle = parse_angle();
                expect_punct(")");
                parse_qubit_ref();
                expect_punct(";");
                c.gates.push_back(Gate::ry(angle));
            } else if (head.text == "h") {
                next();
                parse_qubit_ref();
                expect_punct(";");
                c.gates.push_back(Gate::h());
            } else if (head.text == "measure") {
                next();
                parse_qubit_ref();
                const Token &arrow = next();
                if (arrow.kind != Tok::kArrow) {
                    fail(arrow, "expected '->'");
                }
                parse_register_ref("c");
                expect_punct(";");
                c.measured = true;
            } else if (head.text == "qreg" || head.text == "creg" || head.text == "include" ||
                       head.text == "OPENQASM") {
                fail(head, "duplicate or misplaced '" + std::string(head.text) + "' declaration");
            } else {
                fail(head, "unsupported gate '" + std::string(head.text) + "'");
            }
        }
        return c;
    }

   private:
    [[noreturn]] static void fail(const Token &t, const std::string &msg) {
        throw CircuitParseError(t.line, t.column, msg);
    }

    const Token &peek() const { return toks_[pos_]; }

    const Token &next() {
        const Token &t = toks_[pos_];
        if (t.kind != Tok::kEnd) {
            pos_++;
        }
        return t;
    }

    void expect_punct(std::string_view p) {
        const Token &t = next();
        if (t.kind != Tok::kPunct || t.text != p) {
            fail(t, "expected '" + std::string(p) + "'" + describe(t));
        }
    }

    void expect_ident(std::string_view id) {
        const Token &t = next();
        if (t.kind != Tok::kIdent || t.text != id) {
            fail(t, "expected '" + std::string(id) + "'" + describe(t));
        }
    }

    static std::string describe(const Token &t) {
        if (t.kind == Tok::kEnd) {
            return " before end of input";
        }
        return ", got '" + std::string(t.text) + "'";
    }

    size_t parse_index() {
        const Token &t = next();
        size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (t.kind != Tok::kNumber || ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
            fail(t, "expected an integer index" + describe(t));
        }
        return v;
    }

    void parse_header() {
        const Token &version_kw = peek();
        if (version_kw.kind != Tok::kIdent || version_kw.text != "OPENQASM") {
            fail(version_kw, "expected 'OPENQASM 2.0;' header");
        }
        next();
        const Token &version = next();
        if (version.kind != Tok::kNumber || version.text != "2.0") {
            fail(version, "only OPENQASM 2.0 is supported");
        }
        expect_punct(";");

        expect_ident("include");
        const Token &inc = next();
        if (inc.kind != Tok::kString || inc.text != "\"qelib1.inc\"") {
            fail(inc, "expected \"qelib1.inc\"" + describe(inc));
        }
        expect_punct(";");

        parse_register_decl("qreg", "q");
        parse_register_decl("creg", "c");
    }

    void parse_register_decl(std::string_view keyword, std::string_view name) {
        expect_ident(keyword);
        expect_ident(name);
        expect_punct("[");
        const Token &size_tok = peek();
        size_t size = parse_index();
        if (size != 1) {
            fail(size_tok, "multi-qubit register " + std::string(name) + "[" + std::to_string(size) +
                               "] is not supported; only one-wide registers are accepted");
        }
        expect_punct("]");
        expect_punct(";");
    }

    void parse_register_ref(std::string_view name) {
        expect_ident(name);
        expect_punct("[");
        const Token &idx_tok = peek();
        size_t idx = parse_index();
        if (idx != 0) {
            fail(idx_tok, "index " + std::to_string(idx) + " out of range for one-wide register " +
                              std::string(name));
        }
        expect_punct("]");
    }

    void parse_qubit_ref() { parse_register_ref("q"); }

    double parse_angle() {
        const Token &first = peek();
        bool negative = false;
        if (first.kind == Tok::kPunct && (first.text == "-" || first.text == "+")) {
            negative = first.text == "-";
            next();
        }
        const Token &num = next();
        if (num.kind != Tok::kNumber) {
            fail(num, "angle must be a finite decimal literal" + describe(num));
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), v);
        if (ec != std::errc{} || ptr != num.text.data() + num.text.size() || !std::isfinite(v)) {
            fail(num, "angle '" + std::string(num.text) + "' is not a finite decimal");
        }
        const Token &after = peek();
        if (after.kind == Tok::kPunct && after.text != ")") {
            fail(after, "angle must be a finite decimal literal, not an expression");
        }
        return negative ? -v : v;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

Circuit parse(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

}  // namespace qperc
