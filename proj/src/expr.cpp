/*
 *   Copyright 2026 The pastures authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "pastures/expr.hpp"

#include "pastures/errors.hpp"

#include <algorithm>
#include <cctype>

namespace pastures {

bool Expr::operator==(const Expr& o) const {
    auto same = [](const ExprPtr& a, const ExprPtr& b) { return (!a && !b) || (a && b && *a == *b); };
    return kind == o.kind && name == o.name && q == o.q && vars == o.vars && relations == o.relations &&
           lift == o.lift && same(left, o.left) && same(right, o.right);
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(const std::string& tok) {
        skip();
        return s_.compare(pos_, tok.size(), tok) == 0;
    }

    bool accept(const std::string& tok) {
        if (!peek(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(const std::string& tok) {
        if (!accept(tok)) fail("expected '" + tok + "'");
    }

    /// An operator keyword must not run into an identifier.
    bool accept_word(const std::string& w) {
        if (!peek(w)) return false;
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        pos_ = end;
        return true;
    }

    std::string identifier() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }

    std::int64_t integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        std::int64_t v = std::stoll(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    ExprPtr expr() {
        ExprPtr l = tensor();
        while (accept_word("x")) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Product;
            e->left = l;
            e->right = tensor();
            l = e;
        }
        return l;
    }

    ExprPtr tensor() {
        ExprPtr l = primary();
        while (accept_word("ox")) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Tensor;
            e->left = l;
            e->right = primary();
            l = e;
        }
        return l;
    }

    ExprPtr primary() {
        if (accept("(")) {
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        skip();
        const std::size_t at = pos_;
        std::string id = identifier();
        static const std::pair<const char*, LiftKind> lifts[] = {
            {"Lb", LiftKind::Binary}, {"Lt", LiftKind::Ternary}, {"Lw", LiftKind::WLUM}, {"Lg", LiftKind::GRS}};
        for (const auto& [n, k] : lifts)
            if (id == n) {
                expect("(");
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Lift;
                e->lift = k;
                e->left = expr();
                expect(")");
                return e;
            }
        auto e = std::make_shared<Expr>();
        if (id == "F1pm" || id == "K" || id == "S" || id == "W" || id == "U" || id == "D" || id == "H" || id == "G") {
            e->kind = Expr::Kind::Named;
            e->name = id;
        } else if (id.size() > 1 && id[0] == 'F' &&
                   id.find_first_not_of("0123456789", 1) == std::string::npos) {
            e->kind = Expr::Kind::Field;
            e->q = std::stoll(id.substr(1));
            e->name = id;
        } else {
            pos_ = at;
            fail("unknown pasture '" + id + "'");
        }
        if (peek("<") || peek("//")) return presentation(e);
        return e;
    }

    ExprPtr presentation(const std::shared_ptr<Expr>& base) {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Presentation;
        e->name = base->name;
        if (accept("<")) {
            if (!accept(">")) {
                do e->vars.push_back(identifier());
                while (accept(","));
                expect(">");
            }
        }
        expect("//");
        expect("(");
        do e->relations.push_back(relation(e->vars));
        while (accept(";"));
        expect(")");
        return e;
    }

    Relation relation(const std::vector<std::string>& vars) {
        Relation r;
        r.terms.push_back(monomial(vars, false));
        for (;;) {
            if (accept("+"))
                r.terms.push_back(monomial(vars, false));
            else if (accept("-"))
                r.terms.push_back(monomial(vars, true));
            else
                break;
        }
        if (r.terms.size() < 2 || r.terms.size() > 3) fail("a relation has two or three terms");
        return r;
    }

    Monomial monomial(const std::vector<std::string>& vars, bool negative) {
        Monomial m;
        m.negative = negative;
        if (accept("-")) m.negative = !m.negative;
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (integer() != 1) fail("the only numeric coefficient is 1");
            if (!accept("*")) return m;
        }
        do {
            skip();
            const std::size_t at = pos_;
            std::string v = identifier();
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
                pos_ = at;
                fail("unknown variable '" + v + "'");
            }
            std::int64_t e = 1;
            if (accept("^")) e = integer();
            m.factors.emplace_back(v, e);
        } while (accept("*"));
        return m;
    }
};

std::string print_monomial(const Monomial& m, bool first) {
    std::string s = m.negative ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (m.factors.empty()) return s + "1";
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        if (i) s += "*";
        s += m.factors[i].first;
        if (m.factors[i].second != 1) s += "^" + std::to_string(m.factors[i].second);
    }
    return s;
}

std::string lift_prefix(LiftKind k) {
    switch (k) {
        case LiftKind::Binary: return "Lb";
        case LiftKind::Ternary: return "Lt";
        case LiftKind::WLUM: return "Lw";
        case LiftKind::GRS: return "Lg";
    }
    return "?";
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Named:
        case Expr::Kind::Field: return e.name;
        case Expr::Kind::Presentation: {
            std::string s = e.name;
            if (!e.vars.empty()) {
                s += "<";
                for (std::size_t i = 0; i < e.vars.size(); ++i) s += (i ? "," : "") + e.vars[i];
                s += ">";
            }
            s += "//(";
            for (std::size_t i = 0; i < e.relations.size(); ++i) {
                if (i) s += "; ";
                for (std::size_t t = 0; t < e.relations[i].terms.size(); ++t)
                    s += print_monomial(e.relations[i].terms[t], t == 0);
            }
            return s + ")";
        }
        case Expr::Kind::Product: {
            std::string r = print(*e.right);
            if (e.right->kind == Expr::Kind::Product) r = "(" + r + ")";
            return print(*e.left) + " x " + r;
        }
        case Expr::Kind::Tensor: {
            auto side = [](const Expr& x, bool right) {
                std::string s = print(x);
                bool wrap = x.kind == Expr::Kind::Product || (right && x.kind == Expr::Kind::Tensor);
                return wrap ? "(" + s + ")" : s;
            };
            return side(*e.left, false) + " ox " + side(*e.right, true);
        }
        case Expr::Kind::Lift: return lift_prefix(e.lift) + "(" + print(*e.left) + ")";
    }
    return {};
}

Evaluated evaluate(const Expr& e) {
    Evaluated out;
    switch (e.kind) {
        case Expr::Kind::Named: out.pasture = std::make_shared<Pasture>(named(e.name)); break;
        case Expr::Kind::Field: out.pasture = std::make_shared<Pasture>(finite_field(e.q)); break;
        case Expr::Kind::Presentation: {
            Pasture base = e.name.size() > 1 && e.name[0] == 'F' && e.name != "F1pm"
                               ? finite_field(std::stoll(e.name.substr(1)))
                               : named(e.name);
            Pasture p = present(base, e.vars, e.relations);
            p.set_label(print(e));
            out.pasture = std::make_shared<Pasture>(std::move(p));
            break;
        }
        case Expr::Kind::Product:
            out.pasture = product_many({evaluate(*e.left).pasture, evaluate(*e.right).pasture}).pasture;
            break;
        case Expr::Kind::Tensor:
            out.pasture = tensor_many({evaluate(*e.left).pasture, evaluate(*e.right).pasture}).pasture;
            break;
        case Expr::Kind::Lift: {
            PasturePtr inner = evaluate(*e.left).pasture;
            LiftResult r;
            switch (e.lift) {
                case LiftKind::Binary: r = binary_lift(inner); break;
                case LiftKind::Ternary: r = ternary_lift(inner); break;
                case LiftKind::WLUM: r = wlum_lift(inner); break;
                case LiftKind::GRS: r = grs_lift(inner); break;
            }
            out.pasture = r.lift;
            out.lift = std::move(r);
            break;
        }
    }
    return out;
}

PasturePtr evaluate_pasture(const std::string& text) { return evaluate(*parse(text)).pasture; }

}  // namespace pastures
