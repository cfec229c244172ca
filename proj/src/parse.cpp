#include "nullkit/parse.hpp"

#include <cctype>
#include <sstream>

namespace nullkit {

namespace {

constexpr long kMaxExponent = 4096; // sanity guard against accidental blow-up

class ExprParser {
public:
    ExprParser(const std::string& text, RingPtr ring, int line)
        : text_(text), ring_(std::move(ring)), line_(line) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, static_cast<int>(pos_) + 1);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long parse_nat() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1000000000L) fail("numeric literal too large");
        }
        return v;
    }

    Polynomial parse_expr() {
        bool neg = eat('-');
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("exponent must be a literal non-negative integer");
            long e = parse_nat();
            if (e > kMaxExponent) fail("exponent too large");
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (!eat(')')) fail("unbalanced parenthesis");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_nat();
            if (eat('/')) {
                long den = parse_nat();
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(ring_, make_rational(num, den));
            }
            return Polynomial::constant(ring_, make_rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += get();
            auto idx = ring_->index_of(name);
            if (!idx) fail("unknown identifier '" + name + "'");
            return Polynomial::variable(ring_, *idx);
        }
        if (c == '\0') fail("unexpected end of expression");
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    RingPtr ring_;
    int line_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_commas(const std::string& s) {
    // Split at commas that are not nested inside parentheses.
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line) {
    return ExprParser(text, ring, line).run();
}

ProblemInstance parse_problem_file(const std::string& text) {
    ProblemInstance inst;
    std::vector<std::pair<int, std::string>> generator_lines;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value' line", lineno);
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        if (key == "ring") {
            if (inst.ring) throw parse_error("duplicate ring line", lineno);
            std::vector<std::string> names;
            for (const auto& piece : split_commas(value)) {
                std::string name = trim(piece);
                if (name.empty()) throw parse_error("empty variable name", lineno);
                names.push_back(name);
            }
            try {
                inst.ring = PolyRing::make(std::move(names));
            } catch (const error& e) {
                throw parse_error(e.what(), lineno);
            }
        } else if (key == "J" || key == "f") {
            generator_lines.emplace_back(lineno, value);
        } else if (key == "meta") {
            auto eq = value.find('=');
            if (eq == std::string::npos) throw parse_error("meta line needs key=value", lineno);
            inst.meta[trim(value.substr(0, eq))] = trim(value.substr(eq + 1));
        } else {
            throw parse_error("unknown directive '" + key + "'", lineno);
        }
    }

    if (!inst.ring) throw parse_error("missing ring line", lineno ? lineno : 1);
    for (const auto& [gline, value] : generator_lines) {
        for (const auto& piece : split_commas(value)) {
            std::string expr = trim(piece);
            if (expr.empty()) throw parse_error("empty generator", gline);
            Polynomial p = parse_polynomial(expr, inst.ring, gline);
            if (p.is_zero()) throw parse_error("zero polynomial is not a valid generator", gline);
            inst.generators.push_back(std::move(p));
        }
    }
    if (inst.generators.empty())
        throw parse_error("empty generator list", lineno ? lineno : 1);
    return inst;
}

std::string format_monomial(const RingPtr& ring, const Monomial& m) {
    std::string out;
    for (int i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring->vars[i];
        if (m[i] >= 2) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    // Descending (total degree, lex) is the canonical display order.
    std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
        return a.first > b.first;
    });

    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& [m, c] = ts[i];
        Rational mag = c < 0 ? Rational(-c) : c;
        if (i == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = format_monomial(p.ring(), m);
        if (mono == "1") {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

std::string format_problem_file(const ProblemInstance& inst) {
    std::string out = "ring: ";
    for (std::size_t i = 0; i < inst.ring->vars.size(); ++i)
        out += (i ? ", " : "") + inst.ring->vars[i];
    out += "\n";
    for (const auto& g : inst.generators) out += "J: " + format_polynomial(g) + "\n";
    for (const auto& [k, v] : inst.meta) out += "meta: " + k + "=" + v + "\n";
    return out;
}

} // namespace nullkit
