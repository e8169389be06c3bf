#include "hybridmat/size_expr.hpp"

#include <cctype>

namespace hybridmat {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }

    long long integer() {
        skip_ws();
        long long v = 0;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        if (pos == start) throw ParseError("expected integer in size expression: " + std::string(text));
        return v;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (pos == start || std::isdigit(static_cast<unsigned char>(text[start])))
            throw ParseError("expected parameter name in size expression: " + std::string(text));
        return std::string(text.substr(start, pos - start));
    }
};

} // namespace

SizeExpr SizeExpr::parse(std::string_view text) {
    Cursor cur{text};
    SizeExpr result;
    bool first = true;
    while (!cur.done()) {
        long long sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            throw ParseError("expected + or - in size expression: " + std::string(text));
        }
        first = false;

        if (cur.done()) throw ParseError("dangling sign in size expression: " + std::string(text));
        c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long lit = cur.integer();
            if (!cur.done() && cur.peek() == '*') {
                ++cur.pos;
                if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                    throw ParseError("coefficient must multiply a parameter: " + std::string(text));
                result = result + SizeExpr::param(cur.ident(), sign * lit);
            } else {
                result = result + SizeExpr(sign * lit);
            }
        } else {
            std::string name = cur.ident();
            if (!cur.done() && cur.peek() == '*') {
                ++cur.pos;
                if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
                    throw ParseError("parameter products are not affine: " + std::string(text));
                result = result + SizeExpr::param(name, sign * cur.integer());
            } else {
                result = result + SizeExpr::param(name, sign);
            }
        }
    }
    if (first) throw ParseError("empty size expression");
    return result;
}

std::string SizeExpr::str() const {
    std::string out;
    for (const auto& [name, coeff] : coeffs_) {
        if (out.empty()) {
            if (coeff == -1) out += "-";
            else if (coeff != 1) out += std::to_string(coeff) + "*";
        } else {
            out += coeff < 0 ? " - " : " + ";
            long long mag = coeff < 0 ? -coeff : coeff;
            if (mag != 1) out += std::to_string(mag) + "*";
        }
        out += name;
    }
    if (constant_ != 0 || out.empty()) {
        if (out.empty()) {
            out = std::to_string(constant_);
        } else {
            out += constant_ < 0 ? " - " : " + ";
            out += std::to_string(constant_ < 0 ? -constant_ : constant_);
        }
    }
    return out;
}

} // namespace hybridmat
