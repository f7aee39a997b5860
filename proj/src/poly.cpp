#include "isw/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

#include "isw/errors.hpp"

namespace isw::poly {

namespace {

constexpr std::size_t kTermCap = 200'000;
constexpr unsigned long long kDegreeCap = 1'000'000'000ULL;

[[noreturn]] void overflow(const char* what) {
    throw Error(std::string("polynomial expansion exceeds supported ") + what);
}

// Index of each name of `from` inside `to`; every name must be present.
std::vector<std::size_t> index_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to) {
    std::vector<std::size_t> map(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::find(to.begin(), to.end(), from[i]);
        map[i] = static_cast<std::size_t>(it - to.begin());
    }
    return map;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& name : b)
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    return out;
}

Polynomial::TermMap remap_terms(const Polynomial::TermMap& terms,
                                const std::vector<std::size_t>& map,
                                std::size_t width) {
    Polynomial::TermMap out;
    for (const auto& [exps, coeff] : terms) {
        Polynomial::ExpVec key(width, 0);
        for (std::size_t i = 0; i < exps.size(); ++i) key[map[i]] = exps[i];
        out.emplace(std::move(key), coeff);
    }
    return out;
}

}  // namespace

bool GradedLexGreater::operator()(const std::vector<unsigned>& a,
                                  const std::vector<unsigned>& b) const {
    const unsigned long long da = std::accumulate(a.begin(), a.end(), 0ULL);
    const unsigned long long db = std::accumulate(b.begin(), b.end(), 0ULL);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(ExpVec{}, std::move(c));
    return p;
}

Polynomial Polynomial::variable(std::string name) {
    Polynomial p;
    p.vars_.push_back(std::move(name));
    p.terms_.emplace(ExpVec{1}, Int(1));
    return p;
}

void Polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [exps, coeff] : terms_)
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> live;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            live.push_back(vars_[i]);
            keep.push_back(i);
        }
    TermMap rekeyed;
    for (const auto& [exps, coeff] : terms_) {
        ExpVec key(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) key[i] = exps[keep[i]];
        rekeyed.emplace(std::move(key), coeff);
    }
    vars_ = std::move(live);
    terms_ = std::move(rekeyed);
}

Int Polynomial::evaluate(const std::vector<Int>& point) const {
    if (point.size() != vars_.size())
        throw DimensionError("evaluate: got " + std::to_string(point.size()) +
                             " values for " + std::to_string(vars_.size()) + " variables");
    Int total = 0;
    for (const auto& [exps, coeff] : terms_) {
        Int term = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) term *= boost::multiprecision::pow(point[i], exps[i]);
        total += term;
    }
    return total;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [exps, coeff] : p.terms_) coeff = -coeff;
    return p;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (vars_ == rhs.vars_) return terms_ == rhs.terms_;
    if (vars_.size() != rhs.vars_.size()) return false;
    for (const auto& name : rhs.vars_)
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) return false;
    return terms_ == remap_terms(rhs.terms_, index_map(rhs.vars_, vars_), vars_.size());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.vars_ = merge_vars(a.vars_, b.vars_);
    out.terms_ = remap_terms(a.terms_, index_map(a.vars_, out.vars_), out.vars_.size());
    const auto bmap = index_map(b.vars_, out.vars_);
    for (const auto& [exps, coeff] : b.terms_) {
        Polynomial::ExpVec key(out.vars_.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) key[bmap[i]] = exps[i];
        out.terms_[std::move(key)] += coeff;
    }
    out.normalize();
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.vars_ = merge_vars(a.vars_, b.vars_);
    const std::size_t width = out.vars_.size();
    const auto at = remap_terms(a.terms_, index_map(a.vars_, out.vars_), width);
    const auto bt = remap_terms(b.terms_, index_map(b.vars_, out.vars_), width);
    for (const auto& [ea, ca] : at) {
        for (const auto& [eb, cb] : bt) {
            Polynomial::ExpVec key(width);
            for (std::size_t i = 0; i < width; ++i) {
                const unsigned long long e =
                    static_cast<unsigned long long>(ea[i]) + eb[i];
                if (e > kDegreeCap) overflow("degree");
                key[i] = static_cast<unsigned>(e);
            }
            out.terms_[std::move(key)] += ca * cb;
            if (out.terms_.size() > kTermCap) overflow("term count");
        }
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::pow(unsigned long long e) const {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

namespace {

struct Token {
    enum Kind { Nat, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    Polynomial run() {
        if (tok_.kind == Token::End) throw ParseError("empty input", 0);
        Polynomial p = expr();
        if (tok_.kind != Token::End)
            throw ParseError("unexpected '" + tok_.text + "' after expression", tok_.pos);
        return p;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_ = {Token::Nat, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size()) {
                const char k = text_[pos_];
                if (!std::isalnum(static_cast<unsigned char>(k)) && k != '_') break;
                ++pos_;
            }
            tok_ = {Token::Ident, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; return;
            case '-': tok_ = {Token::Minus, "-", start}; return;
            case '*': tok_ = {Token::Star, "*", start}; return;
            case '^': tok_ = {Token::Caret, "^", start}; return;
            case '(': tok_ = {Token::LParen, "(", start}; return;
            case ')': tok_ = {Token::RParen, ")", start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    Polynomial expr() {
        Polynomial p = term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            const bool add = tok_.kind == Token::Plus;
            advance();
            Polynomial q = term();
            p = add ? p + q : p - q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (tok_.kind == Token::Star) {
            advance();
            p = p * factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (tok_.kind != Token::Caret) return b;
        advance();
        if (tok_.kind != Token::Nat)
            throw ParseError("exponent must be a non-negative integer literal", tok_.pos);
        unsigned long long e = 0;
        for (char c : tok_.text) {
            e = e * 10 + static_cast<unsigned long long>(c - '0');
            if (e > kDegreeCap) throw ParseError("exponent too large", tok_.pos);
        }
        advance();
        return b.pow(e);
    }

    Polynomial base() {
        switch (tok_.kind) {
            case Token::Nat: {
                Polynomial p = Polynomial::constant(Int(tok_.text));
                advance();
                return p;
            }
            case Token::Ident: {
                Polynomial p = Polynomial::variable(tok_.text);
                advance();
                return p;
            }
            case Token::LParen: {
                advance();
                Polynomial p = expr();
                if (tok_.kind != Token::RParen)
                    throw ParseError("expected ')'", tok_.pos);
                advance();
                return p;
            }
            case Token::Minus:
                advance();
                return -factor();
            default:
                throw ParseError("expected a number, variable, '(' or '-'", tok_.pos);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_{Token::End, "", 0};
};

}  // namespace

Polynomial parse(std::string_view text) { return Parser(text).run(); }

std::string print_canonical(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : p.terms()) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Int mag = negative ? Int(-coeff) : coeff;
        const bool has_vars =
            std::any_of(exps.begin(), exps.end(), [](unsigned e) { return e > 0; });
        bool printed = false;
        if (mag != 1 || !has_vars) {
            out << mag;
            printed = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (printed) out << '*';
            out << p.variables()[i];
            if (exps[i] > 1) out << '^' << exps[i];
            printed = true;
        }
    }
    return out.str();
}

Polynomial to_hilbert_tenth_instance(const Polynomial& p) {
    const std::size_t k = p.variable_count();
    if (k == 0) throw DimensionError("instance transform needs at least one variable");
    Polynomial result = p * p;
    for (std::size_t i = 0; i < k; ++i) {
        std::string fresh = "y" + std::to_string(i + 1);
        while (std::find(p.variables().begin(), p.variables().end(), fresh) !=
               p.variables().end())
            fresh += '_';
        const Polynomial xi = Polynomial::variable(p.variables()[i]);
        const Polynomial yi = Polynomial::variable(fresh);
        const Polynomial slack = xi - yi * yi;
        result = result + slack * slack;
    }
    return result;
}

}  // namespace isw::poly
