#include "nrt/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace nrt {

namespace {
uint32_t degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }
}  // namespace

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
    uint32_t da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;  // z0-weighted lex, larger first
}

MultiPoly MultiPoly::constant(uint32_t vars, const QuadElement& c) {
    MultiPoly p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(uint32_t vars, uint32_t i) {
    if (i >= vars) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly p(vars);
    Exponents e(vars, 0);
    e[i] = 1;
    p.add_term(e, QuadElement(1));
    return p;
}

QuadElement MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QuadElement() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const QuadElement& c) {
    if (e.size() != m_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(degree_of(terms_.begin()->first));  // map is degree-descending
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) != d) return false;
    return true;
}

QuadElement MultiPoly::coeff_sum() const {
    QuadElement s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (m_ != o.m_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (m_ != o.m_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r(a.m_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(a.m_);
            for (uint32_t i = 0; i < a.m_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scale(const QuadElement& s) const {
    MultiPoly r(m_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(m_, QuadElement(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(uint32_t var) const {
    if (var >= m_) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly r(m_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * QuadElement(static_cast<long>(e[var])));
    }
    return r;
}

QuadElement MultiPoly::eval(const std::vector<QuadElement>& point) const {
    if (point.size() != m_) throw std::invalid_argument("MultiPoly: evaluation arity mismatch");
    QuadElement total;
    for (const auto& [e, c] : terms_) {
        QuadElement t = c;
        for (uint32_t i = 0; i < m_; ++i)
            for (uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (uint32_t i = 0; i < m_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "z" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        QuadElement cc = c;
        bool neg = false;
        if (cc.is_rational() && cc.a().sign() < 0) {
            neg = true;
            cc = -cc;
        }
        std::string cs = cc.str_factor();
        std::string term;
        if (mono.empty()) {
            term = cs;
        } else if (cs == "1") {
            term = mono;
        } else {
            term = cs + "*" + mono;
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

namespace {

// Minimal recursive-descent parser for the canonical polynomial grammar.
class PolyParser {
public:
    PolyParser(const std::string& text, uint32_t vars) : s_(text), vars_(vars) {}

    MultiPoly run() {
        MultiPoly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    MultiPoly parse_sum() {
        MultiPoly total(vars_);
        bool neg = consume_sign();
        total += parse_term().scale(QuadElement(neg ? -1 : 1));
        while (true) {
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
            bool minus = s_[pos_] == '-';
            ++pos_;
            total += parse_term().scale(QuadElement(minus ? -1 : 1));
        }
        return total;
    }

    MultiPoly parse_term() {
        MultiPoly t = parse_factor();
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                t = t * parse_factor();
            } else {
                break;
            }
        }
        return t;
    }

    MultiPoly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = parse_sum();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return maybe_power(inner);
        }
        if (c == 'z') {
            ++pos_;
            uint32_t idx = parse_uint("variable index");
            if (idx >= vars_) fail("variable z" + std::to_string(idx) + " out of range");
            return maybe_power(MultiPoly::variable(vars_, idx));
        }
        if (s_.compare(pos_, 5, "sqrt2") == 0) {
            pos_ += 5;
            return maybe_power(MultiPoly::constant(vars_, QuadElement::sqrt2()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num(static_cast<long>(parse_uint("number")), 1L);
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                unsigned long d = parse_uint("denominator");
                if (d == 0) fail("zero denominator");
                num = num / Rational(static_cast<long>(d));
            }
            return maybe_power(MultiPoly::constant(vars_, QuadElement(num)));
        }
        fail(std::string("unexpected character '") + c + "'");
        return MultiPoly(vars_);  // unreachable
    }

    MultiPoly maybe_power(MultiPoly base) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            unsigned long e = parse_uint("exponent");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    bool consume_sign() {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            bool minus = s_[pos_] == '-';
            ++pos_;
            return minus;
        }
        return false;
    }

    unsigned long parse_uint(const std::string& what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected " + what);
        return std::stoul(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    uint32_t vars_;
    size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, uint32_t vars) {
    return PolyParser(text, vars).run();
}

std::vector<Exponents> monomials_of_degree(uint32_t m, uint32_t d) {
    std::vector<Exponents> out;
    if (m == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    Exponents cur(m, 0);
    // Recursive enumeration emitting z0-heavy monomials first.
    auto rec = [&](auto&& self, uint32_t var, uint32_t rem) -> void {
        if (var + 1 == m) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = static_cast<int>(rem); v >= 0; --v) {
            cur[var] = static_cast<uint32_t>(v);
            self(self, var + 1, rem - static_cast<uint32_t>(v));
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<std::vector<MultiPoly>> jacobian_matrix(const std::vector<MultiPoly>& fs) {
    if (fs.empty()) return {};
    uint32_t m = fs[0].vars();
    for (const auto& f : fs)
        if (f.vars() != m) throw std::invalid_argument("jacobian_matrix: variable count mismatch");
    std::vector<std::vector<MultiPoly>> J;
    J.reserve(fs.size());
    for (const auto& f : fs) {
        std::vector<MultiPoly> row;
        row.reserve(m);
        for (uint32_t j = 0; j < m; ++j) row.push_back(f.derivative(j));
        J.push_back(std::move(row));
    }
    return J;
}

}  // namespace nrt
