#include "fourdir/laurent.hpp"

#include <stdexcept>

namespace fourdir {

UnivariateLaurent::UnivariateLaurent(TermMap terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

UnivariateLaurent UnivariateLaurent::constant(const Rational& c) {
    return monomial(0, c);
}

UnivariateLaurent UnivariateLaurent::monomial(long exp, const Rational& c) {
    UnivariateLaurent p;
    p.add_term(exp, c);
    return p;
}

Rational UnivariateLaurent::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void UnivariateLaurent::add_term(long exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UnivariateLaurent& UnivariateLaurent::operator+=(const UnivariateLaurent& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
    return *this;
}

UnivariateLaurent& UnivariateLaurent::operator-=(const UnivariateLaurent& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, Rational(-c));
    return *this;
}

UnivariateLaurent operator*(const UnivariateLaurent& a, const UnivariateLaurent& b) {
    UnivariateLaurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, Rational(ca * cb));
    return out;
}

UnivariateLaurent operator*(const Rational& c, const UnivariateLaurent& p) {
    UnivariateLaurent out;
    for (const auto& [exp, pc] : p.terms_) out.add_term(exp, Rational(c * pc));
    return out;
}

UnivariateLaurent operator-(const UnivariateLaurent& p) {
    return rat(-1) * p;
}

UnivariateLaurent UnivariateLaurent::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
    UnivariateLaurent out = constant(rat(1));
    for (long i = 0; i < e; ++i) out = out * *this;
    return out;
}

Rational UnivariateLaurent::eval(const Rational& z) const {
    if (z == 0) throw std::domain_error("Laurent polynomial evaluated at 0");
    Rational out(0);
    for (const auto& [exp, c] : terms_) out += c * rat_pow(z, exp);
    return out;
}

BivariateLaurent::BivariateLaurent(TermMap terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

BivariateLaurent BivariateLaurent::constant(const Rational& c) {
    return monomial({0, 0}, c);
}

BivariateLaurent BivariateLaurent::monomial(Exponent2 exp, const Rational& c) {
    BivariateLaurent p;
    p.add_term(exp, c);
    return p;
}

Rational BivariateLaurent::coeff(Exponent2 exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariateLaurent::add_term(Exponent2 exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariateLaurent& BivariateLaurent::operator+=(const BivariateLaurent& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
    return *this;
}

BivariateLaurent& BivariateLaurent::operator-=(const BivariateLaurent& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, Rational(-c));
    return *this;
}

BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b) {
    BivariateLaurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.e1 + eb.e1, ea.e2 + eb.e2}, Rational(ca * cb));
    return out;
}

BivariateLaurent operator*(const Rational& c, const BivariateLaurent& p) {
    BivariateLaurent out;
    for (const auto& [exp, pc] : p.terms_) out.add_term(exp, Rational(c * pc));
    return out;
}

BivariateLaurent operator-(const BivariateLaurent& p) {
    return rat(-1) * p;
}

BivariateLaurent BivariateLaurent::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
    BivariateLaurent out = constant(rat(1));
    for (long i = 0; i < e; ++i) out = out * *this;
    return out;
}

BivariateLaurent lift(const UnivariateLaurent& p, Axis axis) {
    BivariateLaurent::TermMap out;
    for (const auto& [exp, c] : p.terms()) {
        Exponent2 e = axis == Axis::z1 ? Exponent2{exp, 0} : Exponent2{0, exp};
        out.emplace(e, c);
    }
    return BivariateLaurent(std::move(out));
}

BivariateLaurent partial_derivative(const BivariateLaurent& p, long k1, long k2) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("negative derivative order");
    BivariateLaurent::TermMap out;
    for (const auto& [exp, c] : p.terms()) {
        Integer f = falling_factorial(exp.e1, k1) * falling_factorial(exp.e2, k2);
        if (f == 0) continue;
        Rational coeff = c * Rational(f);
        coeff.canonicalize();
        out.emplace(Exponent2{exp.e1 - k1, exp.e2 - k2}, coeff);
    }
    return BivariateLaurent(std::move(out));
}

Rational eval(const BivariateLaurent& p, const Rational& z1, const Rational& z2) {
    if (z1 == 0 || z2 == 0)
        throw std::domain_error("Laurent polynomial evaluated at a zero coordinate");
    Rational out(0);
    for (const auto& [exp, c] : p.terms())
        out += c * rat_pow(z1, exp.e1) * rat_pow(z2, exp.e2);
    return out;
}

Rational derivative_value(const BivariateLaurent& p, long k1, long k2,
                          const Rational& z1, const Rational& z2) {
    if (z1 == 0 || z2 == 0)
        throw std::domain_error("Laurent polynomial evaluated at a zero coordinate");
    Rational out(0);
    for (const auto& [exp, c] : p.terms()) {
        Integer f = falling_factorial(exp.e1, k1) * falling_factorial(exp.e2, k2);
        if (f == 0) continue;
        out += c * Rational(f) * rat_pow(z1, exp.e1 - k1) * rat_pow(z2, exp.e2 - k2);
    }
    out.canonicalize();
    return out;
}

BivariateLaurent transform(const BivariateLaurent& p, Transform t) {
    BivariateLaurent::TermMap out;
    for (const auto& [exp, c] : p.terms()) {
        Exponent2 e = exp;
        Rational v = c;
        switch (t) {
            case Transform::negate_z1:
                if (e.e1 % 2 != 0) v = -v;
                break;
            case Transform::negate_z2:
                if (e.e2 % 2 != 0) v = -v;
                break;
            case Transform::invert_z1:
                e.e1 = -e.e1;
                break;
            case Transform::invert_z2:
                e.e2 = -e.e2;
                break;
            case Transform::swap:
                std::swap(e.e1, e.e2);
                break;
        }
        out.emplace(e, v);
    }
    return BivariateLaurent(std::move(out));
}

}  // namespace fourdir
