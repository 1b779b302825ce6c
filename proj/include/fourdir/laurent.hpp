#pragma once

#include <map>
#include <utility>

#include "fourdir/rational.hpp"

namespace fourdir {

// Exponent pair (e1, e2) of z1^e1 z2^e2; either entry may be negative.
struct Exponent2 {
    long e1 = 0;
    long e2 = 0;
    friend auto operator<=>(const Exponent2&, const Exponent2&) = default;
};

enum class Axis { z1 = 1, z2 = 2 };

enum class Transform { negate_z1, negate_z2, invert_z1, invert_z2, swap };

// Sparse Laurent polynomial in one variable. Canonical form: no stored
// coefficient is zero, so map equality decides value equality.
class UnivariateLaurent {
public:
    using TermMap = std::map<long, Rational>;

    UnivariateLaurent() = default;
    explicit UnivariateLaurent(TermMap terms);
    static UnivariateLaurent constant(const Rational& c);
    static UnivariateLaurent monomial(long exp, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(long exp) const;

    UnivariateLaurent& operator+=(const UnivariateLaurent& rhs);
    UnivariateLaurent& operator-=(const UnivariateLaurent& rhs);
    friend UnivariateLaurent operator+(UnivariateLaurent a, const UnivariateLaurent& b) { return a += b; }
    friend UnivariateLaurent operator-(UnivariateLaurent a, const UnivariateLaurent& b) { return a -= b; }
    friend UnivariateLaurent operator*(const UnivariateLaurent& a, const UnivariateLaurent& b);
    friend UnivariateLaurent operator*(const Rational& c, const UnivariateLaurent& p);
    friend UnivariateLaurent operator-(const UnivariateLaurent& p);
    friend bool operator==(const UnivariateLaurent&, const UnivariateLaurent&) = default;

    UnivariateLaurent pow(long e) const;
    Rational eval(const Rational& z) const;

private:
    void add_term(long exp, const Rational& c);
    TermMap terms_;
};

// Sparse bivariate Laurent polynomial over Rational, canonical form as above.
class BivariateLaurent {
public:
    using TermMap = std::map<Exponent2, Rational>;

    BivariateLaurent() = default;
    explicit BivariateLaurent(TermMap terms);
    static BivariateLaurent constant(const Rational& c);
    static BivariateLaurent monomial(Exponent2 exp, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Exponent2 exp) const;

    BivariateLaurent& operator+=(const BivariateLaurent& rhs);
    BivariateLaurent& operator-=(const BivariateLaurent& rhs);
    friend BivariateLaurent operator+(BivariateLaurent a, const BivariateLaurent& b) { return a += b; }
    friend BivariateLaurent operator-(BivariateLaurent a, const BivariateLaurent& b) { return a -= b; }
    friend BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b);
    friend BivariateLaurent operator*(const Rational& c, const BivariateLaurent& p);
    friend BivariateLaurent operator-(const BivariateLaurent& p);
    friend bool operator==(const BivariateLaurent&, const BivariateLaurent&) = default;

    BivariateLaurent pow(long e) const;

private:
    void add_term(Exponent2 exp, const Rational& c);
    TermMap terms_;
};

// Embeds a univariate value on one axis: z^k -> z1^k or z2^k.
BivariateLaurent lift(const UnivariateLaurent& p, Axis axis);

// Exact mixed partial derivative D^(k1,k2); power rule applies to all
// integer exponents, including negative ones.
BivariateLaurent partial_derivative(const BivariateLaurent& p, long k1, long k2);

// Exact evaluation; both coordinates must be nonzero.
Rational eval(const BivariateLaurent& p, const Rational& z1, const Rational& z2);

// Value of (D^(k1,k2) p)(z) without materializing the derivative.
Rational derivative_value(const BivariateLaurent& p, long k1, long k2,
                          const Rational& z1, const Rational& z2);

BivariateLaurent transform(const BivariateLaurent& p, Transform t);

}  // namespace fourdir
