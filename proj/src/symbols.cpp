#include "fourdir/symbols.hpp"

#include <stdexcept>

namespace fourdir {

std::string family_name(Family f) {
    switch (f) {
        case Family::univariate_lifted: return "univariate-lifted";
        case Family::tensor: return "tensor";
        case Family::box: return "box";
        case Family::fourdir_box: return "fourdir-box";
        case Family::interpolatory: return "interp";
        case Family::pseudo: return "pseudo";
        case Family::variant: return "variant";
        case Family::example_a_mu: return "amu";
        case Family::custom: return "custom";
    }
    return "custom";
}

Integer binomial(long m, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (m < 0)
        throw std::logic_error("binomial with negative top and positive bottom");
    if (k > m) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(k));
    return out;
}

UnivariateLaurent make_sigma() {
    return UnivariateLaurent({{-1, rat(1, 4)}, {0, rat(1, 2)}, {1, rat(1, 4)}});
}

UnivariateLaurent make_delta() {
    return UnivariateLaurent({{-1, rat(-1, 4)}, {0, rat(1, 2)}, {1, rat(-1, 4)}});
}

static void check_pseudo_params(long n, long l) {
    if (!(n >= 1 && 0 <= l && l < n))
        throw std::invalid_argument("pseudo-spline parameters require 0 <= l < n");
}

UnivariateLaurent make_univariate_pseudospline(long n, long l) {
    if (n == 0 && l == 0) return UnivariateLaurent::constant(rat(2));
    if (n > 0 && l == -1) return UnivariateLaurent();
    check_pseudo_params(n, l);
    const UnivariateLaurent sigma = make_sigma();
    const UnivariateLaurent delta = make_delta();
    UnivariateLaurent sum;
    for (long i = 0; i <= l; ++i)
        sum += Rational(binomial(n + i - 1, i)) * delta.pow(i);
    return rat(2) * sigma.pow(n) * sum;
}

UnivariateLaurent make_univariate_pseudospline_alt(long n, long l) {
    check_pseudo_params(n, l);
    const UnivariateLaurent sigma = make_sigma();
    const UnivariateLaurent delta = make_delta();
    UnivariateLaurent v;
    for (long i = 1; i <= n; ++i)
        v += Rational(binomial(n + l, i + l)) * delta.pow(i - 1) * sigma.pow(n - i);
    return UnivariateLaurent::constant(rat(2)) - rat(2) * delta.pow(l + 1) * v;
}

BivariateLaurent make_gamma() {
    const BivariateLaurent s1 = lift(make_sigma(), Axis::z1);
    const BivariateLaurent s2 = lift(make_sigma(), Axis::z2);
    const BivariateLaurent d1 = lift(make_delta(), Axis::z1);
    const BivariateLaurent d2 = lift(make_delta(), Axis::z2);
    return s1 * s2 - d1 * d2;
}

BivariateLaurent make_pi_power(long a1, long a2) {
    if (a1 < 0 || a2 < 0) throw std::invalid_argument("negative pi exponent");
    const UnivariateLaurent sd = make_sigma() * make_delta();
    return lift(sd.pow(a1), Axis::z1) * lift(sd.pow(a2), Axis::z2);
}

BivariateLaurent make_box_symbol(long i, long j, long k) {
    if (i < 0 || j < 0 || k < 0)
        throw std::invalid_argument("negative box-spline parameter");
    const BivariateLaurent s1 = lift(make_sigma(), Axis::z1);
    const BivariateLaurent s2 = lift(make_sigma(), Axis::z2);
    // (1 + z1 z2)(z1 + z2) / (4 z1 z2)
    const BivariateLaurent diag({{{1, 0}, rat(1, 4)},
                                 {{-1, 0}, rat(1, 4)},
                                 {{0, 1}, rat(1, 4)},
                                 {{0, -1}, rat(1, 4)}});
    return s1.pow(i) * s2.pow(j) * diag.pow(k);
}

SchemeSymbol make_fourdir_box(long n) {
    if (n < 1) throw std::invalid_argument("box-spline scheme requires n >= 1");
    const long half_up = (n + 1) / 2;
    const long half_down = n / 2;
    SchemeSymbol s;
    s.poly = rat(4) * make_box_symbol(half_up, half_up, half_down);
    s.family = Family::fourdir_box;
    s.n = n;
    s.l = 0;
    return s;
}

SchemeSymbol make_tensor_pseudospline(long n, long l) {
    check_pseudo_params(n, l);
    const UnivariateLaurent u = make_univariate_pseudospline(n, l);
    SchemeSymbol s;
    s.poly = lift(u, Axis::z1) * lift(u, Axis::z2);
    s.family = Family::tensor;
    s.n = n;
    s.l = l;
    return s;
}

SchemeSymbol make_interpolatory(long n) {
    if (n < 1) throw std::invalid_argument("interpolatory scheme requires n >= 1");
    BivariateLaurent acc;
    for (long i = 0; i <= n - 1; ++i)
        acc += lift(make_univariate_pseudospline(n - i, n - i - 1), Axis::z1) *
               lift(make_univariate_pseudospline(i + 1, i), Axis::z2);
    for (long i = 0; i <= n - 2; ++i)
        acc -= lift(make_univariate_pseudospline(n - i - 1, n - i - 2), Axis::z1) *
               lift(make_univariate_pseudospline(i + 1, i), Axis::z2);
    SchemeSymbol s;
    s.poly = std::move(acc);
    s.family = Family::interpolatory;
    s.n = n;
    s.l = n - 1;
    return s;
}

Integer coefficient(long n, long i, long j) {
    if (!(0 <= j && j <= i && i < n))
        throw std::invalid_argument("coefficient requires 0 <= j <= i < n");
    Integer out(0);
    for (long k = 0; k <= i / 2; ++k)
        out += binomial((n - i) / 2 + k - 1, k) *
               binomial(n + i - 2 * j - 1, i - j - k) *
               binomial(n + 2 * j - i - 1, j - k);
    return out;
}

BivariateLaurent make_b(long n, long i) {
    if (!(0 <= i && i < n))
        throw std::invalid_argument("b_n^i requires 0 <= i < n");
    BivariateLaurent out;
    for (long j = 0; j <= i; ++j)
        out += Rational(coefficient(n, i, j)) * make_pi_power(i - j, j);
    return out;
}

SchemeSymbol make_pseudospline(long n, long l) {
    check_pseudo_params(n, l);
    BivariateLaurent acc;
    for (long i = 0; i <= l; ++i)
        acc += make_fourdir_box(n - i).poly * make_b(n, i);
    SchemeSymbol s;
    s.poly = std::move(acc);
    s.family = Family::pseudo;
    s.n = n;
    s.l = l;
    return s;
}

BivariateLaurent make_d(long n, long l) {
    check_pseudo_params(n, l);
    BivariateLaurent out;
    for (long j = 0; j <= l; ++j)
        out += Rational(binomial(n + l - 2 * j - 1, l - j) *
                        binomial(n + 2 * j - l - 1, j)) *
               make_pi_power(l - j, j);
    return out;
}

BivariateLaurent make_e(long n, long l) {
    check_pseudo_params(n, l);
    BivariateLaurent out;
    for (long j = 0; j <= l; ++j)
        out += lift(make_univariate_pseudospline(n - j, l - j), Axis::z1) *
               lift(make_univariate_pseudospline(n - l + j, j), Axis::z2);
    return out;
}

SchemeSymbol make_variant(long n, long l, const std::vector<Rational>& mu) {
    check_pseudo_params(n, l);
    if ((n - l) % 2 == 0)
        throw std::domain_error("variant family is only defined for odd n - l");
    if (static_cast<long>(mu.size()) != l)
        throw std::invalid_argument("variant requires exactly l weights");
    for (long j = 1; j <= l; ++j)
        if (mu[j - 1] != mu[l - j])
            throw std::invalid_argument("variant weights must satisfy mu_j = mu_{l+1-j}");

    BivariateLaurent correction;
    for (long j = 1; j <= l; ++j)
        correction += mu[j - 1] * make_pi_power(l + 1 - j, j);

    SchemeSymbol s;
    s.poly = make_pseudospline(n, l).poly;
    if (!correction.is_zero()) {
        const BivariateLaurent base = n - l - 1 >= 1
            ? make_fourdir_box(n - l - 1).poly  // a_{n-l-1}^0
            : BivariateLaurent::constant(rat(4));
        s.poly += base * correction;
    }
    s.family = Family::variant;
    s.n = n;
    s.l = l;
    s.mu = mu;
    return s;
}

SchemeSymbol make_example_amu(const Rational& mu) {
    SchemeSymbol s;
    s.poly = rat(12) * make_box_symbol(1, 1, 1) - rat(8) * make_box_symbol(1, 1, 2) +
             Rational(rat(8) * (rat(2) + mu)) *
                 (make_box_symbol(2, 2, 0) - make_box_symbol(1, 1, 1));
    s.family = Family::example_a_mu;
    s.n = 2;
    s.l = 1;
    s.mu = {mu};
    return s;
}

}  // namespace fourdir
