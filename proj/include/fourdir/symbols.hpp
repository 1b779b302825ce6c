#pragma once

#include <string>
#include <vector>

#include "fourdir/laurent.hpp"

namespace fourdir {

enum class Family {
    univariate_lifted,
    tensor,
    box,
    fourdir_box,
    interpolatory,
    pseudo,
    variant,
    example_a_mu,
    custom,
};

std::string family_name(Family f);

// A bivariate symbol together with its construction provenance. Equality
// is by polynomial only; the metadata is informational.
struct SchemeSymbol {
    BivariateLaurent poly;
    Family family = Family::custom;
    long n = 0;
    long l = 0;
    std::vector<Rational> mu;

    friend bool operator==(const SchemeSymbol& a, const SchemeSymbol& b) {
        return a.poly == b.poly;
    }
};

// Binomial coefficient under the vanishing convention used throughout:
// C(m,0) = 1 for every integer m, C(m,k) = 0 for k < 0 or 0 <= m < k.
// A negative top with positive k is a caller bug and throws.
Integer binomial(long m, long k);

// sigma = (1+z)^2 / (4z), delta = -(1-z)^2 / (4z)
UnivariateLaurent make_sigma();
UnivariateLaurent make_delta();

// Univariate pseudo-spline symbol u_n^l = 2 sigma^n sum_i C(n+i-1,i) delta^i,
// extended by u_0^0 = 2 and u_n^{-1} = 0.
UnivariateLaurent make_univariate_pseudospline(long n, long l);
// Same symbol via the reproduction-revealing form 2 - 2 delta^{l+1} v_n^l.
UnivariateLaurent make_univariate_pseudospline_alt(long n, long l);

// Bivariate building blocks: gamma = sigma(z1)sigma(z2) - delta(z1)delta(z2)
// and pi^alpha = (sigma(z1)delta(z1))^a1 (sigma(z2)delta(z2))^a2.
BivariateLaurent make_gamma();
BivariateLaurent make_pi_power(long a1, long a2);

// Four-directional box-spline symbol B_{i,j,k}.
BivariateLaurent make_box_symbol(long i, long j, long k);

// Scaled box-spline scheme a~_n = 4 B_{ceil(n/2),ceil(n/2),floor(n/2)}.
SchemeSymbol make_fourdir_box(long n);

// Tensor product of univariate pseudo-splines on the two axes.
SchemeSymbol make_tensor_pseudospline(long n, long l);

// Minimally supported interpolatory scheme a^_n.
SchemeSymbol make_interpolatory(long n);

// Coefficient c_n^{(i,j)}, 0 <= j <= i < n.
Integer coefficient(long n, long i, long j);

// b_n^i = sum_j c_n^{(i,j)} pi^{(i-j,j)}
BivariateLaurent make_b(long n, long i);

// Pseudo-spline family member a_n^l = sum_{i<=l} a~_{n-i} b_n^i.
SchemeSymbol make_pseudospline(long n, long l);

// Proof machinery: d_n^l and e_n^l.
BivariateLaurent make_d(long n, long l);
BivariateLaurent make_e(long n, long l);

// Variant family for odd n-l: a_n^l + a_{n-l-1}^0 * sum_j mu_j pi^{(l+1-j,j)}.
// mu must have l entries with mu_j = mu_{l+1-j}.
SchemeSymbol make_variant(long n, long l, const std::vector<Rational>& mu);

// One-parameter degree-3 family: 12 B_{1,1,1} - 8 B_{1,1,2} + 8(2+mu)(B_{2,2,0} - B_{1,1,1}).
SchemeSymbol make_example_amu(const Rational& mu);

}  // namespace fourdir
