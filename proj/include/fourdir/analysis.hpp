#pragma once

#include <optional>

#include "fourdir/laurent.hpp"

namespace fourdir {

// Octagon {alpha : |a1| <= m, |a2| <= n, |a1|+|a2| <= m+n-l}.
struct SupportOctagon {
    long m = 0;       // half-width
    long n = 0;       // half-height
    long l = 0;       // corner cut
    friend bool operator==(const SupportOctagon&, const SupportOctagon&) = default;
};

struct SupportReport {
    SupportOctagon octagon;
    bool octagonal = true;     // convex hull is exactly the octagon above
    long max_diag = 0;         // max |a1| + |a2| over nonzero coefficients
    Rational hull_area;        // area of the convex hull of the support
};

struct DegreeReport {
    long generation_degree = -1;
    long reproduction_degree = -1;
    bool interpolatory = false;
    bool symmetric = false;
    bool convergence_necessary = false;
};

// Witness for the first failing derivative when probing a degree bound.
struct DerivativeWitness {
    long k1 = 0;
    long k2 = 0;
    Rational z1;
    Rational z2;
    Rational value;
};

bool check_symmetry(const BivariateLaurent& a);

// a(1,1) = 4 and a = 0 on E' = {(-1,1),(1,-1),(-1,-1)}.
bool check_convergence_necessary(const BivariateLaurent& a);

// Largest d <= max_check with D^k a = 0 on E' for all |k| <= d; -1 if the
// order-0 condition already fails. Optionally reports the failing derivative.
long generation_degree(const BivariateLaurent& a, long max_check,
                       DerivativeWitness* witness = nullptr);

// Largest d <= max_check with D^k a(1,1) = 0 for 0 < |k| <= d, capped at
// the generation degree. Requires check_convergence_necessary(a).
long reproduction_degree(const BivariateLaurent& a, long max_check,
                         DerivativeWitness* witness = nullptr);

// a(z1,z2) + a(z1,-z2) + a(-z1,z2) + a(-z1,-z2) == 4 as a polynomial.
bool check_interpolatory(const BivariateLaurent& a);

SupportReport support_of(const BivariateLaurent& a);

// Octagon predicted for a_n^l: half-width n+l, cut n+l-ceil((n-l)/2).
SupportOctagon predicted_support(long n, long l);

// Octagon of the interpolatory scheme a^_n: width 4n-1, cut 2n-2.
SupportOctagon interpolatory_support(long n);

// Exact check of the two printed identities of the cubic-reproduction
// example scheme and its mask.
bool example1_decomposition_check();

DegreeReport analyze(const BivariateLaurent& a, long max_check);

}  // namespace fourdir
