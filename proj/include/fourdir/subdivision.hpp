#pragma once

#include <map>
#include <vector>

#include "fourdir/laurent.hpp"
#include "fourdir/symbols.hpp"

namespace fourdir {

// Inclusive lattice rectangle [x0,x1] x [y0,y1].
struct Window {
    long x0 = 0, x1 = -1, y0 = 0, y1 = -1;
    bool empty() const { return x0 > x1 || y0 > y1; }
    bool contains(long x, long y) const {
        return x0 <= x && x <= x1 && y0 <= y && y <= y1;
    }
    friend bool operator==(const Window&, const Window&) = default;
};

// Data on the lattice at refinement level k: point alpha carries parameter
// position alpha / 2^k. Entries absent from `values` are zero, but only
// points inside `window` are trustworthy; outside it truncation may have
// discarded contributions.
struct GridFunction {
    long level = 0;
    Window window;
    std::map<std::pair<long, long>, Rational> values;

    Rational at(long x, long y) const {
        auto it = values.find({x, y});
        return it == values.end() ? Rational(0) : it->second;
    }
};

// Dense integer matrix over a common denominator; rows run top to bottom
// with the z2 exponent decreasing, columns left to right with z1 increasing.
// offset is the exponent pair of the top-left entry.
struct MaskMatrix {
    std::pair<long, long> offset;  // (min e1, max e2)
    Integer denominator = 1;
    std::vector<std::vector<Integer>> rows;

    long width() const { return rows.empty() ? 0 : (long)rows.front().size(); }
    long height() const { return (long)rows.size(); }
};

MaskMatrix symbol_to_mask(const BivariateLaurent& a);
BivariateLaurent mask_to_symbol(const MaskMatrix& m);

// One binary refinement step: g_alpha = sum_beta a_{alpha - 2 beta} f_beta.
// An output point is valid only if every contributing input point lies in
// f's window; the output window records exactly those points.
GridFunction subdivide_step(const MaskMatrix& mask, const GridFunction& f);

// Applies `steps` refinement steps to the delta sequence at the origin,
// with the initial window sized so the result covers the limit support
// plus one ring.
GridFunction basic_limit(const SchemeSymbol& a, long steps);

// Bivariate polynomial in (x, y) with nonnegative exponents; used as
// sampled input data for reproduction tests.
struct Poly2 {
    std::map<std::pair<long, long>, Rational> terms;  // (i, j) -> coeff of x^i y^j
    Rational eval(const Rational& x, const Rational& y) const;
    static Poly2 monomial(long i, long j, const Rational& c = Rational(1));
};

// Samples p on the integer points of `window`, applies one subdivision
// step, and checks g_alpha = p(alpha/2) on the whole valid output window.
bool reproduce_empirically(const SchemeSymbol& a, const Poly2& p, const Window& window);

}  // namespace fourdir
