#include "fourdir/subdivision.hpp"

#include <stdexcept>

#include "fourdir/analysis.hpp"

namespace fourdir {

MaskMatrix symbol_to_mask(const BivariateLaurent& a) {
    if (a.is_zero()) throw std::domain_error("zero symbol has no mask");
    long min1 = 0, max1 = 0, min2 = 0, max2 = 0;
    bool first = true;
    Integer den(1);
    for (const auto& [exp, c] : a.terms()) {
        if (first) {
            min1 = max1 = exp.e1;
            min2 = max2 = exp.e2;
            first = false;
        } else {
            min1 = std::min(min1, exp.e1);
            max1 = std::max(max1, exp.e1);
            min2 = std::min(min2, exp.e2);
            max2 = std::max(max2, exp.e2);
        }
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    MaskMatrix m;
    m.offset = {min1, max2};
    m.denominator = den;
    m.rows.assign(max2 - min2 + 1, std::vector<Integer>(max1 - min1 + 1, Integer(0)));
    for (const auto& [exp, c] : a.terms()) {
        Rational scaled = c * Rational(den);
        scaled.canonicalize();
        m.rows[max2 - exp.e2][exp.e1 - min1] = scaled.get_num();
    }
    return m;
}

BivariateLaurent mask_to_symbol(const MaskMatrix& m) {
    BivariateLaurent out;
    for (long r = 0; r < m.height(); ++r)
        for (long c = 0; c < m.width(); ++c) {
            Rational q(m.rows[r][c], m.denominator);
            q.canonicalize();
            out += BivariateLaurent::monomial(
                {m.offset.first + c, m.offset.second - r}, q);
        }
    return out;
}

GridFunction subdivide_step(const MaskMatrix& mask, const GridFunction& f) {
    const long e1_min = mask.offset.first;
    const long e1_max = mask.offset.first + mask.width() - 1;
    const long e2_max = mask.offset.second;
    const long e2_min = mask.offset.second - mask.height() + 1;

    GridFunction g;
    g.level = f.level + 1;
    // Output alpha is valid iff every beta with alpha - 2 beta in the mask
    // range lies inside f's window.
    g.window.x0 = 2 * f.window.x0 + e1_max - 1;
    g.window.x1 = 2 * f.window.x1 + e1_min + 1;
    g.window.y0 = 2 * f.window.y0 + e2_max - 1;
    g.window.y1 = 2 * f.window.y1 + e2_min + 1;
    if (g.window.empty())
        throw std::runtime_error("subdivision window exhausted");

    for (long ax = g.window.x0; ax <= g.window.x1; ++ax) {
        for (long ay = g.window.y0; ay <= g.window.y1; ++ay) {
            Rational acc(0);
            for (long r = 0; r < mask.height(); ++r) {
                const long g2 = e2_max - r;
                if ((ay - g2) % 2 != 0) continue;
                for (long c = 0; c < mask.width(); ++c) {
                    const Integer& w = mask.rows[r][c];
                    if (w == 0) continue;
                    const long g1 = e1_min + c;
                    if ((ax - g1) % 2 != 0) continue;
                    const Rational fv = f.at((ax - g1) / 2, (ay - g2) / 2);
                    if (fv == 0) continue;
                    acc += Rational(w) * fv;
                }
            }
            if (acc != 0) {
                acc /= Rational(mask.denominator);
                acc.canonicalize();
                g.values.emplace(std::make_pair(ax, ay), acc);
            }
        }
    }
    return g;
}

GridFunction basic_limit(const SchemeSymbol& a, long steps) {
    if (steps < 1) throw std::invalid_argument("basic limit requires steps >= 1");
    const MaskMatrix mask = symbol_to_mask(a.poly);
    long radius = 0;
    for (long v : {mask.offset.first, mask.offset.first + mask.width() - 1,
                   mask.offset.second, mask.offset.second - mask.height() + 1})
        radius = std::max(radius, std::abs(v));

    GridFunction f;
    f.level = 0;
    const long r0 = 2 * radius + 2;
    f.window = {-r0, r0, -r0, r0};
    f.values.emplace(std::make_pair(0L, 0L), rat(1));
    for (long s = 0; s < steps; ++s) f = subdivide_step(mask, f);
    return f;
}

Rational Poly2::eval(const Rational& x, const Rational& y) const {
    Rational out(0);
    for (const auto& [exp, c] : terms)
        out += c * rat_pow(x, exp.first) * rat_pow(y, exp.second);
    out.canonicalize();
    return out;
}

Poly2 Poly2::monomial(long i, long j, const Rational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative monomial exponent");
    Poly2 p;
    if (c != 0) p.terms.emplace(std::make_pair(i, j), c);
    return p;
}

bool reproduce_empirically(const SchemeSymbol& a, const Poly2& p, const Window& window) {
    if (window.empty()) throw std::invalid_argument("empty sampling window");
    if (!check_convergence_necessary(a.poly))
        throw std::domain_error(
            "reproduction test requires the necessary convergence conditions");
    GridFunction f;
    f.level = 0;
    f.window = window;
    for (long x = window.x0; x <= window.x1; ++x)
        for (long y = window.y0; y <= window.y1; ++y) {
            const Rational v = p.eval(rat(x), rat(y));
            if (v != 0) f.values.emplace(std::make_pair(x, y), v);
        }

    const GridFunction g = subdivide_step(symbol_to_mask(a.poly), f);
    for (long x = g.window.x0; x <= g.window.x1; ++x)
        for (long y = g.window.y0; y <= g.window.y1; ++y)
            if (g.at(x, y) != p.eval(rat(x, 2), rat(y, 2))) return false;
    return true;
}

}  // namespace fourdir
