#include "fourdir/analysis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "fourdir/symbols.hpp"

namespace fourdir {

namespace {

const std::array<std::pair<Rational, Rational>, 3>& sign_points() {
    static const std::array<std::pair<Rational, Rational>, 3> pts = {
        std::pair<Rational, Rational>{rat(-1), rat(1)},
        std::pair<Rational, Rational>{rat(1), rat(-1)},
        std::pair<Rational, Rational>{rat(-1), rat(-1)},
    };
    return pts;
}

// 2x the signed area of a polygon (shoelace), vertices in order.
long long hull_area_twice(std::vector<std::pair<long, long>> pts) {
    if (pts.size() < 3) return 0;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return 0;
    auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a,
                    const std::pair<long, long>& b) {
        return (long long)(a.first - o.first) * (b.second - o.second) -
               (long long)(a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long, long>> hull(2 * pts.size());
    size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    const size_t lower = k + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    long long twice = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        twice += (long long)a.first * b.second - (long long)b.first * a.second;
    }
    return twice < 0 ? -twice : twice;
}

}  // namespace

bool check_symmetry(const BivariateLaurent& a) {
    return transform(a, Transform::invert_z1) == a &&
           transform(a, Transform::invert_z2) == a &&
           transform(a, Transform::swap) == a;
}

bool check_convergence_necessary(const BivariateLaurent& a) {
    if (eval(a, rat(1), rat(1)) != 4) return false;
    for (const auto& [z1, z2] : sign_points())
        if (eval(a, z1, z2) != 0) return false;
    return true;
}

long generation_degree(const BivariateLaurent& a, long max_check,
                       DerivativeWitness* witness) {
    for (long d = 0; d <= max_check; ++d) {
        for (long k1 = 0; k1 <= d; ++k1) {
            const long k2 = d - k1;
            for (const auto& [z1, z2] : sign_points()) {
                const Rational v = derivative_value(a, k1, k2, z1, z2);
                if (v != 0) {
                    if (witness) *witness = {k1, k2, z1, z2, v};
                    return d - 1;
                }
            }
        }
    }
    return max_check;
}

long reproduction_degree(const BivariateLaurent& a, long max_check,
                         DerivativeWitness* witness) {
    if (!check_convergence_necessary(a))
        throw std::domain_error(
            "reproduction degree requires the necessary convergence conditions");
    const long cap = generation_degree(a, max_check);
    for (long d = 1; d <= std::min(max_check, cap); ++d) {
        for (long k1 = 0; k1 <= d; ++k1) {
            const long k2 = d - k1;
            const Rational v = derivative_value(a, k1, k2, rat(1), rat(1));
            if (v != 0) {
                if (witness) *witness = {k1, k2, rat(1), rat(1), v};
                return d - 1;
            }
        }
    }
    return std::min(max_check, cap);
}

bool check_interpolatory(const BivariateLaurent& a) {
    BivariateLaurent sum = a;
    sum += transform(a, Transform::negate_z1);
    sum += transform(a, Transform::negate_z2);
    sum += transform(transform(a, Transform::negate_z1), Transform::negate_z2);
    return sum == BivariateLaurent::constant(rat(4));
}

SupportReport support_of(const BivariateLaurent& a) {
    if (a.is_zero()) throw std::domain_error("support of the zero polynomial is undefined");
    SupportReport r;
    std::vector<std::pair<long, long>> pts;
    for (const auto& [exp, c] : a.terms()) {
        pts.emplace_back(exp.e1, exp.e2);
        r.octagon.m = std::max(r.octagon.m, std::abs(exp.e1));
        r.octagon.n = std::max(r.octagon.n, std::abs(exp.e2));
        r.max_diag = std::max(r.max_diag, std::abs(exp.e1) + std::abs(exp.e2));
    }
    r.octagon.l = r.octagon.m + r.octagon.n - r.max_diag;
    r.hull_area = Rational(static_cast<long>(hull_area_twice(pts))) / 2;
    r.hull_area.canonicalize();
    // The hull is contained in the octagon by construction, so equal area
    // means the hull fills it exactly.
    const long m = r.octagon.m, n = r.octagon.n, l = r.octagon.l;
    Rational oct_area = Rational(4 * m * n) - Rational(2 * l * l);
    r.octagonal = l <= std::min(m, n) && r.hull_area == oct_area;
    return r;
}

SupportOctagon predicted_support(long n, long l) {
    if (!(n >= 1 && 0 <= l && l < n))
        throw std::invalid_argument("predicted support requires 0 <= l < n");
    const long half = n + l;
    const long cut = n + l - (n - l + 1) / 2;
    return {half, half, cut};
}

SupportOctagon interpolatory_support(long n) {
    if (n < 1) throw std::invalid_argument("interpolatory support requires n >= 1");
    return {2 * n - 1, 2 * n - 1, 2 * n - 2};
}

bool example1_decomposition_check() {
    const BivariateLaurent a =
        rat(12) * make_box_symbol(1, 1, 1) - rat(8) * make_box_symbol(1, 1, 2);

    // Printed 7x7 mask, rows top to bottom = z2 exponent 3..-3, denominator 32.
    static const long mask[7][7] = {
        {0, 0, -1, -2, -1, 0, 0},
        {0, -2, 0, 4, 0, -2, 0},
        {-1, 0, 10, 18, 10, 0, -1},
        {-2, 4, 18, 24, 18, 4, -2},
        {-1, 0, 10, 18, 10, 0, -1},
        {0, -2, 0, 4, 0, -2, 0},
        {0, 0, -1, -2, -1, 0, 0},
    };
    BivariateLaurent printed;
    for (long r = 0; r < 7; ++r)
        for (long c = 0; c < 7; ++c)
            printed += BivariateLaurent::monomial({c - 3, 3 - r}, rat(mask[r][c], 32));
    if (a != printed) return false;

    const BivariateLaurent d1 = lift(make_delta(), Axis::z1);
    const BivariateLaurent d2 = lift(make_delta(), Axis::z2);
    const BivariateLaurent one = BivariateLaurent::constant(rat(1));
    const BivariateLaurent b110 = make_box_symbol(1, 1, 0);
    const BivariateLaurent decomposition =
        BivariateLaurent::constant(rat(4)) -
        rat(4) * d1.pow(2) * (make_box_symbol(0, 1, 0) + rat(2) * b110) -
        rat(4) * d1 * d2 * (one + rat(4) * b110) -
        rat(4) * d2.pow(2) * (make_box_symbol(1, 0, 0) + rat(2) * b110);
    if (a != decomposition) return false;

    // b = B_{2,2,0} - B_{1,1,1} = delta(z1^2) delta(z2^2) / 16
    const BivariateLaurent b = make_box_symbol(2, 2, 0) - make_box_symbol(1, 1, 1);
    BivariateLaurent delta_sq;  // delta(z^2) on each axis via exponent doubling
    {
        UnivariateLaurent::TermMap t1, t2;
        const UnivariateLaurent delta = make_delta();
        for (const auto& [e, c] : delta.terms()) {
            t1.emplace(2 * e, c);
            t2.emplace(2 * e, c);
        }
        delta_sq = lift(UnivariateLaurent(t1), Axis::z1) * lift(UnivariateLaurent(t2), Axis::z2);
    }
    if (b != rat(1, 16) * delta_sq) return false;

    // a_mu against the printed matrix with entries mu, -2mu, 32+4mu.
    for (long mu : {-2L, 0L, 1L}) {
        const BivariateLaurent amu = make_example_amu(rat(mu)).poly;
        BivariateLaurent expect;
        for (long r = 0; r < 7; ++r)
            for (long c = 0; c < 7; ++c) {
                long v = mask[r][c];
                const bool odd_row = r == 1 || r == 5;
                const bool odd_col = c == 1 || c == 5;
                if (odd_row && odd_col) v = mu;              // corners of the inner ring
                else if (odd_row && c == 3) v = -2 * mu;
                else if (odd_col && r == 3) v = -2 * mu;
                else if (r == 3 && c == 3) v = 32 + 4 * mu;  // center
                expect += BivariateLaurent::monomial({c - 3, 3 - r}, rat(v, 32));
            }
        if (amu != expect) return false;
    }
    return true;
}

DegreeReport analyze(const BivariateLaurent& a, long max_check) {
    DegreeReport r;
    r.symmetric = check_symmetry(a);
    r.convergence_necessary = check_convergence_necessary(a);
    r.interpolatory = check_interpolatory(a);
    r.generation_degree = generation_degree(a, max_check);
    if (r.convergence_necessary)
        r.reproduction_degree = reproduction_degree(a, max_check);
    return r;
}

}  // namespace fourdir
