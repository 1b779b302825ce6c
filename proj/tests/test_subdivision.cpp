#include <doctest.h>

#include <random>

#include "fourdir/subdivision.hpp"
#include "fourdir/symbols.hpp"
#include "golden.hpp"

using namespace fourdir;
using namespace fourdir::testing;

namespace {

GridFunction constant_grid(long radius, const Rational& v) {
    GridFunction f;
    f.window = {-radius, radius, -radius, radius};
    for (long x = -radius; x <= radius; ++x)
        for (long y = -radius; y <= radius; ++y)
            f.values.emplace(std::make_pair(x, y), v);
    return f;
}

Rational total_mass(const GridFunction& g) {
    Rational out(0);
    for (const auto& [pos, v] : g.values)
        if (g.window.contains(pos.first, pos.second)) out += v;
    return out;
}

}  // namespace

TEST_CASE("mask round trip") {
    const BivariateLaurent tent = golden_a_1_0();
    const MaskMatrix m = symbol_to_mask(tent);
    CHECK(m.denominator == 4);
    CHECK(m.offset == std::pair<long, long>{-1, 1});
    CHECK(m.rows == std::vector<std::vector<Integer>>{
                        {1, 2, 1}, {2, 4, 2}, {1, 2, 1}});
    CHECK(mask_to_symbol(m) == tent);

    const MaskMatrix m32 = symbol_to_mask(golden_a_3_2());
    CHECK(m32.denominator == 512);
    CHECK(m32.width() == 11);
    CHECK(m32.height() == 11);
    CHECK(m32.rows[5][5] == 512);
    CHECK(mask_to_symbol(m32) == golden_a_3_2());

    CHECK_THROWS_AS((void)symbol_to_mask(BivariateLaurent()), std::domain_error);
}

TEST_CASE("mask round trip on the catalog") {
    for (long n = 1; n <= 4; ++n)
        for (long l = 0; l < n; ++l) {
            const BivariateLaurent a = make_pseudospline(n, l).poly;
            CHECK(mask_to_symbol(symbol_to_mask(a)) == a);
        }
}

TEST_CASE("constant data is preserved") {
    for (long n = 1; n <= 3; ++n)
        for (long l = 0; l < n; ++l) {
            const MaskMatrix m = symbol_to_mask(make_pseudospline(n, l).poly);
            GridFunction g = subdivide_step(m, constant_grid(2 * (n + l), rat(1)));
            for (long x = g.window.x0; x <= g.window.x1; ++x)
                for (long y = g.window.y0; y <= g.window.y1; ++y)
                    CHECK(g.at(x, y) == 1);
        }
}

TEST_CASE("delta data yields the mask") {
    const MaskMatrix m = symbol_to_mask(golden_a_1_0());
    GridFunction f;
    f.window = {-3, 3, -3, 3};
    f.values.emplace(std::make_pair(0L, 0L), rat(1));
    const GridFunction g = subdivide_step(m, f);
    CHECK(g.level == 1);
    for (long x = -1; x <= 1; ++x)
        for (long y = -1; y <= 1; ++y)
            CHECK(g.at(x, y) == golden_a_1_0().coeff({x, y}));
}

TEST_CASE("interpolatory scheme keeps even-even data") {
    const MaskMatrix m = symbol_to_mask(golden_a_2_1());
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> val(-9, 9);
    GridFunction f;
    f.window = {-6, 6, -6, 6};
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y)
            f.values.emplace(std::make_pair(x, y), rat(val(rng), 2));
    const GridFunction g = subdivide_step(m, f);
    for (long x = g.window.x0; x <= g.window.x1; ++x)
        for (long y = g.window.y0; y <= g.window.y1; ++y)
            if (x % 2 == 0 && y % 2 == 0) CHECK(g.at(x, y) == f.at(x / 2, y / 2));
}

TEST_CASE("window exhaustion") {
    const MaskMatrix m = symbol_to_mask(golden_a_2_1());
    GridFunction f;
    f.window = {0, 1, 0, 1};
    f.values.emplace(std::make_pair(0L, 0L), rat(1));
    CHECK_THROWS_AS((void)subdivide_step(m, f), std::runtime_error);
}

TEST_CASE("basic limit tent") {
    const GridFunction g = basic_limit(make_fourdir_box(1), 1);
    CHECK(g.level == 1);
    for (long x = -1; x <= 1; ++x)
        for (long y = -1; y <= 1; ++y)
            CHECK(g.at(x, y) == golden_a_1_0().coeff({x, y}));
}

TEST_CASE("mass quadruples per step") {
    for (long n = 1; n <= 3; ++n)
        for (long l = 0; l < n; ++l) {
            const SchemeSymbol s = make_pseudospline(n, l);
            for (long steps = 1; steps <= 3; ++steps)
                CHECK(total_mass(basic_limit(s, steps)) == rat_pow(rat(4), steps));
        }
}

TEST_CASE("interpolation retention at integer points") {
    for (long n = 2; n <= 4; ++n) {
        const SchemeSymbol s = make_pseudospline(n, n - 1);
        for (long steps = 1; steps <= 3; ++steps) {
            const GridFunction g = basic_limit(s, steps);
            const long scale = 1L << steps;
            for (long x = -2; x <= 2; ++x)
                for (long y = -2; y <= 2; ++y) {
                    REQUIRE(g.window.contains(scale * x, scale * y));
                    CHECK(g.at(scale * x, scale * y) ==
                          (x == 0 && y == 0 ? rat(1) : rat(0)));
                }
        }
    }
}

TEST_CASE("symmetric data stays symmetric") {
    const MaskMatrix m = symbol_to_mask(make_pseudospline(3, 1).poly);
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> val(-5, 5);
    GridFunction f;
    f.window = {-10, 10, -10, 10};
    for (long x = 0; x <= 10; ++x)
        for (long y = 0; y <= x; ++y) {
            const Rational v = rat(val(rng), 3);
            for (auto [px, py] : {std::pair<long, long>{x, y}, {y, x}, {-x, y},
                                  {x, -y}, {-x, -y}, {-y, x}, {y, -x}, {-y, -x}})
                f.values.insert_or_assign(std::make_pair(px, py), v);
        }
    const GridFunction g = subdivide_step(m, f);
    for (long x = g.window.x0; x <= g.window.x1; ++x)
        for (long y = g.window.y0; y <= g.window.y1; ++y) {
            CHECK(g.at(x, y) == g.at(-x, -y));
            if (g.window.contains(y, x)) CHECK(g.at(x, y) == g.at(y, x));
        }
}

TEST_CASE("empirical reproduction") {
    const Window w{-8, 8, -8, 8};
    for (long n = 1; n <= 3; ++n)
        for (long l = 0; l < n; ++l) {
            const SchemeSymbol s = make_pseudospline(n, l);
            CHECK(reproduce_empirically(s, Poly2::monomial(0, 0), w));
        }

    const SchemeSymbol s21 = make_pseudospline(2, 1);
    CHECK(reproduce_empirically(s21, Poly2::monomial(2, 1), w));
    CHECK_FALSE(reproduce_empirically(s21, Poly2::monomial(4, 0), w));

    Poly2 mixed;
    mixed.terms[{2, 1}] = rat(3, 2);
    mixed.terms[{0, 3}] = rat(-1, 4);
    mixed.terms[{1, 0}] = rat(5);
    CHECK(reproduce_empirically(s21, mixed, w));

    SchemeSymbol bad;
    bad.poly = BivariateLaurent::constant(rat(4));
    CHECK_THROWS_AS((void)reproduce_empirically(bad, Poly2::monomial(0, 0), w),
                    std::domain_error);
}
