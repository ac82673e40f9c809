#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/forms.hpp"
#include "hecke/oracles.hpp"

using namespace hecke;

TEST_CASE("form kind names and weights") {
    for (FormKind k : {FormKind::J, FormKind::LittleJ, FormKind::H4, FormKind::H6,
                       FormKind::DeltaStar, FormKind::DeltaDagger, FormKind::DeltaDiamond}) {
        auto back = form_kind_from_name(form_kind_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK_FALSE(form_kind_from_name("E8").has_value());
    CHECK(form_weight(FormKind::H4) == 4);
    CHECK(form_weight(FormKind::H6) == 6);
    CHECK(form_weight(FormKind::J) == 0);
    CHECK(form_weight(FormKind::DeltaStar) == 12);
}

TEST_CASE("J series in the small-height normalization") {
    FormSeries J = J_series(3, 8);
    CHECK(J.series.offset() == -1);
    CHECK(J.series.coefficient(-1) == 1);
    CHECK(J.series.coefficient(0) == Rational(31, 72)); // 744/1728
    CHECK(J.series.coefficient(1) == Rational(196884) / (Rational(1728) * 1728));
    CHECK_THROWS_AS(J_series(2, 8), PipelineError);
    CHECK_THROWS_AS(J_series(3, 0), PipelineError);
}

TEST_CASE("little j at m=3 is the Klein j-invariant") {
    long N = 12;
    FormSeries j = j_series(3, N);
    CHECK(j.series.offset() == -1);
    CHECK(j.series.order() == N);
    LaurentSeries klein = classical_series(ClassicalKind::JKlein, N);
    long common = std::min(j.series.order(), klein.order());
    CHECK(j.series.truncated(common) == klein.truncated(common));
    CHECK(j.series.coefficient(0) == 744);
    CHECK(j.series.coefficient(1) == 196884);
    CHECK(j.series.coefficient(2) == 21493760);
}

TEST_CASE("little j integrality and sampled values across m") {
    // alpha_1(m) = A_1(m) = 276 m^2 (m^4 - (8/69) m^2 - 16/23)
    for (long m : {3L, 4L, 5L, 7L, 12L}) {
        FormSeries j = j_series(m, 3);
        CHECK(j.series.coefficient(-1) == 1);
        Rational x(m);
        Rational a1 = Rational(276) * x * x *
                      (x * x * x * x - Rational(8, 69) * x * x - Rational(16, 23));
        CHECK(j.series.coefficient(1) == a1);
        for (long n = -1; n < 3; ++n) CHECK(j.series.coefficient(n).get_den() == 1);
    }
}

TEST_CASE("classical anchors at m=3") {
    long N = 10;
    CHECK(h4_series(3, N).series == classical_series(ClassicalKind::E4, N));
    CHECK(h6_series(3, N).series == classical_series(ClassicalKind::E6, N));
    LaurentSeries delta = classical_series(ClassicalKind::Delta, N);
    CHECK(cusp_series(FormKind::DeltaStar, 3, N).series == delta);
    CHECK(cusp_series(FormKind::DeltaDagger, 3, N).series == Rational(1728) * delta);
    CHECK(cusp_series(FormKind::DeltaDiamond, 3, N).series == delta);
}

TEST_CASE("H series leading data") {
    FormSeries h4 = h4_series(4, 6);
    CHECK(h4.series.coefficient(0) == 1);
    CHECK(h4.series.coefficient(1) == 384); // B_1(4)
    FormSeries h6 = h6_series(5, 6);
    CHECK(h6.series.coefficient(0) == 1);
    CHECK(h6.series.coefficient(1) == -2600); // C_1(5)
    for (long m : {4L, 6L, 9L}) {
        CHECK(h4_series(m, 4).series.coefficient(0) == 1);
        CHECK(h6_series(m, 4).series.coefficient(0) == 1);
    }
}

TEST_CASE("defining identities for H4 and H6") {
    long N = 20;
    for (long m = 3; m <= 12; ++m) {
        FormSeries jf = j_series(m, N + 3);
        const LaurentSeries& j = jf.series;
        Rational c = Rational(64) * m * m * m;
        LaurentSeries jp = j.qderiv();

        // H4^{m-2} j (j - c) = (q dj/dq)^2
        LaurentSeries h4 = h4_series(m, N).series;
        LaurentSeries lhs4 = h4.pow_trunc(static_cast<unsigned long>(m - 2)) * j *
                             (j - LaurentSeries::constant(c));
        LaurentSeries rhs4 = jp * jp;
        long o4 = std::min(lhs4.order(), rhs4.order());
        REQUIRE(o4 >= N - 2);
        CHECK(lhs4.truncated(o4) == rhs4.truncated(o4));

        // (-1)^m H6^{m-2} j^{m-1} (j - c) = (q dj/dq)^m
        LaurentSeries h6 = h6_series(m, N).series;
        LaurentSeries lhs6 = h6.pow_trunc(static_cast<unsigned long>(m - 2)) *
                             j.pow_trunc(static_cast<unsigned long>(m - 1)) *
                             (j - LaurentSeries::constant(c));
        if (m % 2 == 1) lhs6 = -lhs6;
        LaurentSeries rhs6 = jp.pow_trunc(static_cast<unsigned long>(m));
        long o6 = std::min(lhs6.order(), rhs6.order());
        REQUIRE(o6 > -m); // enough overlap to be meaningful
        CHECK(lhs6.truncated(o6) == rhs6.truncated(o6));
    }
}

TEST_CASE("cusp expansions vanish at the cusp with the expected leading data") {
    for (long m : {4L, 5L, 8L}) {
        Rational x(m);
        FormSeries star = cusp_series(FormKind::DeltaStar, m, 4);
        CHECK(star.series.offset() == 1);
        CHECK(star.series.coefficient(1) == 1);
        CHECK(star.series.coefficient(2) == Rational(-8) * (x - 2) * (x - 2) * x);

        FormSeries dag = cusp_series(FormKind::DeltaDagger, m, 4);
        CHECK(dag.series.offset() == 1);
        CHECK(dag.series.coefficient(1) == Rational(16) * x * (3 * x * x + x + 6));
        CHECK(dag.series.coefficient(2) ==
              Rational(-16) * x * x *
                  (((((Rational(39) * x - 95) * x + 66) * x - 260) * x) - 120));

        FormSeries dia = cusp_series(FormKind::DeltaDiamond, m, 4);
        CHECK(dia.series.offset() == 1);
        CHECK(dia.series.coefficient(1) == 1);
        CHECK(dia.series.coefficient(2) == x * (Rational(-24) * x * x + 48 * x + 64));
    }
}

TEST_CASE("form_series dispatch") {
    for (FormKind k : {FormKind::J, FormKind::LittleJ, FormKind::H4, FormKind::H6,
                       FormKind::DeltaStar, FormKind::DeltaDagger, FormKind::DeltaDiamond}) {
        FormSeries f = form_series(k, 5, 4);
        CHECK(f.kind == k);
        CHECK(f.m == 5);
        CHECK(f.weight == form_weight(k));
    }
}

TEST_CASE("series store computes once and honors disk hooks") {
    SeriesStore store;
    int saves = 0;
    std::map<long, LaurentSeries> disk;
    store.attach_disk(
        [&](long m, long) -> std::optional<LaurentSeries> {
            auto it = disk.find(m);
            if (it == disk.end()) return std::nullopt;
            return it->second;
        },
        [&](long m, const LaurentSeries& s) {
            ++saves;
            disk[m] = s;
        });

    LaurentSeries a = store.little_j(3, 8);
    CHECK(a.order() == 8);
    CHECK(saves == 1);

    // narrower request: sliced from memory, no recompute, no new save
    LaurentSeries b = store.little_j(3, 5);
    CHECK(b.order() == 5);
    CHECK(b == a.truncated(5));
    CHECK(saves == 1);

    // same width served from memory
    CHECK(store.little_j(3, 8) == a);
    CHECK(saves == 1);

    // a second store sees the persisted expansion instead of recomputing
    SeriesStore other;
    int other_saves = 0;
    other.attach_disk(
        [&](long m, long) -> std::optional<LaurentSeries> {
            auto it = disk.find(m);
            if (it == disk.end()) return std::nullopt;
            return it->second;
        },
        [&](long, const LaurentSeries&) { ++other_saves; });
    CHECK(other.little_j(3, 6) == a.truncated(6));
    CHECK(other_saves == 0);

    // j_series with a store routes through it
    FormSeries viaStore = j_series(4, 6, &store);
    CHECK(viaStore.series == j_series(4, 6).series);
    CHECK(saves == 2);
}

TEST_CASE("entire dimension bound") {
    DimBounds d1 = dim_entire(3, 12, 1);
    CHECK(d1.entire == 2);
    CHECK(d1.cusp_lower == 1);
    DimBounds d2 = dim_entire(3, 4, 1);
    CHECK(d2.entire == 1);
    CHECK(d2.cusp_lower == 0);
    DimBounds d3 = dim_entire(12, 12, 1);
    CHECK(d3.entire == 3);
    CHECK(d3.cusp_lower == 2);
    CHECK_THROWS_AS(dim_entire(2, 12, 1), PipelineError);
    CHECK_THROWS_AS(dim_entire(3, 12, 0), PipelineError);
}

TEST_CASE("residue recognition at the classical corners") {
    // Eq.-(13)-style consistency: the numeric residue matches the recognized
    // rational at the three arithmetic groups.
    CHECK(std::abs(residue_A(3) - 1.0 / 1728.0) < 1e-8 / 1728.0);
    CHECK(std::abs(residue_A(4) - 1.0 / 256.0) < 1e-8 / 256.0);
    CHECK(std::abs(residue_A(6) - 1.0 / 108.0) < 1e-8 / 108.0);
}
