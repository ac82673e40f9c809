#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hecke/interp.hpp"
#include "hecke/roots.hpp"

using namespace hecke;

namespace {

RationalPolynomial poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

bool has_root_near(const RootSet& rs, std::complex<double> target, double tol = 1e-10) {
    for (const auto& r : rs.roots)
        if (std::abs(r - target) < tol) return true;
    return false;
}

RationalPolynomial core_of(FormKind family, long n, SeriesStore& store) {
    return extract_structure(family, n, interpolate_family(family, n, 5, &store)).core;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("find_roots on small polynomials") {
    RootSet quad = find_roots(poly({1, 0, 1})); // x^2 + 1
    REQUIRE(quad.poly_degree == 2);
    CHECK(has_root_near(quad, {0.0, 1.0}));
    CHECK(has_root_near(quad, {0.0, -1.0}));

    RootSet cubic = find_roots(poly({-6, 11, -6, 1})); // (x-1)(x-2)(x-3)
    REQUIRE(cubic.poly_degree == 3);
    CHECK(has_root_near(cubic, {1.0, 0.0}, 1e-12));
    CHECK(has_root_near(cubic, {2.0, 0.0}, 1e-12));
    CHECK(has_root_near(cubic, {3.0, 0.0}, 1e-12));
    for (double res : cubic.residuals) CHECK(res <= 1e-10);

    // multiple root: x(x-2)^2, the shape every cusp family carries
    RootSet mult = find_roots(poly({0, 4, -4, 1}));
    REQUIRE(mult.poly_degree == 3);
    CHECK(has_root_near(mult, {0.0, 0.0}, 1e-8));
    long near2 = 0;
    for (const auto& r : mult.roots)
        if (std::abs(r - std::complex<double>(2.0, 0.0)) < 1e-5) ++near2;
    CHECK(near2 == 2);

    CHECK_THROWS_AS(find_roots(poly({7})), PipelineError);
    CHECK_THROWS_AS(find_roots(RationalPolynomial{}), PipelineError);
}

TEST_CASE("find_roots conjugate closure and evenness of a_4") {
    SeriesStore store;
    RationalPolynomial a4 = core_of(FormKind::LittleJ, 4, store);
    REQUIRE(a4.degree() == 8);
    RootSet rs = find_roots(a4);

    // closed under conjugation
    for (const auto& r : rs.roots)
        CHECK(has_root_near(rs, std::conj(r), 1e-10));
    // a_4 is even, so roots come in +- pairs
    for (const auto& r : rs.roots)
        CHECK(has_root_near(rs, -r, 1e-8));
    // monomials were extracted: nothing near zero
    for (const auto& r : rs.roots) CHECK(std::abs(r) > 1e-2);
}

TEST_CASE("winding_count basics") {
    RationalPolynomial cyc = poly({-1, 0, 0, 1}); // x^3 - 1
    CHECK(winding_count(cyc, {0.0, 0.0}, 1.5) == 3);
    CHECK(winding_count(cyc, {0.0, 0.0}, 0.5) == 0);
    CHECK(winding_count(cyc, {1.0, 0.0}, 0.1) == 1);

    // roots of x^2 - 1 sit exactly on the circle |z| = 1: the radius is
    // auto-perturbed outward and both roots are counted
    CHECK(winding_count(poly({-1, 0, 1}), {0.0, 0.0}, 1.0) == 2);

    CHECK_THROWS_AS(winding_count(poly({5}), {0.0, 0.0}, 1.0), PipelineError);
    CHECK_THROWS_AS(winding_count(cyc, {0.0, 0.0}, 0.0), PipelineError);
}

TEST_CASE("winding count cross-validates find_roots on the a_n disks") {
    SeriesStore store;
    for (long n = 7; n >= 3; --n) {
        RationalPolynomial an = core_of(FormKind::LittleJ, n, store);
        double bound = static_cast<double>(n) / std::log(static_cast<double>(n));
        RootSet rs = find_roots(an);
        long inside = 0;
        for (const auto& r : rs.roots)
            if (std::abs(r) <= bound) ++inside;
        CHECK(winding_count(an, {0.0, 0.0}, bound) == inside);
        CHECK(inside == an.degree()); // the bound conjecture, numerically
    }
}

TEST_CASE("bound and geometry checks for the a_n cores") {
    SeriesStore store;
    for (long n : {4L, 6L, 10L}) {
        RationalPolynomial an = core_of(FormKind::LittleJ, n, store);
        GeometryReport rep = bound_and_geometry_check(n, find_roots(an));
        for (auto& v : rep.violations) MESSAGE("n=", n, ": ", v);
        CHECK(rep.bound_ok);
        CHECK(rep.imaginary_pair_ok);
        CHECK(rep.imaginary_axis == 2);
        CHECK(rep.real_axis + rep.imaginary_axis + rep.off_axis == an.degree());
        CHECK(rep.max_modulus <= rep.bound);
        CHECK(rep.violations.empty());
    }
    // n = 10 example: every root within 10/log 10 = 4.3429...
    RationalPolynomial a10 = core_of(FormKind::LittleJ, 10, store);
    GeometryReport rep = bound_and_geometry_check(10, find_roots(a10));
    CHECK(rep.bound == doctest::Approx(4.342944819).epsilon(1e-9));
    CHECK(rep.max_modulus <= 4.342944820);

    RootSet dummy = find_roots(poly({1, 0, 1}));
    CHECK_THROWS_AS(bound_and_geometry_check(1, dummy), PipelineError);
}

TEST_CASE("distance profile for the T* family") {
    SeriesStore store;
    DistanceProfile prof = distance_profile(FormKind::DeltaStar, 1, 8, 3, 6, &store);
    for (auto& v : prof.violations) MESSAGE(v);
    CHECK(prof.violations.empty());

    // n = 1 is skipped (constant polynomial, empty root set)
    for (const auto& e : prof.entries) CHECK(e.n >= 2);
    CHECK(prof.fit_points == 7); // n = 2..8 at m = 3
    // every distance positive, and the m > 3 comparisons hold strictly
    std::map<long, double> d3;
    for (const auto& e : prof.entries) {
        CHECK(e.d > 0.0);
        if (e.m == 3) d3[e.n] = e.d;
    }
    for (const auto& e : prof.entries)
        if (e.m > 3) CHECK(e.d > d3[e.n]);
    // exponential decay of d(3, n): negative slope, high-quality fit
    CHECK(prof.fit_slope < 0.0);
    CHECK(prof.fit_correlation >= 0.9);

    CHECK_THROWS_AS(distance_profile(FormKind::DeltaStar, 0, 3, 3, 6, &store), PipelineError);
    CHECK_THROWS_AS(distance_profile(FormKind::DeltaStar, 1, 3, 2, 6, &store), PipelineError);
}

TEST_CASE("quadrant plot output") {
    const std::string path = "/tmp/hecke_test_plot.ppm";
    quadrant_plot(poly({0, 1}), {-1.0, 1.0, -1.0, 1.0}, 64, 64, path);
    std::string img = slurp(path);
    REQUIRE(img.size() == 13 + 64 * 64 * 3);
    CHECK(img.substr(0, 13) == "P6\n64 64\n255\n");

    auto pixel = [&](long x, long y) {
        size_t o = 13 + (static_cast<size_t>(y) * 64 + static_cast<size_t>(x)) * 3;
        return std::array<unsigned char, 3>{static_cast<unsigned char>(img[o]),
                                            static_cast<unsigned char>(img[o + 1]),
                                            static_cast<unsigned char>(img[o + 2])};
    };
    // p = x: quadrant of the pixel coordinate itself; top-left is Re<0, Im>0
    auto matches = [&](long x, long y, int q) {
        auto px = pixel(x, y);
        return px[0] == kQuadrantPalette[q][0] && px[1] == kQuadrantPalette[q][1] &&
               px[2] == kQuadrantPalette[q][2];
    };
    CHECK(matches(0, 0, 1));   // II
    CHECK(matches(63, 0, 0));  // I
    CHECK(matches(0, 63, 2));  // III
    CHECK(matches(63, 63, 3)); // IV

    // determinism: a second render is byte-identical
    const std::string path2 = "/tmp/hecke_test_plot2.ppm";
    quadrant_plot(poly({0, 1}), {-1.0, 1.0, -1.0, 1.0}, 64, 64, path2);
    CHECK(slurp(path2) == img);

    // x^2 + 1: all four colors meet near the zeros +-i
    const std::string path3 = "/tmp/hecke_test_plot3.ppm";
    quadrant_plot(poly({1, 0, 1}), {-2.0, 2.0, -2.0, 2.0}, 128, 128, path3);
    std::string img3 = slurp(path3);
    const size_t hdr3 = std::string("P6\n128 128\n255\n").size();
    REQUIRE(img3.size() == hdr3 + 128 * 128 * 3);
    std::set<std::string> colors_near_zero;
    // z = i maps to pixel around x = 64, y = 32
    for (long y = 28; y <= 36; ++y)
        for (long x = 60; x <= 68; ++x) {
            size_t o = hdr3 + (static_cast<size_t>(y) * 128 + static_cast<size_t>(x)) * 3;
            colors_near_zero.insert(img3.substr(o, 3));
        }
    CHECK(colors_near_zero.size() == 4);

    CHECK_THROWS_AS(quadrant_plot(poly({0, 1}), {-1.0, 1.0, -1.0, 1.0}, 5000, 64, path),
                    PipelineError);
    CHECK_THROWS_AS(quadrant_plot(poly({0, 1}), {1.0, -1.0, -1.0, 1.0}, 64, 64, path),
                    PipelineError);
    CHECK_THROWS_AS(quadrant_plot(poly({0, 1}), {-1.0, 1.0, -1.0, 1.0}, 64, 64,
                                  "/nonexistent-dir/x.ppm"),
                    PipelineError);
    std::remove(path.c_str());
    std::remove(path2.c_str());
    std::remove(path3.c_str());
}
