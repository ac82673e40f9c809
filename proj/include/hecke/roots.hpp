#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hecke/forms.hpp"
#include "hecke/polynomial.hpp"

namespace hecke {

// Floating-point root geometry for the interpolating polynomials.  Exact
// arithmetic stops at the polynomials themselves; everything here is double
// precision (degrees stay <= ~120, so Aberth iteration plus Newton polish
// is ample — certified isolation is out of scope).

struct RootSet {
    std::vector<std::complex<double>> roots; // size == poly_degree
    // backward-error residuals: |p(root)| / sum_i |c_i root^i|, the
    // scale-free certificate (a raw |p| bound cannot beat the term-size
    // noise floor once degrees and coefficients grow)
    std::vector<double> residuals;
    long poly_degree = 0;
    double scale = 1.0; // max-abs coefficient used to normalize evaluation
};

// Simultaneous-iteration (Aberth) roots, Newton-polished, with the root
// multiset closed under conjugation for real input.  max residual <= tol.
RootSet find_roots(const RationalPolynomial& p, double tol = 1e-10);

// Argument-principle zero count inside the circle |z - center| = radius,
// adaptively sampled until the winding number is within 1e-3 of an integer
// (twice, at consecutive sampling densities).  A root sitting on the contour
// is dodged by a +1e-6 relative radius perturbation.
long winding_count(const RationalPolynomial& p, std::complex<double> center, double radius);

// Conjecture-3 geometry for the core polynomial a_n: the root-magnitude
// bound n/log n (roots at +-2 exempt) and the exactly-two-imaginary-roots
// count, plus axis/curve classification tallies for the report.
struct GeometryReport {
    long n = 0;
    double bound = 0;          // n / log n
    long real_axis = 0;        // roots with tiny imaginary part
    long imaginary_axis = 0;   // nonzero roots with tiny real part
    long off_axis = 0;         // everything else (the curve P_n)
    double max_modulus = 0;    // over non-exempt roots
    bool bound_ok = false;     // clause 1
    bool imaginary_pair_ok = false; // clause 3: imaginary_axis == 2
    std::vector<std::string> violations;
};

GeometryReport bound_and_geometry_check(long n, const RootSet& rs);

// Conjecture-8 distance data: d(m, n) = min over roots of T_n of |m - root|.
// Entries hold d > 0 only; a zero distance or a d(m,n) <= d(3,n) comparison
// failure lands in violations as a counterexample record.  The decay fit is
// least-squares of log d(3, n) against n; fit_correlation is the absolute
// Pearson correlation of that fit.
struct DistanceProfile {
    struct Entry {
        long m = 0, n = 0;
        double d = 0;
    };
    std::vector<Entry> entries;
    double fit_slope = 0;
    double fit_intercept = 0;
    double fit_correlation = 0;
    long fit_points = 0;
    std::vector<std::string> violations;
};

DistanceProfile distance_profile(FormKind family, long n_lo, long n_hi, long m_lo, long m_hi,
                                 SeriesStore* store = nullptr);

// Quadrant-coloring raster: each pixel is colored by the sign quadrant of
// p at the pixel-center coordinate, so zeros appear where all four colors
// meet.  Deterministic binary PPM (P6) output; palette in kQuadrantPalette.
struct PlotWindow {
    double re_min, re_max, im_min, im_max;
};

// (Re >= 0, Im >= 0), (Re < 0, Im >= 0), (Re < 0, Im < 0), (Re >= 0, Im < 0)
inline constexpr unsigned char kQuadrantPalette[4][3] = {
    {215, 48, 39},   // quadrant I:   red
    {252, 141, 89},  // quadrant II:  orange
    {145, 191, 219}, // quadrant III: light blue
    {69, 117, 180},  // quadrant IV:  blue
};

void quadrant_plot(const RationalPolynomial& p, const PlotWindow& window, long width,
                   long height, const std::string& path);

} // namespace hecke
