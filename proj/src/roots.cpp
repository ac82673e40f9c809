#include "hecke/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "hecke/errors.hpp"
#include "hecke/interp.hpp"

namespace hecke {

namespace {

using Complex = std::complex<double>;

// Ascending double coefficients plus the max-abs normalization; throws if a
// coefficient leaves double range (budgets keep everything far below that).
struct ScaledPoly {
    std::vector<double> c; // ascending, divided by scale
    double scale = 1.0;

    explicit ScaledPoly(const RationalPolynomial& p) {
        const auto& src = p.coefficients();
        c.resize(src.size());
        for (size_t i = 0; i < src.size(); ++i) {
            c[i] = src[i].get_d();
            if (!std::isfinite(c[i]))
                throw PipelineError("roots: coefficient exceeds double range");
            scale = std::max(scale, std::abs(c[i]));
        }
        for (double& v : c) v /= scale;
    }

    Complex eval(Complex z) const {
        Complex acc(0.0, 0.0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    }

    Complex eval_deriv(Complex z) const {
        Complex acc(0.0, 0.0);
        for (size_t i = c.size(); i-- > 1;) acc = acc * z + c[i] * static_cast<double>(i);
        return acc;
    }

    // Backward-error denominator: sum |c_i| |z|^i.  |p(z)| relative to this
    // is the standard certificate — the raw |p(z)| floor at a root grows
    // like the largest term, which dwarfs any fixed tolerance for the
    // higher-degree cores.
    double term_bound(Complex z) const {
        double az = std::abs(z);
        double acc = 0.0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * az + std::abs(c[i]);
        return std::max(acc, 1e-300);
    }

    long degree() const { return static_cast<long>(c.size()) - 1; }
};

// Fujiwara root bound, computed from coefficient ratios so the max-abs
// normalization cancels out.
double fujiwara_bound(const ScaledPoly& p) {
    long d = p.degree();
    double lead = std::abs(p.c[static_cast<size_t>(d)]);
    double best = 0.0;
    for (long i = 1; i <= d; ++i) {
        double a = std::abs(p.c[static_cast<size_t>(d - i)]);
        if (a == 0.0) continue;
        best = std::max(best, std::pow(a / lead, 1.0 / static_cast<double>(i)));
    }
    return 2.0 * std::max(best, 1e-3);
}

} // namespace

RootSet find_roots(const RationalPolynomial& p, double tol) {
    if (p.is_zero() || p.degree() < 1)
        throw PipelineError("find_roots: degree must be at least 1");
    ScaledPoly sp(p);
    long d = sp.degree();

    // initial guesses on a circle inside the Fujiwara bound, angle-offset
    // so no start sits on the real axis
    double r0 = 0.5 * fujiwara_bound(sp);
    std::vector<Complex> z(static_cast<size_t>(d));
    for (long k = 0; k < d; ++k) {
        double ang = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) /
                         static_cast<double>(d) +
                     0.5;
        z[static_cast<size_t>(k)] = Complex(r0 * std::cos(ang), r0 * std::sin(ang));
    }

    const int kMaxIter = 400;
    double worst = 0.0;
    bool converged = false;
    int iters = 0;
    for (; iters < kMaxIter && !converged; ++iters) {
        converged = true;
        worst = 0.0;
        for (long k = 0; k < d; ++k) {
            Complex zk = z[static_cast<size_t>(k)];
            Complex pv = sp.eval(zk);
            // at the backward-error noise floor (multiple-root clusters
            // stall in correction size long after the value is exact)
            if (std::abs(pv) <= 1e-14 * sp.term_bound(zk)) continue;
            Complex dv = sp.eval_deriv(zk);
            Complex newton = (dv == Complex(0.0, 0.0)) ? Complex(1e-3, 1e-3) : pv / dv;
            Complex repel(0.0, 0.0);
            for (long j = 0; j < d; ++j)
                if (j != k) repel += 1.0 / (zk - z[static_cast<size_t>(j)]);
            Complex w = newton / (1.0 - newton * repel);
            z[static_cast<size_t>(k)] = zk - w;
            double rel = std::abs(w) / (1.0 + std::abs(zk));
            worst = std::max(worst, rel);
            if (rel > 1e-14) converged = false;
        }
    }

    // Newton polish (skipped when the step would be a wild jump, as near a
    // multiple root where p' is almost zero)
    for (auto& zk : z)
        for (int step = 0; step < 3; ++step) {
            Complex dv = sp.eval_deriv(zk);
            if (dv == Complex(0.0, 0.0)) break;
            Complex w = sp.eval(zk) / dv;
            if (std::abs(w) > 0.5 * (1.0 + std::abs(zk))) break;
            zk -= w;
        }

    // conjugate closure: snap near-real roots, then average each upper-half
    // root with its mirror partner (left untouched if no partner is near,
    // which only happens inside multiple-root clusters)
    for (auto& zk : z)
        if (std::abs(zk.imag()) <= 1e-9 * (1.0 + std::abs(zk))) zk = Complex(zk.real(), 0.0);
    std::vector<bool> used(z.size(), false);
    for (size_t i = 0; i < z.size(); ++i) {
        if (used[i] || z[i].imag() <= 0.0) continue;
        size_t best = z.size();
        double bestd = 1e300;
        for (size_t j = 0; j < z.size(); ++j) {
            if (j == i || used[j] || z[j].imag() >= 0.0) continue;
            double dist = std::abs(std::conj(z[i]) - z[j]);
            if (dist < bestd) {
                bestd = dist;
                best = j;
            }
        }
        if (best == z.size() || bestd > 1e-5 * (1.0 + std::abs(z[i]))) continue;
        Complex mean = 0.5 * (z[i] + std::conj(z[best]));
        z[i] = mean;
        z[best] = std::conj(mean);
        used[i] = used[best] = true;
    }

    RootSet rs;
    rs.poly_degree = d;
    rs.scale = sp.scale;
    rs.roots = std::move(z);
    rs.residuals.reserve(rs.roots.size());
    double max_res = 0.0;
    for (const Complex& root : rs.roots) {
        double res = std::abs(sp.eval(root)) / sp.term_bound(root);
        rs.residuals.push_back(res);
        max_res = std::max(max_res, res);
    }
    if (max_res > tol)
        throw PipelineError("find_roots: residual " + std::to_string(max_res) +
                            " exceeds tolerance " + std::to_string(tol) + " after " +
                            std::to_string(iters) + " iterations (max relative correction " +
                            std::to_string(worst) + ")");
    return rs;
}

long winding_count(const RationalPolynomial& p, Complex center, double radius) {
    if (p.is_zero() || p.degree() < 1)
        throw PipelineError("winding_count: degree must be at least 1");
    if (!(radius > 0.0)) throw PipelineError("winding_count: radius must be positive");
    ScaledPoly sp(p);

    // Samples hitting a zero, or counts that refuse to stabilize, both mean
    // a root is on or hugging the contour: nudge the radius outward and retry.
    for (int attempt = 0; attempt < 8; ++attempt) {
        long prev_rounded = -1;
        bool prev_ok = false;
        bool contour_hit = false;
        for (long samples = 256; samples <= (1L << 20); samples *= 2) {
            double total = 0.0;
            double prev_arg = 0.0;
            for (long k = 0; k <= samples && !contour_hit; ++k) {
                double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(samples);
                Complex zv = center + Complex(radius * std::cos(t), radius * std::sin(t));
                Complex pv = sp.eval(zv);
                if (std::abs(pv) < 1e-300) {
                    contour_hit = true;
                    break;
                }
                double a = std::arg(pv);
                if (k > 0) {
                    double delta = a - prev_arg;
                    while (delta > std::numbers::pi) delta -= 2.0 * std::numbers::pi;
                    while (delta <= -std::numbers::pi) delta += 2.0 * std::numbers::pi;
                    total += delta;
                }
                prev_arg = a;
            }
            if (contour_hit) break;
            double value = total / (2.0 * std::numbers::pi);
            long rounded = std::lround(value);
            bool ok = std::abs(value - static_cast<double>(rounded)) < 1e-3;
            if (ok && prev_ok && rounded == prev_rounded) return rounded;
            prev_ok = ok;
            prev_rounded = rounded;
        }
        radius *= 1.0 + 1e-6;
    }
    throw PipelineError("winding_count: failed to stabilize after radius perturbations");
}

GeometryReport bound_and_geometry_check(long n, const RootSet& rs) {
    if (n <= 1) throw PipelineError("bound_and_geometry_check: requires n > 1");
    GeometryReport rep;
    rep.n = n;
    rep.bound = static_cast<double>(n) / std::log(static_cast<double>(n));
    double slack = 1e-9 * std::max(1.0, rep.bound);
    rep.bound_ok = true;
    for (const auto& rho : rs.roots) {
        double mag = std::abs(rho);
        double eps = 1e-8 * std::max(1.0, mag);
        bool exempt = std::abs(rho - Complex(2.0, 0.0)) < eps ||
                      std::abs(rho + Complex(2.0, 0.0)) < eps;
        if (!exempt) {
            rep.max_modulus = std::max(rep.max_modulus, mag);
            if (mag > rep.bound + slack) {
                rep.bound_ok = false;
                rep.violations.push_back("root modulus " + std::to_string(mag) +
                                         " exceeds bound " + std::to_string(rep.bound));
            }
        }
        if (std::abs(rho.imag()) <= eps)
            ++rep.real_axis;
        else if (std::abs(rho.real()) <= eps)
            ++rep.imaginary_axis;
        else
            ++rep.off_axis;
    }
    rep.imaginary_pair_ok = (rep.imaginary_axis == 2);
    if (!rep.imaginary_pair_ok)
        rep.violations.push_back("imaginary-axis root count " +
                                 std::to_string(rep.imaginary_axis) + ", expected 2");
    return rep;
}

DistanceProfile distance_profile(FormKind family, long n_lo, long n_hi, long m_lo, long m_hi,
                                 SeriesStore* store) {
    if (n_lo < 1 || n_lo > n_hi) throw PipelineError("distance_profile: bad n range");
    if (m_lo < 3 || m_lo > m_hi) throw PipelineError("distance_profile: bad m range (m >= 3)");
    DistanceProfile prof;
    std::vector<std::pair<long, double>> base; // (n, d(3, n)) when m = 3 in range
    for (long n = n_lo; n <= n_hi; ++n) {
        RationalPolynomial t = interpolate_family(family, n, 5, store);
        if (t.degree() < 1) continue; // empty root set (e.g. T*_1 == 1): no entries

        // The interpolants carry structural monomial and (x-2)^k factors at
        // multiplicities Aberth handles poorly; peel those roots exactly and
        // iterate only on the (squarefree in practice) remainder.
        std::vector<Complex> roots;
        for (const Rational& r : {Rational(0), Rational(2)}) {
            long k = t.multiplicity_at(r);
            if (k == 0) continue;
            RationalPolynomial q;
            for (long i = 0; i < k; ++i) {
                RationalPolynomial lin({-r, Rational(1)});
                lin.divides_into(t, q);
                t = q;
            }
            roots.insert(roots.end(), static_cast<size_t>(k), Complex(r.get_d(), 0.0));
        }
        if (t.degree() >= 1) {
            RootSet rs = find_roots(t);
            roots.insert(roots.end(), rs.roots.begin(), rs.roots.end());
        }

        double d3 = -1.0;
        for (long m = m_lo; m <= m_hi; ++m) {
            double d = 1e300;
            for (const auto& rho : roots)
                d = std::min(d, std::abs(rho - Complex(static_cast<double>(m), 0.0)));
            if (d <= 0.0) {
                prof.violations.push_back("d(" + std::to_string(m) + "," + std::to_string(n) +
                                          ") = 0: root at integer m");
                continue;
            }
            prof.entries.push_back({m, n, d});
            if (m == 3) {
                d3 = d;
                base.emplace_back(n, d);
            } else if (d3 >= 0.0 && d <= d3) {
                prof.violations.push_back("d(" + std::to_string(m) + "," + std::to_string(n) +
                                          ") = " + std::to_string(d) + " <= d(3," +
                                          std::to_string(n) + ") = " + std::to_string(d3));
            }
        }
    }

    // least squares of log d(3, n) against n
    prof.fit_points = static_cast<long>(base.size());
    if (base.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        for (auto& [n, d] : base) {
            double x = static_cast<double>(n), y = std::log(d);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            syy += y * y;
        }
        double N = static_cast<double>(base.size());
        double den = N * sxx - sx * sx;
        prof.fit_slope = (N * sxy - sx * sy) / den;
        prof.fit_intercept = (sy - prof.fit_slope * sx) / N;
        double corr_den = std::sqrt((N * sxx - sx * sx) * (N * syy - sy * sy));
        prof.fit_correlation =
            corr_den > 0 ? std::abs((N * sxy - sx * sy) / corr_den) : 0.0;
    }
    return prof;
}

void quadrant_plot(const RationalPolynomial& p, const PlotWindow& window, long width,
                   long height, const std::string& path) {
    if (width < 1 || height < 1 || width > 4096 || height > 4096)
        throw PipelineError("quadrant_plot: resolution must be within 1..4096 per side");
    if (!(window.re_min < window.re_max) || !(window.im_min < window.im_max))
        throw PipelineError("quadrant_plot: degenerate window");
    ScaledPoly sp(p);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw PipelineError("quadrant_plot: cannot open " + path);
    out << "P6\n" << width << " " << height << "\n255\n";
    std::vector<unsigned char> row(static_cast<size_t>(width) * 3);
    for (long y = 0; y < height; ++y) {
        // top row carries im_max so the image is oriented like the plane
        double im = window.im_max - (window.im_max - window.im_min) *
                                        (static_cast<double>(y) + 0.5) /
                                        static_cast<double>(height);
        for (long x = 0; x < width; ++x) {
            double re = window.re_min + (window.re_max - window.re_min) *
                                            (static_cast<double>(x) + 0.5) /
                                            static_cast<double>(width);
            Complex v = sp.eval(Complex(re, im));
            int q = v.real() >= 0.0 ? (v.imag() >= 0.0 ? 0 : 3) : (v.imag() >= 0.0 ? 1 : 2);
            row[static_cast<size_t>(x) * 3 + 0] = kQuadrantPalette[q][0];
            row[static_cast<size_t>(x) * 3 + 1] = kQuadrantPalette[q][1];
            row[static_cast<size_t>(x) * 3 + 2] = kQuadrantPalette[q][2];
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw PipelineError("quadrant_plot: write failed for " + path);
}

} // namespace hecke
