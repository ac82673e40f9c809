#include "hecke/forms.hpp"

namespace hecke {

namespace {

Rational scale_const(long m) { return Rational(64) * Rational(m) * Rational(m) * Rational(m); }

// j_m to the given truncation order (exponents -1 .. order-1), via reversion
// of Y in the small-height X normalization, rescaled at the very end.
LaurentSeries little_j_raw(long m, long order) {
    TriangleParams p = triangle_params(m);
    LaurentSeries Y = Y_series(p, order + 2);
    LaurentSeries R = Y.revert();
    LaurentSeries W = LaurentSeries::constant(1) / R; // offset -1
    Rational c = scale_const(m);
    return W.scale_argument(c) * c;
}

// U = j'^2 / (j (j - c)): constant term 1, known one exponent beyond j (the
// q^-2 leading terms cancel on both sides of the quotient).
LaurentSeries u_series(const LaurentSeries& j, const Rational& c) {
    LaurentSeries jp = j.qderiv();
    return (jp * jp) / (j * (j - LaurentSeries::constant(c)));
}

void check_invariants(const FormSeries& f) {
    const LaurentSeries& s = f.series;
    switch (f.kind) {
        case FormKind::J:
        case FormKind::LittleJ:
            if (s.offset() != -1 || s.leading() != 1)
                throw PipelineError("form invariant violated: j must start q^-1 with residue 1");
            break;
        case FormKind::H4:
        case FormKind::H6:
            if (s.offset() != 0 || s.leading() != 1)
                throw PipelineError("form invariant violated: H must have constant term 1");
            break;
        default:
            if (s.offset() != 1)
                throw PipelineError("form invariant violated: cusp form must vanish at the cusp");
    }
}

} // namespace

std::string form_kind_name(FormKind kind) {
    switch (kind) {
        case FormKind::J: return "J";
        case FormKind::LittleJ: return "j";
        case FormKind::H4: return "H4";
        case FormKind::H6: return "H6";
        case FormKind::DeltaStar: return "Dstar";
        case FormKind::DeltaDagger: return "Ddagger";
        case FormKind::DeltaDiamond: return "Ddiamond";
    }
    throw PipelineError("unknown form kind");
}

std::optional<FormKind> form_kind_from_name(const std::string& name) {
    for (FormKind k : {FormKind::J, FormKind::LittleJ, FormKind::H4, FormKind::H6,
                       FormKind::DeltaStar, FormKind::DeltaDagger, FormKind::DeltaDiamond})
        if (form_kind_name(k) == name) return k;
    return std::nullopt;
}

Rational form_weight(FormKind kind) {
    switch (kind) {
        case FormKind::J:
        case FormKind::LittleJ: return 0;
        case FormKind::H4: return 4;
        case FormKind::H6: return 6;
        default: return 12;
    }
}

void SeriesStore::attach_disk(DiskLoad load, DiskSave save) {
    std::lock_guard<std::mutex> lk(mu_);
    load_ = std::move(load);
    save_ = std::move(save);
}

LaurentSeries SeriesStore::little_j(long m, long N) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = best_.find(m);
    if (it != best_.end() && it->second.order() >= N) return it->second.truncated(N);
    if (load_) {
        if (auto disk = load_(m, N); disk && disk->order() >= N) {
            if (it == best_.end() || it->second.order() < disk->order())
                best_[m] = *disk;
            return disk->truncated(N);
        }
    }
    LaurentSeries fresh = little_j_raw(m, N);
    best_[m] = fresh;
    if (save_) save_(m, fresh);
    return fresh;
}

FormSeries J_series(long m, long N) {
    if (m < 3 || N < 1) throw PipelineError("J_series needs m >= 3, N >= 1");
    TriangleParams p = triangle_params(m);
    LaurentSeries Y = Y_series(p, N + 1);
    LaurentSeries W = LaurentSeries::constant(1) / Y.revert();
    FormSeries f{FormKind::J, m, form_weight(FormKind::J), W};
    check_invariants(f);
    return f;
}

FormSeries j_series(long m, long N, SeriesStore* store) {
    if (m < 3 || N < 1) throw PipelineError("j_series needs m >= 3, N >= 1");
    LaurentSeries s = store ? store->little_j(m, N) : little_j_raw(m, N);
    FormSeries f{FormKind::LittleJ, m, form_weight(FormKind::LittleJ), s};
    check_invariants(f);
    return f;
}

FormSeries h4_series(long m, long N, SeriesStore* store) {
    if (m < 3 || N < 1) throw PipelineError("h4_series needs m >= 3, N >= 1");
    LaurentSeries j = store ? store->little_j(m, N + 3) : little_j_raw(m, N + 3);
    LaurentSeries u = u_series(j, scale_const(m));
    LaurentSeries s = u.kth_root(static_cast<unsigned long>(m - 2)).truncated(N);
    FormSeries f{FormKind::H4, m, form_weight(FormKind::H4), s};
    check_invariants(f);
    return f;
}

FormSeries h6_series(long m, long N, SeriesStore* store) {
    if (m < 3 || N < 1) throw PipelineError("h6_series needs m >= 3, N >= 1");
    LaurentSeries j = store ? store->little_j(m, N + 3) : little_j_raw(m, N + 3);
    Rational c = scale_const(m);
    // j'^m / (j^{m-1} (j - c)) = U * (j'/j)^{m-2}: keeps every power small
    LaurentSeries v = j.qderiv() / j;
    LaurentSeries inner = u_series(j, c) * v.pow_trunc(static_cast<unsigned long>(m - 2));
    if (m % 2 == 1) inner = -inner; // the epsilon normalization
    LaurentSeries s = inner.kth_root(static_cast<unsigned long>(m - 2)).truncated(N);
    FormSeries f{FormKind::H6, m, form_weight(FormKind::H6), s};
    check_invariants(f);
    return f;
}

FormSeries cusp_series(FormKind kind, long m, long N, SeriesStore* store) {
    if (m < 3 || N < 1) throw PipelineError("cusp_series needs m >= 3, N >= 1");
    LaurentSeries s;
    switch (kind) {
        case FormKind::DeltaStar: {
            LaurentSeries j = store ? store->little_j(m, N + 3) : little_j_raw(m, N + 3);
            // Dstar^{m-2} = U^m j^{2-m}
            LaurentSeries inner =
                u_series(j, scale_const(m)).pow_trunc(static_cast<unsigned long>(m)) /
                j.pow_trunc(static_cast<unsigned long>(m - 2));
            s = inner.kth_root(static_cast<unsigned long>(m - 2)).truncated(N);
            break;
        }
        case FormKind::DeltaDagger: {
            LaurentSeries h4 = h4_series(m, N, store).series;
            LaurentSeries h6 = h6_series(m, N, store).series;
            s = h4.pow_trunc(3) - h6.pow_trunc(2);
            break;
        }
        case FormKind::DeltaDiamond: {
            LaurentSeries h4 = h4_series(m, N, store).series;
            LaurentSeries j = store ? store->little_j(m, N + 3) : little_j_raw(m, N + 3);
            s = (h4.pow_trunc(3) / j).truncated(N);
            break;
        }
        default:
            throw PipelineError("cusp_series: kind must be a cusp form");
    }
    FormSeries f{kind, m, form_weight(kind), s};
    check_invariants(f);
    return f;
}

FormSeries form_series(FormKind kind, long m, long N, SeriesStore* store) {
    switch (kind) {
        case FormKind::J: return J_series(m, N);
        case FormKind::LittleJ: return j_series(m, N, store);
        case FormKind::H4: return h4_series(m, N, store);
        case FormKind::H6: return h6_series(m, N, store);
        default: return cusp_series(kind, m, N, store);
    }
}

DimBounds dim_entire(long m, const Rational& k, int gamma) {
    if (m < 3) throw PipelineError("dim_entire needs m >= 3");
    if (gamma != 1 && gamma != -1) throw PipelineError("dim_entire: gamma must be +1 or -1");
    Rational v = k * (Rational(1, 4) - Rational(1, 2 * m)) + Rational(gamma, 4) - Rational(1, 4);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    long entire = 1 + static_cast<long>(fl.get_si());
    return {entire, entire > 1 ? entire - 1 : 0};
}

} // namespace hecke
