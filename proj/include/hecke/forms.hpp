#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "hecke/hypergeom.hpp"

namespace hecke {

enum class FormKind { J, LittleJ, H4, H6, DeltaStar, DeltaDagger, DeltaDiamond };

std::string form_kind_name(FormKind kind); // "J", "j", "H4", "H6", "Dstar", ...
std::optional<FormKind> form_kind_from_name(const std::string& name);
Rational form_weight(FormKind kind); // 0 for J/j; 4, 6, 12-analogues

struct FormSeries {
    FormKind kind;
    long m;
    Rational weight;
    LaurentSeries series;
};

// Shared read-only provider of little-j expansions.  Computation happens on
// miss (under the lock, so concurrent callers see one deterministic value);
// an optional disk hook persists the widest expansion seen per m.
class SeriesStore {
  public:
    using DiskLoad = std::function<std::optional<LaurentSeries>(long m, long N)>;
    using DiskSave = std::function<void(long m, const LaurentSeries&)>;

    void attach_disk(DiskLoad load, DiskSave save);

    // j_m with alpha_n known for n < N (offset -1, order N)
    LaurentSeries little_j(long m, long N);

  private:
    std::mutex mu_;
    std::map<long, LaurentSeries> best_;
    DiskLoad load_;
    DiskSave save_;
};

// J_m as a series in the rescaled variable X: offset -1, leading coefficient
// 1, N known coefficients.
FormSeries J_series(long m, long N);

// j_m = W(2^6 m^3 x)/B: offset -1, leading 1, alpha_n exact for n < N.
FormSeries j_series(long m, long N, SeriesStore* store = nullptr);

// H_{4,m} = {j'^2 / (j (j - 2^6 m^3))}^{1/(m-2)}: constant term 1, order N.
FormSeries h4_series(long m, long N, SeriesStore* store = nullptr);

// H_{6,m} = K_{6,m}/eps: the inner series is pre-multiplied by (-1)^m and the
// positive (m-2)-th root taken, so everything stays rational.  Order N.
FormSeries h6_series(long m, long N, SeriesStore* store = nullptr);

// DeltaStar / DeltaDagger / DeltaDiamond: offset 1, order N.
FormSeries cusp_series(FormKind kind, long m, long N, SeriesStore* store = nullptr);

// dispatch over all seven kinds
FormSeries form_series(FormKind kind, long m, long N, SeriesStore* store = nullptr);

struct DimBounds {
    long entire;     // 1 + floor(k(1/4 - 1/(2m)) + gamma/4 - 1/4)
    long cusp_lower; // max(entire - 1, 0)
};

DimBounds dim_entire(long m, const Rational& k, int gamma);

} // namespace hecke
