#include "hecke/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/version.hpp"

namespace hecke {

namespace {

// Filesystem slug per kind.  Deliberately not form_kind_name(): "J" and "j"
// must not collide on a case-insensitive filesystem.
std::string kind_slug(FormKind kind) {
    switch (kind) {
        case FormKind::J: return "bigj";
        case FormKind::LittleJ: return "littlej";
        case FormKind::H4: return "h4";
        case FormKind::H6: return "h6";
        case FormKind::DeltaStar: return "delta-star";
        case FormKind::DeltaDagger: return "delta-dagger";
        case FormKind::DeltaDiamond: return "delta-diamond";
    }
    throw PipelineError("cache: unknown form kind");
}

std::optional<FormKind> kind_from_slug(const std::string& slug) {
    for (FormKind k : {FormKind::J, FormKind::LittleJ, FormKind::H4, FormKind::H6,
                       FormKind::DeltaStar, FormKind::DeltaDagger, FormKind::DeltaDiamond})
        if (kind_slug(k) == slug) return k;
    return std::nullopt;
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return buf.str();
}

void write_file_atomically(const std::filesystem::path& p, const std::string& bytes) {
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw PipelineError("cache: cannot open " + tmp.string() + " for writing");
        out << bytes;
        if (!out.good()) throw PipelineError("cache: short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw PipelineError(std::string("cache: malformed ") + what + " field '" + s + "'");
    }
}

} // namespace

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("HECKE_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "hecke";
    return std::filesystem::path(".hecke-cache");
}

std::string serialize_series(const LaurentSeries& s) {
    std::ostringstream out;
    out << "hecke-series v1\n";
    out << "pipeline " << kPipelineVersion << "\n";
    out << "offset " << s.offset() << "\n";
    if (s.exact())
        out << "order exact\n";
    else
        out << "order " << s.order() << "\n";
    // known_len() is the stored range for inexact series and the (finite)
    // support for exact ones; coefficient() reads both the same way.
    long count = s.is_zero() ? 0 : s.known_len();
    out << "coeffs " << count << "\n";
    for (long i = 0; i < count; ++i) {
        const Rational& c = s.coefficient(s.offset() + i);
        out << num_str(c) << "/" << den_str(c) << "\n";
    }
    return out.str();
}

LaurentSeries deserialize_series(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next = [&](const char* what) {
        if (!std::getline(in, line)) throw PipelineError(std::string("cache: truncated before ") + what);
        return line;
    };
    if (next("magic") != "hecke-series v1") throw PipelineError("cache: bad magic line");
    std::string pipeline = next("pipeline");
    if (pipeline != std::string("pipeline ") + kPipelineVersion)
        throw PipelineError("cache: pipeline version mismatch: " + pipeline);
    std::string off_line = next("offset");
    if (off_line.rfind("offset ", 0) != 0) throw PipelineError("cache: missing offset line");
    long offset = parse_long(off_line.substr(7), "offset");
    std::string ord_line = next("order");
    if (ord_line.rfind("order ", 0) != 0) throw PipelineError("cache: missing order line");
    std::string ord_text = ord_line.substr(6);
    long order = ord_text == "exact" ? LaurentSeries::kOrderInf : parse_long(ord_text, "order");
    std::string cnt_line = next("coeffs");
    if (cnt_line.rfind("coeffs ", 0) != 0) throw PipelineError("cache: missing coeffs line");
    long count = parse_long(cnt_line.substr(7), "coeffs");
    if (count < 0 || count > (1 << 22)) throw PipelineError("cache: implausible coefficient count");
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        std::string c = next("coefficient");
        size_t slash = c.find('/');
        if (slash == std::string::npos) throw PipelineError("cache: coefficient without '/'");
        coeffs.push_back(rational_from_strings(c.substr(0, slash), c.substr(slash + 1)));
    }
    if (std::getline(in, line) && !line.empty())
        throw PipelineError("cache: trailing bytes after coefficients");
    if (order < LaurentSeries::kOrderInf && order - offset != count)
        throw PipelineError("cache: coefficient count does not match [offset, order)");
    if (count == 0)
        return LaurentSeries::zero(order);
    return LaurentSeries(offset, std::move(coeffs), order);
}

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SeriesCache::entry_path(FormKind kind, long m) const {
    return dir_ / (std::string("v") + kPipelineVersion) /
           (kind_slug(kind) + "-m" + std::to_string(m) + ".series");
}

std::optional<LaurentSeries> SeriesCache::load(FormKind kind, long m, long N) const {
    auto bytes = read_file(entry_path(kind, m));
    if (!bytes) return std::nullopt;
    try {
        LaurentSeries s = deserialize_series(*bytes);
        if (s.order() < N) return std::nullopt;
        return s.truncated(N);
    } catch (const PipelineError&) {
        return std::nullopt; // corrupt entries read as misses, never as data
    }
}

void SeriesCache::store(FormKind kind, long m, const LaurentSeries& s) const {
    std::filesystem::path p = entry_path(kind, m);
    if (auto bytes = read_file(p)) {
        try {
            if (deserialize_series(*bytes).order() >= s.order()) return;
        } catch (const PipelineError&) {
            // corrupt entry: fall through and overwrite
        }
    }
    std::filesystem::create_directories(p.parent_path());
    write_file_atomically(p, serialize_series(s));
}

void SeriesCache::attach(SeriesStore& series_store) const {
    SeriesCache self = *this;
    series_store.attach_disk(
        [self](long m, long N) { return self.load(FormKind::LittleJ, m, N); },
        [self](long m, const LaurentSeries& s) { self.store(FormKind::LittleJ, m, s); });
}

std::vector<std::string> SeriesCache::verify() const {
    std::vector<std::string> problems;
    std::filesystem::path root = dir_ / (std::string("v") + kPipelineVersion);
    if (!std::filesystem::exists(root)) return problems;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(root))
        if (entry.is_regular_file() && entry.path().extension() == ".series")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        std::string name = p.stem().string(); // <slug>-m<NNN>
        size_t dash = name.rfind("-m");
        auto complain = [&](const std::string& why) { problems.push_back(p.string() + ": " + why); };
        if (dash == std::string::npos) {
            complain("unrecognized file name");
            continue;
        }
        auto kind = kind_from_slug(name.substr(0, dash));
        if (!kind) {
            complain("unrecognized form kind");
            continue;
        }
        long m = 0;
        try {
            m = parse_long(name.substr(dash + 2), "m");
        } catch (const PipelineError&) {
            complain("unrecognized m");
            continue;
        }
        auto bytes = read_file(p);
        if (!bytes) {
            complain("unreadable");
            continue;
        }
        try {
            LaurentSeries stored = deserialize_series(*bytes);
            if (stored.exact() || stored.order() < 1) {
                complain("stored entry is not a truncated pipeline series");
                continue;
            }
            // recompute with no cache attached: an honest from-scratch run
            FormSeries fresh = form_series(*kind, m, stored.order(), nullptr);
            std::string expect = serialize_series(fresh.series);
            if (expect != *bytes)
                complain("bytes differ from recomputation at order " + std::to_string(stored.order()));
        } catch (const PipelineError& e) {
            complain(e.what());
        }
    }
    return problems;
}

} // namespace hecke
