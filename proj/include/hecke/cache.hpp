#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hecke/forms.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

// $HECKE_CACHE_DIR if set, else $HOME/.cache/hecke, else ./.hecke-cache.
std::filesystem::path default_cache_dir();

// Deterministic text serialization of a series (exact rationals as decimal
// numerator/denominator strings).  Two equal series always serialize to the
// same bytes, which is what makes --verify-cache a byte-level check.
std::string serialize_series(const LaurentSeries& s);
LaurentSeries deserialize_series(const std::string& text); // throws PipelineError

// One file per (pipeline version, form kind, m) holding the widest expansion
// seen; a lookup for order N is served by slicing any stored order >= N.
class SeriesCache {
  public:
    explicit SeriesCache(std::filesystem::path dir = default_cache_dir());

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(FormKind kind, long m) const;

    // Stored expansion sliced to order N, or nullopt on miss (including a
    // stored entry that is too narrow, a corrupt file, or a version skew).
    std::optional<LaurentSeries> load(FormKind kind, long m, long N) const;

    // Persist s if it is wider than the stored entry (no-op otherwise).
    void store(FormKind kind, long m, const LaurentSeries& s) const;

    // Wire this cache into a SeriesStore as its little-j disk hooks.
    void attach(SeriesStore& series_store) const;

    // Recompute every cached entry at its stored order and compare the
    // serialized bytes with the file contents.  Returns one message per
    // mismatching or unreadable file; empty means the cache is verified.
    std::vector<std::string> verify() const;

  private:
    std::filesystem::path dir_;
};

} // namespace hecke
