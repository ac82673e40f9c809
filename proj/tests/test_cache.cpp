#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "hecke/cache.hpp"
#include "hecke/errors.hpp"
#include "hecke/forms.hpp"
#include "hecke/version.hpp"

using namespace hecke;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& label) {
    fs::path p = fs::temp_directory_path() / ("hecke-cache-test-" + label);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("serialize / deserialize round-trips every series shape") {
    // inexact with negative offset (the little-j shape)
    LaurentSeries j = form_series(FormKind::LittleJ, 5, 6).series;
    CHECK(deserialize_series(serialize_series(j)) == j);

    // exact polynomial series
    LaurentSeries poly(0, {Rational(1), Rational(-3, 7), Rational(0), Rational(2)},
                       LaurentSeries::kOrderInf);
    CHECK(poly.exact());
    CHECK(deserialize_series(serialize_series(poly)) == poly);

    // exact monomial with negative exponent
    LaurentSeries mono = LaurentSeries::monomial(Rational(-5, 3), -2);
    CHECK(deserialize_series(serialize_series(mono)) == mono);

    // zeros, exact and inexact
    CHECK(deserialize_series(serialize_series(LaurentSeries())) == LaurentSeries());
    LaurentSeries zero7 = LaurentSeries::zero(7);
    CHECK(deserialize_series(serialize_series(zero7)) == zero7);
}

TEST_CASE("serialization is deterministic across recomputation") {
    LaurentSeries a = form_series(FormKind::H4, 7, 9).series;
    LaurentSeries b = form_series(FormKind::H4, 7, 9).series;
    CHECK(serialize_series(a) == serialize_series(b));
}

TEST_CASE("deserialize rejects malformed payloads") {
    LaurentSeries j = form_series(FormKind::LittleJ, 4, 4).series;
    std::string good = serialize_series(j);

    CHECK_THROWS_AS(deserialize_series("nonsense"), PipelineError);
    CHECK_THROWS_AS(deserialize_series(""), PipelineError);

    std::string bad_version = good;
    bad_version.replace(bad_version.find(kPipelineVersion), std::string(kPipelineVersion).size(),
                        "0.0.0");
    CHECK_THROWS_AS(deserialize_series(bad_version), PipelineError);

    std::string truncated = good.substr(0, good.size() - 4);
    CHECK_THROWS_AS(deserialize_series(truncated), PipelineError);

    std::string trailing = good + "extra\n";
    CHECK_THROWS_AS(deserialize_series(trailing), PipelineError);
}

TEST_CASE("store / load with slice reuse") {
    SeriesCache cache(scratch_dir("storeload"));
    LaurentSeries wide = form_series(FormKind::LittleJ, 6, 8).series;
    cache.store(FormKind::LittleJ, 6, wide);

    // exact slice
    auto full = cache.load(FormKind::LittleJ, 6, 8);
    REQUIRE(full.has_value());
    CHECK(*full == wide);

    // narrower request served from the same entry
    auto narrow = cache.load(FormKind::LittleJ, 6, 5);
    REQUIRE(narrow.has_value());
    CHECK(*narrow == wide.truncated(5));

    // wider request is a miss
    CHECK_FALSE(cache.load(FormKind::LittleJ, 6, 9).has_value());
    // other key coordinates are misses
    CHECK_FALSE(cache.load(FormKind::LittleJ, 7, 4).has_value());
    CHECK_FALSE(cache.load(FormKind::H4, 6, 4).has_value());
}

TEST_CASE("store keeps the widest entry and ignores narrower rewrites") {
    SeriesCache cache(scratch_dir("widest"));
    LaurentSeries wide = form_series(FormKind::LittleJ, 9, 7).series;
    cache.store(FormKind::LittleJ, 9, wide);
    std::string bytes_before = slurp(cache.entry_path(FormKind::LittleJ, 9));

    cache.store(FormKind::LittleJ, 9, wide.truncated(3));
    CHECK(slurp(cache.entry_path(FormKind::LittleJ, 9)) == bytes_before);

    LaurentSeries wider = form_series(FormKind::LittleJ, 9, 10).series;
    cache.store(FormKind::LittleJ, 9, wider);
    auto reread = cache.load(FormKind::LittleJ, 9, 10);
    REQUIRE(reread.has_value());
    CHECK(*reread == wider);
}

TEST_CASE("corrupt entries read as misses and are overwritten") {
    SeriesCache cache(scratch_dir("corrupt"));
    LaurentSeries j = form_series(FormKind::LittleJ, 5, 5).series;
    cache.store(FormKind::LittleJ, 5, j);
    fs::path p = cache.entry_path(FormKind::LittleJ, 5);
    {
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        out << "garbage";
    }
    CHECK_FALSE(cache.load(FormKind::LittleJ, 5, 3).has_value());
    cache.store(FormKind::LittleJ, 5, j); // must overwrite the garbage
    auto back = cache.load(FormKind::LittleJ, 5, 5);
    REQUIRE(back.has_value());
    CHECK(*back == j);
}

TEST_CASE("attach wires a SeriesStore to disk") {
    fs::path dir = scratch_dir("attach");
    {
        SeriesCache cache(dir);
        SeriesStore store;
        cache.attach(store);
        store.little_j(8, 6); // computes and persists
        CHECK(fs::exists(cache.entry_path(FormKind::LittleJ, 8)));
    }
    {
        // a fresh store must serve from disk: doctor the cached file at a
        // wider order and check the doctored coefficient comes back
        SeriesCache cache(dir);
        LaurentSeries real = form_series(FormKind::LittleJ, 8, 9).series;
        std::vector<Rational> c;
        for (long n = real.offset(); n < 9; ++n) c.push_back(real.coefficient(n));
        c[3] += 1; // corrupts alpha_2
        LaurentSeries doctored(real.offset(), std::move(c), 9);
        fs::path p = cache.entry_path(FormKind::LittleJ, 8);
        std::ofstream(p, std::ios::binary | std::ios::trunc) << serialize_series(doctored);

        SeriesStore store;
        cache.attach(store);
        LaurentSeries got = store.little_j(8, 9);
        CHECK(got == doctored);
        CHECK(got.coefficient(2) == real.coefficient(2) + 1);
    }
}

TEST_CASE("verify recomputes byte-identically and flags tampering") {
    fs::path dir = scratch_dir("verify");
    SeriesCache cache(dir);
    SeriesStore store;
    cache.attach(store);
    store.little_j(4, 6);
    store.little_j(5, 4);
    cache.store(FormKind::H4, 5, form_series(FormKind::H4, 5, 5).series);

    CHECK(cache.verify().empty());

    // tamper with one coefficient: same shape, different bytes
    fs::path p = cache.entry_path(FormKind::LittleJ, 5);
    std::string bytes = slurp(p);
    size_t pos = bytes.rfind("/1\n");
    REQUIRE(pos != std::string::npos);
    bytes.replace(pos, 3, "/2\n");
    std::ofstream(p, std::ios::binary | std::ios::trunc) << bytes;

    auto problems = cache.verify();
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("littlej-m5") != std::string::npos);
    CHECK(problems[0].find("differ") != std::string::npos);

    // unrecognized file names are reported, not crashed on
    std::ofstream(dir / (std::string("v") + kPipelineVersion) / "mystery.series") << "x";
    CHECK(cache.verify().size() == 2);
}

TEST_CASE("default cache dir honors HECKE_CACHE_DIR") {
    const char* saved = std::getenv("HECKE_CACHE_DIR");
    std::string saved_copy = saved ? saved : "";
    setenv("HECKE_CACHE_DIR", "/some/override", 1);
    CHECK(default_cache_dir() == fs::path("/some/override"));
    if (saved)
        setenv("HECKE_CACHE_DIR", saved_copy.c_str(), 1);
    else
        unsetenv("HECKE_CACHE_DIR");
}
