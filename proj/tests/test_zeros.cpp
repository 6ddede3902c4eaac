#include "zetamoment/zeros.hpp"
#include "zetamoment/errors.hpp"
#include "zetamoment/stieltjes.hpp"

#include <doctest.h>

#include <fstream>
#include <string>

using namespace zetamoment;

namespace {

std::string write_tmp(const char* name, const char* body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path, std::ios::trunc);
    out << body;
    return path;
}

std::string bundled_path() { return default_data_dir() + "/zeros.tsv"; }

} // namespace

TEST_CASE("bundled table loads and starts at the first zero") {
    ZeroTable t = load_zeros(bundled_path(), 9);
    REQUIRE(t.ordinates.size() >= 10000);
    PrecisionGuard guard(96);
    CHECK(abs(t.ordinates[0] - BigReal("14.134725141734693")) < BigReal("1e-8"));
    CHECK(t.count_below(BigReal(100)) == 29);
    CHECK(t.count_below(BigReal(14)) == 0);
}

TEST_CASE("parser contract") {
    SUBCASE("empty file is a valid empty table") {
        auto p = write_tmp("z_empty.txt", "# nothing but comments\n\n");
        ZeroTable t = load_zeros(p, 9);
        CHECK(t.ordinates.empty());
    }
    SUBCASE("out-of-order input names the offending line") {
        auto p = write_tmp("z_order.txt", "14.134725\n25.010858\n21.022040\n");
        try {
            load_zeros(p, 9);
            FAIL("expected data_error");
        } catch (const data_error& e) {
            CHECK(std::string(e.what()).find(":3") != std::string::npos);
        }
    }
    SUBCASE("duplicates are rejected") {
        auto p = write_tmp("z_dup.txt", "14.134725\n14.134725\n");
        CHECK_THROWS_AS(load_zeros(p, 9), data_error);
    }
    SUBCASE("unparsable line is rejected") {
        auto p = write_tmp("z_bad.txt", "14.134725\ntwenty-one\n");
        CHECK_THROWS_AS(load_zeros(p, 9), data_error);
    }
    SUBCASE("ordinates at or below 14 are rejected") {
        auto p = write_tmp("z_low.txt", "3.5\n14.134725\n");
        CHECK_THROWS_AS(load_zeros(p, 9), data_error);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_zeros("/tmp/no-such-zeros", 9), data_error); }
}

TEST_CASE("refinement drives |zeta| below the target") {
    EvalConfig cfg;
    cfg.precision_bits = 192;
    PrecisionGuard guard(cfg.precision_bits + 32);
    // 6-digit truncation of the first ordinate.
    BigReal refined = refine_zero(BigReal("14.1347"), cfg, 30);
    BigComplex z = zeta(BigComplex(BigReal(0.5), refined), cfg);
    CHECK(abs(z) < BigReal("1e-30"));
    CHECK(abs(refined - BigReal("14.13472514173469379045725198356247")) < BigReal("1e-28"));
}

TEST_CASE("count validation against the Riemann-von Mangoldt formula") {
    ZeroTable t = load_zeros(bundled_path(), 9);
    SUBCASE("below the first zero") {
        auto r = validate_count(t, BigReal(14));
        CHECK(r.counted == 0);
        CHECK_FALSE(r.flagged);
    }
    SUBCASE("clean prefixes stay within the tolerance") {
        for (double T : {100.0, 500.0, 1000.0, 5000.0, 9000.0}) {
            auto r = validate_count(t, BigReal(T));
            CHECK_FALSE(r.flagged);
            CHECK(std::abs(r.deviation) <= 2.0);
        }
    }
    SUBCASE("thinned table is flagged") {
        ZeroTable half;
        half.input_digits = t.input_digits;
        for (size_t i = 0; i < 2000; i += 2)
            half.ordinates.push_back(t.ordinates[i]);
        auto r = validate_count(half, half.ordinates.back() + 1);
        CHECK(r.flagged);
    }
}
