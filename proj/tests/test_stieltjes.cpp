#include "zetamoment/stieltjes.hpp"
#include "zetamoment/errors.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace zetamoment;

TEST_CASE("bundled table basic sanity") {
    StieltjesTable t = load_bundled(30);
    PrecisionGuard guard(t.precision_bits);
    CHECK(t.source == StieltjesTable::Source::bundled);
    CHECK(t.precision_bits >= 199); // >= 60 decimal digits
    CHECK(t.gamma(0) > BigReal(0.57));
    CHECK(t.gamma(0) < BigReal(0.58));
    CHECK(t.gamma(1) < 0); // gamma_1 ~ -0.0728
    CHECK_THROWS_AS(t.gamma(31), std::out_of_range);
    CHECK_THROWS_AS(load_bundled(10000), std::out_of_range);
}

TEST_CASE("internal computation cross-validates the bundle") {
    StieltjesTable t = load_bundled(10);
    PrecisionGuard guard(288);
    BigReal tol60 = BigReal("1e-60");
    CHECK(abs(compute_gamma(0, 256) - t.gamma(0)) < tol60);
    CHECK(abs(compute_gamma(1, 256) - t.gamma(1)) < tol60);
    BigReal tol30 = BigReal("1e-30");
    for (int n = 2; n <= 10; ++n)
        CHECK(abs(compute_gamma(n, 256) - t.gamma(n)) < tol30);
}

TEST_CASE("compute_table spans the requested range") {
    StieltjesTable t = compute_table(3, 128);
    CHECK(t.source == StieltjesTable::Source::computed);
    CHECK(t.values.size() == 4);
    PrecisionGuard guard(160);
    StieltjesTable b = load_bundled(3);
    for (int n = 0; n <= 3; ++n)
        CHECK(abs(t.gamma(n) - b.gamma(n)) < pow2(-100));
}

TEST_CASE("malformed bundle files are rejected") {
    auto write_tmp = [](const char* name, const char* body) {
        std::string path = std::string("/tmp/") + name;
        std::ofstream out(path, std::ios::trunc);
        out << body;
        return path;
    };
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_bundled(0, "/tmp/nonexistent-stieltjes.tsv"), data_error);
    }
    SUBCASE("gap in indices") {
        auto p = write_tmp("st_gap.tsv", "0\t0.577215\n2\t-0.009690\n");
        CHECK_THROWS_AS(load_bundled(2, p), data_error);
    }
    SUBCASE("unparsable value") {
        auto p = write_tmp("st_bad.tsv", "0\tnot-a-number\n");
        CHECK_THROWS_AS(load_bundled(0, p), data_error);
    }
}
