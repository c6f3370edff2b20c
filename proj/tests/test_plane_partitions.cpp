#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "oracles.hpp"
#include "planepart/plane_partitions.hpp"

using namespace planepart;

namespace {

const long kFirstEleven[] = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};

std::string temp_path(const char* tag) {
    return std::string("planepart_test_") + tag + ".txt";
}

}  // namespace

TEST_CASE("pp(0..10) reference values", "[pp]") {
    PPTable t = pp_exact(10);
    for (std::size_t n = 0; n <= 10; ++n) REQUIRE(t(n) == kFirstEleven[n]);
}

TEST_CASE("pp(0) is the empty partition", "[pp]") {
    PPTable t = pp_exact(0);
    REQUIRE(t.size() == 0);
    REQUIRE(t(0) == 1);
}

TEST_CASE("pp agrees with the generating-function expansion up to 200", "[pp]") {
    auto series = oracles::euler_product_pp(200);
    PPTable t = pp_exact(200);
    for (std::size_t n = 0; n <= 200; ++n) REQUIRE(t(n) == series[n]);
    // frozen spot value from the expansion
    REQUIRE(t(20) == 75278);
}

TEST_CASE("recurrence identity holds at every index", "[pp]") {
    Sigma2Table sigma(500);
    PPTable t = pp_exact(500, sigma);
    REQUIRE(verify_recurrence(t, sigma));
}

TEST_CASE("pp is strictly increasing from n = 1", "[pp]") {
    PPTable t = pp_exact(500);
    REQUIRE(t(0) == t(1));
    for (std::size_t n = 1; n < 500; ++n) REQUIRE(t(n) < t(n + 1));
}

TEST_CASE("step bound pp(n+1) < 3 pp(n) with one equality", "[pp]") {
    PPTable t = pp_exact(1001);
    IneqReport r = check_step_bound(t, 1000);
    REQUIRE(r.entries().size() == 1000);
    REQUIRE(r.entries()[0].verdict == Verdict::EQUALITY);  // pp(2) = 3 pp(1)
    for (std::size_t i = 1; i < r.entries().size(); ++i)
        REQUIRE(r.entries()[i].verdict == Verdict::HOLDS);
    // pp(5) = 24 < 3 pp(4) = 39
    REQUIRE(t(5) == 24);
    REQUIRE(3 * t(4) == 39);
}

TEST_CASE("memory cap refuses oversized tables", "[pp]") {
    ResourceCaps caps;
    caps.memory_bytes = 1024;
    REQUIRE_THROWS_AS(pp_exact(100000, caps), resource_error);
}

TEST_CASE("cache round trip", "[pp]") {
    const std::string path = temp_path("roundtrip");
    PPTable t = pp_exact(10);
    save_table(t, path);

    SECTION("byte-exact header and LF endings") {
        std::ifstream in(path, std::ios::binary);
        std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        REQUIRE(all.rfind("# planepart-table v1\n# N=10\n# sigma2sha=", 0) == 0);
        REQUIRE(all.find('\r') == std::string::npos);
        REQUIRE(all.back() == '\n');
    }

    SECTION("load returns identical values") {
        PPTable back = load_table(path);
        REQUIRE(back.size() == 10);
        for (std::size_t n = 0; n <= 10; ++n) REQUIRE(back(n) == t(n));
    }
    std::remove(path.c_str());
}

TEST_CASE("cache loader rejects corruption, distinctly", "[pp]") {
    const std::string path = temp_path("corrupt");
    PPTable t = pp_exact(10);

    auto write_patched = [&](auto patch) {
        save_table(t, path);
        std::ifstream in(path, std::ios::binary);
        std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        patch(all);
        std::ofstream out(path, std::ios::binary);
        out << all;
    };

    SECTION("tampered digit at index 7 fails the recurrence spot check") {
        write_patched([](std::string& all) {
            // value lines start after the 3 header lines; index 7 holds 86
            auto pos = all.find("\n86\n");
            REQUIRE(pos != std::string::npos);
            all.replace(pos, 4, "\n87\n");
        });
        try {
            load_table(path);
            FAIL("expected CacheError");
        } catch (const CacheError& e) {
            REQUIRE(e.reason() == CacheError::Reason::SpotCheckFailed);
        }
    }

    SECTION("future version is a version error") {
        write_patched([](std::string& all) {
            all.replace(all.find("v1"), 2, "v999");
        });
        try {
            load_table(path);
            FAIL("expected CacheError");
        } catch (const CacheError& e) {
            REQUIRE(e.reason() == CacheError::Reason::BadVersion);
        }
    }

    SECTION("wrong sigma2 hash is a hash mismatch") {
        write_patched([](std::string& all) {
            auto pos = all.find("sigma2sha=");
            all[pos + 10] = all[pos + 10] == '0' ? '1' : '0';
        });
        try {
            load_table(path);
            FAIL("expected CacheError");
        } catch (const CacheError& e) {
            REQUIRE(e.reason() == CacheError::Reason::HashMismatch);
        }
    }

    SECTION("mangled magic line is a header error") {
        write_patched([](std::string& all) { all[2] = 'X'; });
        try {
            load_table(path);
            FAIL("expected CacheError");
        } catch (const CacheError& e) {
            REQUIRE(e.reason() == CacheError::Reason::BadHeader);
        }
    }

    SECTION("truncated value block is a header error") {
        write_patched([](std::string& all) { all.resize(all.size() - 5); });
        try {
            load_table(path);
            FAIL("expected CacheError");
        } catch (const CacheError& e) {
            REQUIRE(e.reason() == CacheError::Reason::BadHeader);
        }
    }

    std::remove(path.c_str());
}
