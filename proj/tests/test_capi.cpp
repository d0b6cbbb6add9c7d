#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "oscbasis.h"

static std::string dataPath(const char* name) { return std::string(TEST_DATA_DIR) + "/" + name; }

TEST_CASE("load, info, check through the C surface") {
    char err[256] = {0};
    osc_manifold* m = osc_manifold_from_file(dataPath("fig8.tri").c_str(), err, sizeof err);
    REQUIRE(m != nullptr);

    char* out = nullptr;
    REQUIRE(osc_info_json(m, &out) == OSC_OK);
    auto info = nlohmann::json::parse(out);
    CHECK(info["tetCount"] == 2);
    CHECK(info["edgeCount"] == 2);
    CHECK(info["eulerIdentityHolds"] == true);
    osc_string_free(out);

    int allPassed = 0;
    REQUIRE(osc_check_json(m, 0, 16, &out, &allPassed) == OSC_OK);
    CHECK(allPassed == 1);
    osc_string_free(out);

    int ends = 0;
    REQUIRE(osc_end_count(m, &ends) == OSC_OK);
    CHECK(ends == 1);
    REQUIRE(osc_svg(m, 0, &out) == OSC_OK);
    CHECK(std::strstr(out, "<svg") != nullptr);
    osc_string_free(out);

    CHECK(osc_svg(m, 5, &out) == OSC_ERR_INPUT);
    CHECK(std::string(osc_last_error(m)).find("end id") != std::string::npos);

    REQUIRE(osc_sy_csv(m, &out) == OSC_OK);
    CHECK(std::strstr(out, "C_E1") != nullptr);
    osc_string_free(out);

    REQUIRE(osc_solve_json(m, &out) == OSC_OK);
    auto sol = nlohmann::json::parse(out);
    CHECK(sol["allBasisRowsZero"] == true);
    osc_string_free(out);

    osc_manifold_free(m);
}

TEST_CASE("errors surface as codes and messages") {
    char err[256] = {0};
    osc_manifold* m = osc_manifold_from_file("/nonexistent/foo.tri", err, sizeof err);
    CHECK(m == nullptr);
    CHECK(std::strlen(err) > 0);

    std::memset(err, 0, sizeof err);
    m = osc_manifold_from_text("1\n0:1023 0:1023 - -\n", 0, err, sizeof err);
    CHECK(m == nullptr);
    CHECK(std::string(err).find("unglued") != std::string::npos);

    // disconnected input parses but has no connected basis
    const char* two = "4\n"
                      "1:2301 1:3021 1:0312 1:0123\n"
                      "0:1320 0:0231 0:2301 0:0123\n"
                      "3:2301 3:3021 3:0312 3:0123\n"
                      "2:1320 2:0231 2:2301 2:0123\n";
    m = osc_manifold_from_text(two, 0, err, sizeof err);
    REQUIRE(m != nullptr);
    char* out = nullptr;
    CHECK(osc_info_json(m, &out) == OSC_OK);
    osc_string_free(out);
    CHECK(osc_basis_json(m, &out) == OSC_ERR_INPUT);
    osc_manifold_free(m);
}
