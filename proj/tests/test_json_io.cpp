#include <doctest.h>

#include <cstring>
#include <json.hpp>
#include <ubkit/json_io.hpp>
#include <ubkit/rng.hpp>

#include "support.hpp"

using namespace ubkit;
using namespace ubtest;

TEST_SUITE_BEGIN("json");

TEST_CASE("save/load round-trips amplitudes bit-exactly") {
    RandomStream rng(51, 0);
    const SystemShape shape({2, 3});
    const StateSet original = random_set(shape, 4, rng);
    const StateSet loaded = state_set_from_json_text(state_set_to_json_text(original));
    REQUIRE(loaded.size() == original.size());
    CHECK(loaded.shape() == original.shape());
    for (int k = 0; k < original.size(); ++k) {
        CHECK(loaded.at(k).label() == original.at(k).label());
        const Vec& a = original.at(k).amplitudes();
        const Vec& b = loaded.at(k).amplitudes();
        REQUIRE(a.size() == b.size());
        CHECK(std::memcmp(a.data(), b.data(),
                          sizeof(cplx) * static_cast<std::size_t>(a.size())) == 0);
    }
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(state_set_from_json_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(state_set_from_json_text("[1,2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(state_set_from_json_text(R"({"format_version":"2","shape":[2]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(state_set_from_json_text(R"({"format_version":"1"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        state_set_from_json_text(
            R"({"format_version":"1","shape":[2],"states":[{"amplitudes":[[1,0],[0,0],[0,0]]}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        state_set_from_json_text(
            R"({"format_version":"1","shape":[2],"states":[{"amplitudes":[[1,0],"x"]}]})"),
        std::invalid_argument);
}

TEST_CASE("norm policy on load") {
    auto doc_with_scale = [](double scale) {
        nlohmann::json j;
        j = nlohmann::json::parse(R"({"format_version":"1","shape":[2],"states":[]})");
        nlohmann::json s;
        s["label"] = "s";
        s["amplitudes"] = nlohmann::json::array(
            {nlohmann::json::array({scale, 0.0}), nlohmann::json::array({0.0, 0.0})});
        j["states"].push_back(s);
        return j.dump();
    };

    std::vector<std::string> warnings;
    const StateSet clean = state_set_from_json_text(doc_with_scale(1.0), &warnings);
    CHECK(warnings.empty());
    CHECK(clean.at(0).amplitudes()(0) == cplx(1.0));

    const StateSet slightly_off = state_set_from_json_text(doc_with_scale(1.0 + 1e-7),
                                                           &warnings);
    CHECK(warnings.size() == 1);
    CHECK(std::abs(slightly_off.at(0).amplitudes().norm() - 1.0) < 1e-12);

    CHECK_THROWS_WITH_AS(state_set_from_json_text(doc_with_scale(1.001)),
                         doctest::Contains("unit norm"), std::invalid_argument);
}

TEST_CASE("unknown keys are ignored and labels are preserved") {
    const std::string text = R"({
      "format_version": "1",
      "shape": [2],
      "analysis": {"extra": true},
      "states": [{"label": "plus", "amplitudes": [[0.7071067811865476, 0],
                                                  [0.7071067811865476, 0]],
                  "note": "ignored"}]
    })";
    const StateSet set = state_set_from_json_text(text);
    CHECK(set.at(0).label() == "plus");

    const std::string duplicate = R"({
      "format_version": "1",
      "shape": [2],
      "states": [{"label": "a", "amplitudes": [[1, 0], [0, 0]]},
                 {"label": "a", "amplitudes": [[0, 0], [1, 0]]}]
    })";
    CHECK_THROWS_WITH_AS(state_set_from_json_text(duplicate), doctest::Contains("duplicate"),
                         std::invalid_argument);
}

TEST_SUITE_END();
