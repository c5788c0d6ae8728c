#include "nosig/json_io.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace nosig;

TEST_CASE("wire formats round-trip") {
    auto gen = test_helpers::rng(71);

    SUBCASE("matrix") {
        const ComplexMatrix m = test_helpers::random_matrix(3, 2, gen);
        CHECK(max_abs_diff(matrix_from_json(matrix_to_json(m)), m) == 0.0);
    }

    SUBCASE("state") {
        const PureState s = greenberger_predetector(0.3, 1.7);
        const PureState back = state_from_json(state_to_json(s));
        CHECK(back.dims == s.dims);
        CHECK(phase_aligned_max_diff(back.amplitudes, s.amplitudes) == 0.0);
    }

    SUBCASE("channel") {
        const KrausChannel ch = random_deterministic_channel(2, 3, gen);
        const KrausChannel back = channel_from_json(channel_to_json(ch));
        CHECK(back.kind == ch.kind);
        REQUIRE(back.operators.size() == ch.operators.size());
        for (size_t i = 0; i < ch.operators.size(); ++i)
            CHECK(max_abs_diff(back.operators[i], ch.operators[i]) == 0.0);
    }

    SUBCASE("network") {
        const OpticalNetwork net = greenberger_detection_network();
        const OpticalNetwork back = network_from_json(network_to_json(net));
        REQUIRE(back.size() == net.size());
        const PureState probe = greenberger_source_state();
        CHECK(phase_aligned_max_diff(propagate_network(back, probe).amplitudes,
                                     propagate_network(net, probe).amplitudes) == 0.0);
    }
}

TEST_CASE("parsers reject malformed input") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 2}, {"cols", 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json{
            {"rows", 2}, {"cols", 1}, {"entries", {{1.0, 0.0}}}}),
        std::invalid_argument);

    nlohmann::json bad_kind = channel_to_json(
        make_kraus_channel({ComplexMatrix::identity(2)}, ChannelKind::deterministic));
    bad_kind["kind"] = "unitary";
    CHECK_THROWS_AS(channel_from_json(bad_kind), std::invalid_argument);

    nlohmann::json bad_dims = channel_to_json(
        make_kraus_channel({ComplexMatrix::identity(2)}, ChannelKind::deterministic));
    bad_dims["input_dim"] = 3;
    CHECK_THROWS_AS(channel_from_json(bad_dims), std::invalid_argument);

    CHECK_THROWS_AS(network_from_json(nlohmann::json::array(
                        {{{"element", "mirror"}, {"modes", {0}}}})),
                    std::invalid_argument);

    // non-normalized states fail on parse
    nlohmann::json state = state_to_json(singlet());
    state["amplitudes"][0] = {0.5, 0.0};
    CHECK_THROWS_AS(state_from_json(state), std::invalid_argument);
}

TEST_CASE("scenario report serialization carries every section") {
    const ScenarioReport r = run_epr_bohm(0.4);
    const nlohmann::json j = scenario_report_to_json(r);
    CHECK(j.at("name") == "epr-bohm");
    CHECK(j.at("pass") == true);
    CHECK(j.at("params").at("gamma") == doctest::Approx(0.4));
    CHECK(j.at("probabilities").contains("P(-1|map)"));
    CHECK(j.at("marginals").contains("remote_before"));
    CHECK(j.at("verdicts").at("certain_outcome_after_map") == true);

    // serialization is deterministic
    CHECK(j.dump() == scenario_report_to_json(run_epr_bohm(0.4)).dump());
}
