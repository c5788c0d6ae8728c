#include "nosig/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace nosig {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex entries must be [re, im] number pairs");
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("complex entries must be finite");
    return z;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field: ") + key);
    return j.at(key);
}

} // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const auto& z : m.entries())
        entries.push_back(complex_to_json(z));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const int rows = field(j, "rows").get<int>();
    const int cols = field(j, "cols").get<int>();
    const json& entries = field(j, "entries");
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("entry count does not match rows*cols");
    CVec data;
    data.reserve(entries.size());
    for (const auto& e : entries)
        data.push_back(complex_from_json(e));
    return ComplexMatrix(rows, cols, std::move(data));
}

json state_to_json(const PureState& s) {
    json dims = json::array();
    for (const auto& [label, d] : s.dims.parts())
        dims.push_back(json::array({label, d}));
    json amps = json::array();
    for (const auto& z : s.amplitudes)
        amps.push_back(complex_to_json(z));
    return json{{"dims", std::move(dims)}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const json& j) {
    const json& jdims = field(j, "dims");
    if (!jdims.is_array() || jdims.empty())
        throw std::invalid_argument("dims must be a nonempty array of [label, dim] pairs");
    std::vector<DimensionSpec::Part> parts;
    for (const auto& p : jdims) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
            throw std::invalid_argument("dims entries must be [label, dim] pairs");
        parts.emplace_back(p[0].get<std::string>(), p[1].get<int>());
    }
    const json& jamps = field(j, "amplitudes");
    if (!jamps.is_array())
        throw std::invalid_argument("amplitudes must be an array");
    CVec amps;
    amps.reserve(jamps.size());
    for (const auto& a : jamps)
        amps.push_back(complex_from_json(a));
    return make_pure_state(DimensionSpec(std::move(parts)), std::move(amps));
}

json channel_to_json(const KrausChannel& ch) {
    json ops = json::array();
    for (const auto& a : ch.operators)
        ops.push_back(matrix_to_json(a));
    return json{{"kind", ch.kind == ChannelKind::deterministic ? "deterministic" : "probabilistic"},
                {"input_dim", ch.input_dim},
                {"output_dim", ch.output_dim},
                {"operators", std::move(ops)}};
}

KrausChannel channel_from_json(const json& j) {
    const std::string kind_name = field(j, "kind").get<std::string>();
    ChannelKind kind;
    if (kind_name == "deterministic")
        kind = ChannelKind::deterministic;
    else if (kind_name == "probabilistic")
        kind = ChannelKind::probabilistic;
    else
        throw std::invalid_argument("channel kind must be deterministic or probabilistic");

    const json& jops = field(j, "operators");
    if (!jops.is_array() || jops.empty())
        throw std::invalid_argument("channel needs at least one operator");
    std::vector<ComplexMatrix> ops;
    for (const auto& o : jops)
        ops.push_back(matrix_from_json(o));
    KrausChannel ch = make_kraus_channel(std::move(ops), kind);
    if (ch.input_dim != field(j, "input_dim").get<int>() ||
        ch.output_dim != field(j, "output_dim").get<int>())
        throw std::invalid_argument("declared channel dimensions do not match the operators");
    return ch;
}

json network_to_json(const OpticalNetwork& net) {
    json out = json::array();
    for (const auto& el : net) {
        switch (el.kind) {
        case NetworkElement::Kind::bs:
            out.push_back(json{{"element", "bs"}, {"modes", {el.mode_a, el.mode_b}}});
            break;
        case NetworkElement::Kind::phase:
            out.push_back(
                json{{"element", "phase"}, {"modes", {el.mode_a}}, {"phase", el.phase}});
            break;
        case NetworkElement::Kind::cond_phase:
            out.push_back(
                json{{"element", "cond_phase"}, {"modes", {el.mode_a}}, {"phase", el.phase}});
            break;
        }
    }
    return out;
}

OpticalNetwork network_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("network must be an array of elements");
    OpticalNetwork net;
    for (const auto& e : j) {
        const std::string name = field(e, "element").get<std::string>();
        const json& modes = field(e, "modes");
        if (!modes.is_array())
            throw std::invalid_argument("element modes must be an array");
        if (name == "bs") {
            if (modes.size() != 2)
                throw std::invalid_argument("bs takes exactly two modes");
            net.push_back(bs_element(modes[0].get<int>(), modes[1].get<int>()));
        } else if (name == "phase" || name == "cond_phase") {
            if (modes.size() != 1)
                throw std::invalid_argument(name + " takes exactly one mode");
            const double phase = field(e, "phase").get<double>();
            if (!std::isfinite(phase))
                throw std::invalid_argument("element phase must be finite");
            net.push_back(name == "phase" ? phase_element(modes[0].get<int>(), phase)
                                          : cond_phase_element(modes[0].get<int>(), phase));
        } else {
            throw std::invalid_argument("unknown network element: " + name);
        }
    }
    return net;
}

json channel_report_to_json(const ChannelReport& report) {
    return json{{"trace_preserving", report.trace_preserving},
                {"sub_normalized", report.sub_normalized},
                {"completely_positive", report.completely_positive},
                {"min_choi_eigenvalue", report.min_choi_eigenvalue},
                {"completeness_residual", report.completeness_residual}};
}

json scenario_report_to_json(const ScenarioReport& report) {
    json marginals = json::object();
    for (const auto& [name, rho] : report.marginals)
        marginals[name] = matrix_to_json(rho.matrix);
    return json{{"name", report.name},
                {"params", report.params},
                {"probabilities", report.probabilities},
                {"marginals", std::move(marginals)},
                {"verdicts", report.verdicts},
                {"pass", all_verdicts_pass(report)}};
}

} // namespace nosig
