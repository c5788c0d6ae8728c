#include "nosig/channel.hpp"
#include "nosig/hermitian_eigen.hpp"
#include "nosig/json_io.hpp"
#include "nosig/no_signaling.hpp"
#include "nosig/optics.hpp"
#include "nosig/scenario.hpp"
#include "nosig/state.hpp"

#include <json.hpp>
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

namespace py = pybind11;
using namespace nosig;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null:
        return py::none();
    case nlohmann::json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& e : j)
            out.append(json_to_py(e));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items())
            out[py::str(k)] = json_to_py(v);
        return out;
    }
    default:
        return py::none();
    }
}

ComplexMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("matrix rows must be nonempty");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.front().size());
    CVec data;
    data.reserve(static_cast<size_t>(r) * c);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, std::move(data));
}

std::vector<std::vector<Complex>> matrix_to_rows(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        rows[r].resize(m.cols());
        for (int c = 0; c < m.cols(); ++c)
            rows[r][c] = m(r, c);
    }
    return rows;
}

DimensionSpec dims_from_pairs(const std::vector<std::pair<std::string, int>>& parts) {
    return DimensionSpec(parts);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "no-signaling simulator core: complex linear algebra, Kraus channels, "
              "Choi positivity, optical networks and scenario runners";

    py::class_<ComplexMatrix>(m, "Matrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"))
        .def_property_readonly("rows", &ComplexMatrix::rows)
        .def_property_readonly("cols", &ComplexMatrix::cols)
        .def("tolist", &matrix_to_rows)
        .def("__repr__", [](const ComplexMatrix& a) {
            return "Matrix(" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")";
        });

    py::class_<PureState>(m, "PureState")
        .def_property_readonly("dims",
                               [](const PureState& s) { return s.dims.parts(); })
        .def_property_readonly("amplitudes",
                               [](const PureState& s) { return s.amplitudes; });

    m.def("identity", &ComplexMatrix::identity, py::arg("n"));
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("adjoint", &adjoint, py::arg("a"));
    m.def("hermitian_eigenvalues", &hermitian_eigenvalues, py::arg("m"),
          "All eigenvalues of a Hermitian matrix, ascending");
    m.def(
        "partial_trace",
        [](const ComplexMatrix& mat, const std::vector<std::pair<std::string, int>>& dims,
           const std::vector<std::string>& keep) {
            return partial_trace(mat, dims_from_pairs(dims), keep);
        },
        py::arg("m"), py::arg("dims"), py::arg("keep"));
    m.def("phase_aligned_max_diff", &phase_aligned_max_diff, py::arg("x"), py::arg("y"),
          "Largest amplitude gap after aligning the global phase");

    m.def("singlet", &singlet);
    m.def("greenberger_initial", &greenberger_initial);
    m.def("greenberger_predetector", &greenberger_predetector, py::arg("alpha"),
          py::arg("beta"));
    m.def("reconstruct_predetector", &reconstruct_predetector, py::arg("alpha"),
          py::arg("beta"), "Optical-network reconstruction of the pre-detector state");
    m.def(
        "greenberger_map",
        [](double gamma) { return greenberger_map(gamma).matrix; }, py::arg("gamma"),
        "The nonunitary shifter collapse |u> -> |u>, |v> -> e^{ig}|u>");

    m.def(
        "validate_channel",
        [](const std::vector<ComplexMatrix>& operators, const std::string& kind) {
            const ChannelKind k = kind == "deterministic" ? ChannelKind::deterministic
                                                          : ChannelKind::probabilistic;
            return json_to_py(channel_report_to_json(
                validate_channel(make_kraus_channel(operators, k))));
        },
        py::arg("operators"), py::arg("kind") = "deterministic");
    m.def(
        "choi_min_eigenvalue",
        [](const std::vector<ComplexMatrix>& operators) {
            return is_completely_positive(operators).min_choi_eigenvalue;
        },
        py::arg("operators"));
    m.def(
        "linearity_defect",
        [](const ComplexMatrix& t, const ComplexMatrix& rho1, const ComplexMatrix& rho2,
           double w) {
            DimensionSpec dims({{"X", rho1.rows()}});
            return linearity_test(t, make_density_operator(dims, rho1),
                                  make_density_operator(dims, rho2), w);
        },
        py::arg("t"), py::arg("rho1"), py::arg("rho2"), py::arg("w"),
        "Mixture-affineness defect of the normalized rule rho -> T rho T+ / tr");

    m.def(
        "marginal_obstruction",
        [](Complex a1, double gamma) {
            const double rest = 1.0 - std::norm(a1);
            const Complex a2 = std::sqrt(std::max(rest, 0.0));
            const ObstructionReport rep =
                marginal_obstruction(make_collapse_transform(a1, a2, gamma));
            py::dict out;
            out["marginal_distance"] = rep.marginal_distance;
            out["achievable_deterministically"] = rep.achievable_deterministically;
            out["note"] = rep.note;
            return out;
        },
        py::arg("a1"), py::arg("gamma"),
        "Remote-marginal obstruction for the collapse transform with weight a1");

    m.def(
        "fuzz_no_signaling",
        [](std::uint64_t seed, int trials, int dx, int dy) {
            return fuzz_no_signaling(seed, trials, DimensionSpec({{"X", dx}, {"Y", dy}}));
        },
        py::arg("seed"), py::arg("trials"), py::arg("dx") = 2, py::arg("dy") = 2,
        "Worst remote-marginal disturbance over random local channels");

    m.def(
        "run_greenberger",
        [](double alpha, double beta, double gamma) {
            return json_to_py(scenario_report_to_json(run_greenberger(alpha, beta, gamma)));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
    m.def(
        "run_epr_bohm",
        [](double gamma) { return json_to_py(scenario_report_to_json(run_epr_bohm(gamma))); },
        py::arg("gamma"));
    m.def(
        "run_stern_gerlach",
        [](double gamma) {
            return json_to_py(scenario_report_to_json(run_stern_gerlach(gamma)));
        },
        py::arg("gamma"));
    m.def(
        "run_erasure",
        [](std::optional<int> outcome) {
            const std::vector<ComplexMatrix> z_basis{
                ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}},
                ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}};
            return json_to_py(scenario_report_to_json(run_erasure(z_basis, outcome)));
        },
        py::arg("outcome") = py::none(),
        "Erasure scenario in the z basis; pass an outcome index for the selective form");

    m.attr("__version__") = "0.1.0";
}
