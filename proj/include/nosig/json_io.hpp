#pragma once

#include "nosig/channel.hpp"
#include "nosig/optics.hpp"
#include "nosig/scenario.hpp"
#include "nosig/state.hpp"

#include <json.hpp>

#include <string>

namespace nosig {

// Wire schemas, used by the CLI and the file formats:
//   matrix  {"rows": n, "cols": m, "entries": [[re, im], ...]}  (row-major)
//   state   {"dims": [["label", d], ...], "amplitudes": [[re, im], ...]}
//   channel {"kind": "deterministic"|"probabilistic", "input_dim": n,
//            "output_dim": m, "operators": [matrix, ...]}
//   network [{"element": "bs"|"phase"|"cond_phase", "modes": [...],
//             "phase": radians?}, ...]

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const PureState& s);
PureState state_from_json(const nlohmann::json& j);

nlohmann::json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json network_to_json(const OpticalNetwork& net);
OpticalNetwork network_from_json(const nlohmann::json& j);

nlohmann::json channel_report_to_json(const ChannelReport& report);
nlohmann::json scenario_report_to_json(const ScenarioReport& report);

} // namespace nosig
