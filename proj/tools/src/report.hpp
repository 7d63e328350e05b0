#pragma once

#include <string>

#include <json.hpp>

#include "fgv/godbillon.hpp"
#include "fgv/oracle.hpp"

namespace fgv::cli {

/// "c_0 + eps (c_1) + eps^2 (c_2) ...", zero coefficients skipped.
std::string series_text(const EpsSeries<BivarPoly>& s);

nlohmann::json pairs_json(const FrancoiseSequence& seq);
nlohmann::json gv_pairs_json(const std::vector<GVPair>& pairs);
nlohmann::json length_json(const SequenceLength& len);
nlohmann::json samples_json(const std::vector<DisplacementSample>& samples);

}  // namespace fgv::cli
