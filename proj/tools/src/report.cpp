#include "report.hpp"

namespace fgv::cli {

std::string series_text(const EpsSeries<BivarPoly>& s) {
  std::string out;
  for (unsigned i = 0; i <= s.order(); ++i) {
    if (s[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += s[i].to_string();
    } else {
      out += (i == 1 ? std::string("eps") : "eps^" + std::to_string(i)) + " (" + s[i].to_string() + ")";
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json pairs_json(const FrancoiseSequence& seq) {
  auto out = nlohmann::json::array();
  for (unsigned i = 1; i <= seq.size(); ++i) {
    out.push_back({{"i", i}, {"g", seq.pair(i).g().to_string()}, {"r", seq.pair(i).r().to_string()}});
  }
  return out;
}

nlohmann::json gv_pairs_json(const std::vector<GVPair>& pairs) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.push_back({{"i", i + 1}, {"G", pairs[i].G.to_string()}, {"R", pairs[i].R.to_string()}});
  }
  return out;
}

nlohmann::json length_json(const SequenceLength& len) {
  switch (len.kind) {
    case SequenceLength::Kind::finite:
      return {{"kind", "finite"}, {"value", len.value}};
    case SequenceLength::Kind::exceeds_max:
      return {{"kind", "exceeds_max_order"}, {"value", nullptr}};
    case SequenceLength::Kind::obstructed:
      break;
  }
  return {{"kind", "obstructed"}, {"value", nullptr}};
}

nlohmann::json samples_json(const std::vector<DisplacementSample>& samples) {
  auto out = nlohmann::json::array();
  for (const auto& s : samples) {
    out.push_back({{"t", s.t}, {"eps", s.eps}, {"delta", s.delta}, {"est_error", s.est_error}});
  }
  return out;
}

}  // namespace fgv::cli
