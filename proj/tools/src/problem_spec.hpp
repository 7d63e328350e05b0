#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgv/abelian.hpp"
#include "fgv/exterior.hpp"

namespace fgv::cli {

/// Bad input: unreadable file, malformed JSON, unparsable polynomial, wrong F.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemSpec {
  std::string name;
  std::string F_text = "x^2 + y^2";
  std::string dx_text = "0";
  std::string dy_text = "0";
  OvalFamily family = OvalFamily::circles();
  RatForm1 omega;
  /// Set when both coefficients are polynomials; the symbolic commands
  /// need it.
  std::optional<PolyForm1> poly_omega;
  unsigned max_order = 8;
  std::vector<double> t_samples;
  std::vector<double> eps_samples;
  unsigned oracle_orders = 1;
  /// Optional expectations checked by verify-all.
  nlohmann::json expect;

  const PolyForm1& polynomial_omega() const;
};

/// Builds a spec from the informal JSON schema
/// {"F", "omega": {"dx", "dy"}, "max_order", "oracle": {"t", "eps", "orders"}, "expect"}.
ProblemSpec spec_from_json(const nlohmann::json& doc, std::string name = {});

/// Reads a JSON file ("-" reads stdin).
ProblemSpec load_spec(const std::string& path);

/// Builds a spec from inline texts.
ProblemSpec spec_from_texts(const std::string& F, const std::string& dx, const std::string& dy);

/// "0.25,0.5" -> {0.25, 0.5}.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace fgv::cli
