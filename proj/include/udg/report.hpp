#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "udg/constants.hpp"
#include "udg/probability.hpp"
#include "udg/threshold.hpp"
#include "udg/u_regime.hpp"

namespace udg::harness {

nlohmann::json to_json(const Interval& i);
nlohmann::json to_json(const ProbabilityEstimate& e);
nlohmann::json to_json(const ThresholdEstimate& e);
nlohmann::json to_json(const URegimeResult& r);
nlohmann::json to_json(const TheoryConstants& t);

/// Single-estimate report: {"config": config, "result": result}, indented, newline-terminated.
void write_json_report(std::ostream& out, const nlohmann::json& config, const nlohmann::json& result);

/// "# config: <json>" line, then n,p,frac_yes,frac_no,frac_unknown,ci_lo,ci_hi
/// where the interval is the Wilson interval of frac_yes.
void write_curve_csv(std::ostream& out, const nlohmann::json& config, const std::vector<ProbabilityEstimate>& rows);

/// "# config: <json>" line, then n,p,d,k_hat,count,fraction,exact per histogram bin.
void write_u_histogram_csv(std::ostream& out, const nlohmann::json& config, const std::vector<URegimeResult>& rows);

}  // namespace udg::harness
