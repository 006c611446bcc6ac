#pragma once

#include <string>
#include <vector>

#include "qgsw/sweep.hpp"

namespace qgsw {

/// CSV with the fixed column order
/// case_index,lambda,t,l1,l2,l4,linf,u_l2,u_linf,xnorm,hipass_l2,annulus_l2.
std::string sweep_csv(const SweepReport& report);

/// Full nested report: {config, euler_reference, cases[], fits[]}.
std::string sweep_json(const SweepReport& report);

/// Parse the JSON back (round-trip of everything sweep_json writes).
SweepReport parse_sweep_json(const std::string& text);

/// One log-log plot with the fitted line for the named norm.
std::string sweep_svg(const SweepReport& report, const RateFit& fit);

/// Write CSV/JSON/SVG (formats subset of {"csv", "json", "svg"}) into dir;
/// returns the written paths.
std::vector<std::string> emit_report(const SweepReport& report, const std::string& dir,
                                     const std::vector<std::string>& formats);

std::string patch_study_csv(const PatchStudyReport& report);
std::string patch_study_json(const PatchStudyReport& report);

}  // namespace qgsw
