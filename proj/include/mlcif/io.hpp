#pragma once

#include <string>
#include <vector>

#include "mlcif/family.hpp"
#include "mlcif/report.hpp"
#include "mlcif/weights.hpp"
#include "mlcif/young.hpp"

namespace mlcif {

/// "[2,4,5,12]" (sorted ascending).
std::string kset_to_json(const KSet& f);

/// Parses one family-per-line record {"k":2,"n":4,"boundary":[[1,4]]}.
Family family_from_jsonl(const std::string& line);

/// Reads a JSON-lines family file.
std::vector<Family> families_from_jsonl_file(const std::string& path);

/// Weight files: {"n":144,"dense":[...]} or
/// {"n":1620,"steps":[{"from":1,"value":0},{"from":3,"value":1}]}.
WeightFn weight_from_json_text(const std::string& text);
WeightFn weight_from_json_file(const std::string& path);
std::string weight_to_json(const WeightFn& w);

std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

/// Summary CSV: claim,k,n,samples,min_margin,status.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// CSV rows (m,n,j,p_j) for a rank table.
std::string ranks_to_csv(int m, int n, const std::vector<U128>& sizes);

std::string bounds_to_csv(const std::vector<BoundsRow>& rows);

std::string probe_to_csv(const ProbeReport& report);

}  // namespace mlcif
