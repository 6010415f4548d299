#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gorenstein.hpp"
#include "presentation_file.hpp"

namespace kzk {

// Stable machine-readable sections. Every number is an exact integer.

nlohmann::json koszul_json(const KoszulityReport& r);
nlohmann::json gldim_json(const GlobalDimension& g);
nlohmann::json hilbert_json(const std::vector<std::size_t>& dims);
nlohmann::json poincare_json(const PoincareReport& r);
nlohmann::json gorenstein_json(const GorensteinReport& r);
nlohmann::json transfer_json(const TransferReport& r);
nlohmann::json twist_iso_json(const TwistIsoReport& r);
nlohmann::json regularity_json(const RegularityReport& r, const std::string& element);

template <class F>
nlohmann::json summary_json(const Presentation<F>& p, bool has_automorphism);

// Relations of p rendered one per string, as in presentation files.
template <class F>
std::vector<std::string> relation_strings(const Presentation<F>& p);

}  // namespace kzk
