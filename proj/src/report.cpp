#include "report.hpp"

namespace kzk {

using nlohmann::json;

namespace {

json optional_dims(const std::vector<std::optional<std::size_t>>& dims) {
  json out = json::array();
  for (const auto& d : dims) out.push_back(d ? json(*d) : json(nullptr));
  return out;
}

}  // namespace

json koszul_json(const KoszulityReport& r) {
  json out;
  out["verdict"] = r.koszul_up_to_cutoff() ? "koszul-up-to-cutoff" : "not-koszul";
  out["cutoff"] = r.cutoff;
  out["homology_table"] = r.homology;
  if (r.witness) {
    out["witness"] = {{"internal_degree", r.witness->internal_degree},
                      {"homological_degree", r.witness->homological_degree},
                      {"dim", r.witness->dim}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json gldim_json(const GlobalDimension& g) {
  json out;
  out["verdict"] = g.finite ? "finite" : (g.infinite ? "infinite" : "exceeds-cap");
  out["value"] = g.finite ? json(g.dimension) : json(nullptr);
  out["vanishing_index"] = g.finite ? json(g.vanishing_index) : json(nullptr);
  return out;
}

json hilbert_json(const std::vector<std::size_t>& dims) { return dims; }

json poincare_json(const PoincareReport& r) {
  return {{"cutoff", r.cutoff},
          {"hilbert", r.hilbert},
          {"dual_poly", r.dual_poly},
          {"residual", r.residual},
          {"passed", r.passed}};
}

json gorenstein_json(const GorensteinReport& r) {
  json out;
  out["verdict"] = verdict_name(r.verdict);
  out["cutoff"] = r.cutoff;
  out["gldim"] = gldim_json(r.gldim);
  out["top_degree"] = r.top_q;
  out["koszul_verified"] = r.koszul_verified;
  out["warning"] = r.warning ? json(*r.warning) : json(nullptr);
  if (r.witness) {
    out["witness"] = {{"q", r.witness->q},
                      {"weight", r.witness->weight},
                      {"value_degree", r.witness->value_degree},
                      {"dim", r.witness->dim},
                      {"kind", r.witness->below_top ? "below-top" : "top-not-one-dimensional"}};
  } else {
    out["witness"] = nullptr;
  }
  json table = json::array();
  for (const auto& row : r.table) {
    table.push_back({{"weight", row.weight}, {"term_dims", row.term_dims}, {"dims", optional_dims(row.dims)}});
  }
  out["h_table"] = std::move(table);
  out["top_total"] = r.top_total;
  out["top_is_line"] = r.top_is_line;
  return out;
}

json transfer_json(const TransferReport& r) {
  json out;
  out["passed"] = r.passed;
  out["entries_compared"] = r.entries_compared;
  out["mismatch"] =
      r.mismatch ? json{{"q", r.mismatch->first}, {"weight", r.mismatch->second}} : json(nullptr);
  out["twisted_verdict"] = verdict_name(r.twisted.verdict);
  return out;
}

json twist_iso_json(const TwistIsoReport& r) {
  json out;
  out["passed"] = r.passed();
  out["cutoff"] = r.cutoff;
  out["duals_match"] = r.duals_match;
  out["invertible"] = r.invertible;
  out["chain_map"] = r.chain_map;
  out["homology_match"] = r.homology_match;
  out["bidegrees_checked"] = r.bidegrees_checked;
  if (r.failure) {
    out["failure"] = {{"m", r.failure->first}, {"i", r.failure->second}, {"kind", r.failure_kind}};
  } else {
    out["failure"] = nullptr;
  }
  out["homology"] = r.homology;
  out["twisted_homology"] = r.twisted_homology;
  return out;
}

json regularity_json(const RegularityReport& r, const std::string& element) {
  json out;
  out["element"] = element;
  out["side"] = r.side == Side::kRight ? "right" : "left";
  out["cutoff"] = r.cutoff;
  out["kernel_dims"] = r.kernel_dims;
  out["regular"] = r.regular();
  auto f = r.first_failure();
  out["first_failure"] = f ? json(*f) : json(nullptr);
  return out;
}

template <class F>
std::vector<std::string> relation_strings(const Presentation<F>& p) {
  std::vector<std::string> out;
  const std::string text = render_presentation(p);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end - start);
    if (line.rfind("rel ", 0) == 0) out.push_back(line.substr(4));
    start = end + 1;
  }
  return out;
}

template <class F>
json summary_json(const Presentation<F>& p, bool has_automorphism) {
  return {{"field", p.field().name()},
          {"gens", p.gens()},
          {"dim_e", p.dim_e()},
          {"degree", p.degree()},
          {"dim_r", p.relations().dim()},
          {"relations", relation_strings(p)},
          {"automorphism", has_automorphism},
          {"cap", p.cap()}};
}

template std::vector<std::string> relation_strings<Rational>(const Presentation<Rational>&);
template std::vector<std::string> relation_strings<PrimeField>(const Presentation<PrimeField>&);
template json summary_json<Rational>(const Presentation<Rational>&, bool);
template json summary_json<PrimeField>(const Presentation<PrimeField>&, bool);

}  // namespace kzk
