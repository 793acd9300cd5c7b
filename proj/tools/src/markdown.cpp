#include <sstream>

#include "vortex/cli/cli.hpp"

namespace vortex::cli {

using nlohmann::json;

namespace {

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number_integer(); })) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].dump();
    return out + "]";
  }
  return v.dump();
}

void table(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  os << "|";
  for (const auto& h : header) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : r) os << " " << c << " |";
    os << "\n";
  }
  os << "\n";
}

std::string grading_cell(const json& g) {
  if (g.contains("error")) return "error: " + g["error"]["message"].get<std::string>();
  return g["label"].get<std::string>() + " at " + g["wall"]["value"].get<std::string>();
}

void chambers_md(std::ostream& os, const json& p) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < p["walls"].size(); ++i) rows.push_back({cell(p["walls"][i]), cell(p["wall_kinds"][i])});
  os << "## Walls\n\n";
  table(os, {"tau", "kind"}, rows);
  rows.clear();
  for (const auto& c : p["chambers"]) rows.push_back({"(" + cell(c[0]) + ", " + cell(c[1]) + ")"});
  os << "## Chambers\n\n";
  table(os, {"chamber"}, rows);
  os << "dim moduli: " << p["dim_moduli"] << ", dim master: " << p["dim_master"] << "\n";
}

void strata_md(std::ostream& os, const json& p) {
  os << "## Strata at " << cell(p["wall"]["value"]) << " (" << cell(p["wall"]["kind"]) << ")\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : p["signatures"]) {
    rows.push_back({cell(s["label"]), cell(s["valid"]), cell(s["dimension"]), cell(s["codim_plus"]),
                    cell(s["codim_minus"]), s["diagnostic"].get<std::string>().empty() ? "-" : cell(s["diagnostic"])});
  }
  table(os, {"signature", "valid", "dim Z", "p+", "p-", "diagnostic"}, rows);
  if (!p["pruned_by_geometric_filter"].empty()) {
    rows.clear();
    for (const auto& s : p["pruned_by_geometric_filter"]) rows.push_back({cell(s["signature"]), cell(s["diagnostic"])});
    os << "### Pruned by the geometric filter\n\n";
    table(os, {"signature", "diagnostic"}, rows);
  }
  if (p.contains("fixed_point")) {
    const auto& z = p["fixed_point"];
    os << "fixed points: " << cell(z["description"]) << ", dimension " << cell(z["dimension"])
       << ", Poincare " << cell(z["poincare"]) << "\n";
  }
}

void wall_report_md(std::ostream& os, const json& p) {
  os << "## Wall " << cell(p["wall"]["value"]) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : p["strata"]) {
    rows.push_back({cell(s["label"]), cell(s["dim_z"]), cell(s["p_plus"]), cell(s["p_minus"]), cell(s["fiber_plus"]),
                    cell(s["fiber_minus"]), cell(s["consistency_ok"]), s["note"].get<std::string>()});
  }
  table(os, {"signature", "dim Z", "p+", "p-", "fiber+", "fiber-", "consistent", "note"}, rows);
  os << "dim master: " << p["dim_master"] << "\n";
  for (const auto& n : p["smoothness_notes"]) os << "- " << n.get<std::string>() << "\n";
}

void flip_chain_md(std::ostream& os, const json& p) {
  os << "## Chamber Poincare polynomials\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : p["chambers"]) rows.push_back({"(" + cell(c["lower"]) + ", " + cell(c["upper"]) + ")", cell(c["poincare"])});
  table(os, {"chamber", "coefficients"}, rows);
  rows.clear();
  for (const auto& d : p["deltas"]) rows.push_back({cell(d["wall"]["value"]), cell(d["delta"])});
  os << "## Deltas (below minus above)\n\n";
  table(os, {"wall", "delta"}, rows);
  os << "bottom moduli: " << cell(p["bottom_moduli_poincare"]) << "\n\n";
  const auto& e = p["endpoints"];
  os << "- bottom model: " << cell(e["bottom"]["description"]) << "\n";
  os << "- top model: " << cell(e["top"]["description"]) << "\n";
  os << "- coprimality gate: " << cell(e["coprime_gate"]) << "\n";
}

void pair_eval_md(std::ostream& os, const json& p) {
  os << "## Pair " << cell(p["pair_text"]) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : p["visible_subobjects"]) {
    rows.push_back({cell(s["rank"]), cell(s["degree"]), cell(s["contains_phi"]), cell(s["slope"])});
  }
  table(os, {"rank", "degree", "contains phi", "slope"}, rows);
  const auto& iv = p["interval"];
  os << "interval: (" << cell(iv["mu_plus"]) << ", " << cell(iv["mu_minus"]) << "), stable " << cell(iv["stable"])
     << ", approximate " << cell(iv["approximate"]) << "\n\n";
  rows.clear();
  for (const auto& r : p["stability"]) rows.push_back({cell(r["tau"]), cell(r["kind"]), cell(r["strict"]), cell(r["weak"])});
  table(os, {"tau", "kind", "stable", "semistable"}, rows);
  table(os, {"gr-", "gr+", "flow up", "flow down", "fixed point wall"},
        {{grading_cell(p["gr_minus"]), grading_cell(p["gr_plus"]), grading_cell(p["flow_up"]),
          grading_cell(p["flow_down"]), p["fixed_point_wall"].is_null() ? "-" : cell(p["fixed_point_wall"]["value"])}});
}

}  // namespace

std::string render_markdown(const Report& report) {
  std::ostringstream os;
  const auto& in = report.input;
  os << "# vortexcalc " << report.verb << "\n\n";
  os << "R = " << in["R"] << ", d = " << in["d"] << ", g = " << in["g"]
     << (in["fixed_det"].get<bool>() ? ", fixed determinant" : "") << "\n\n";
  const auto& p = report.payload;
  if (p.contains("error")) {
    os << "**error** (" << cell(p["error"]["type"]) << "): " << cell(p["error"]["message"]) << "\n";
  } else if (report.verb == "chambers") {
    chambers_md(os, p);
  } else if (report.verb == "strata") {
    strata_md(os, p);
  } else if (report.verb == "wall-report") {
    wall_report_md(os, p);
  } else if (report.verb == "flip-chain") {
    flip_chain_md(os, p);
  } else if (report.verb == "pair-eval") {
    pair_eval_md(os, p);
  } else {
    os << cell(p["kind"]) << ": " << cell(p["poincare"]) << "\n";
  }
  if (!report.warnings.empty()) {
    os << "\n## Warnings\n\n";
    for (const auto& w : report.warnings) os << "- " << w << "\n";
  }
  return os.str();
}

}  // namespace vortex::cli
