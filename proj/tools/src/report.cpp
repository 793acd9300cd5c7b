#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

#include "vortex/cli/cli.hpp"
#include "vortex/flips.hpp"
#include "vortex/strata.hpp"

namespace vortex::cli {

using nlohmann::json;

namespace {

constexpr const char* kBigIntMarker = "#bigint#";

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return std::string(kBigIntMarker) + v.str();
}

json poly(const IntPolynomial& p) {
  auto arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(big(c));
  return arr;
}

json poly_or_null(const std::optional<IntPolynomial>& p) { return p ? poly(*p) : json(nullptr); }

json rat(const Rational& r) { return r.to_string(); }

json wall_json(const Wall& w) { return {{"value", rat(w.value)}, {"kind", to_string(w.kind)}}; }

json sig_json(const StratumSignature& s) { return {{"d_phi", s.d_phi}, {"r_phi", s.r_phi}, {"ranks", s.ranks}}; }

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string error_type(const Error& e) {
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const NotDivisible*>(&e)) return "NotDivisible";
  if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
  if (dynamic_cast<const Unsupported*>(&e)) return "Unsupported";
  if (dynamic_cast<const Indeterminate*>(&e)) return "Indeterminate";
  if (dynamic_cast<const InternalError*>(&e)) return "InternalError";
  return "Error";
}

json input_echo(const ModuliInput& in) {
  return {{"R", in.rank},
          {"d", in.degree},
          {"g", in.genus},
          {"fixed_det", in.fixed_det},
          {"allow_low_degree", in.allow_low_degree}};
}

Wall resolve_wall(const ModuliInput& input, const Rational& value) {
  const auto found = find_wall(input, value);
  if (!found) throw InvalidInput(value.to_string() + " is not a critical value");
  return *found;
}

json chambers_payload(const ModuliInput& in) {
  json walls = json::array(), kinds = json::array(), chambers = json::array();
  for (const auto& w : critical_values(in)) {
    walls.push_back(rat(w.value));
    kinds.push_back(to_string(w.kind));
  }
  for (const auto& c : enumerate_chambers(in)) chambers.push_back({rat(c.lower), rat(c.upper)});
  const auto [lo, hi] = tau_line(in);
  return {{"walls", walls},
          {"wall_kinds", kinds},
          {"chambers", chambers},
          {"tau_line", {rat(lo), rat(hi)}},
          {"dim_moduli", dim_pairs_moduli(in)},
          {"dim_master", dim_master(in)}};
}

json strata_payload(const ModuliInput& in, const Wall& w) {
  const auto kept = enumerate_signatures(in, w, SignatureFilter::geometric);
  const auto all = enumerate_signatures(in, w, SignatureFilter::none);
  json sigs = json::array();
  for (const auto& s : kept) {
    const auto check = validate_signature(in, w, s);
    json entry = {{"signature", sig_json(s)},
                  {"label", s.to_string()},
                  {"valid", check.ok},
                  {"diagnostic", check.diagnostic},
                  {"summand_degrees", s.summand_degrees(w.value)},
                  {"dimension", nullptr},
                  {"codim_plus", nullptr},
                  {"codim_minus", nullptr}};
    if (w.kind == WallKind::interior && s.block_count() == 1) {
      entry["dimension"] = stratum_dimension(in, w, s);
      entry["codim_plus"] = codim_plus(in, w, s.ranks.front());
      entry["codim_minus"] = codim_minus(in, w, s.ranks.front());
    }
    sigs.push_back(entry);
  }
  json pruned = json::array();
  for (const auto& s : all) {
    if (std::find(kept.begin(), kept.end(), s) != kept.end()) continue;
    pruned.push_back({{"signature", sig_json(s)}, {"diagnostic", validate_signature(in, w, s).diagnostic}});
  }
  json payload = {{"wall", wall_json(w)}, {"signatures", sigs}, {"pruned_by_geometric_filter", pruned}};
  if (w.kind == WallKind::interior) {
    if (in.rank == 2) {
      const auto z = fixed_point_poincare(in, w);
      payload["fixed_point"] = {
          {"description", z.description}, {"dimension", opt(z.dimension)}, {"poincare", poly_or_null(z.poincare)}};
    }
  } else {
    const auto level = extreme_level(in, w.kind == WallKind::min ? LevelEnd::min : LevelEnd::max);
    payload["fixed_point"] = {
        {"description", level.description}, {"dimension", opt(level.dimension)}, {"poincare", nullptr}};
  }
  return payload;
}

json wall_report_payload(const ModuliInput& in, const Wall& w) {
  const auto rep = wall_report(in, w);
  json strata = json::array();
  for (const auto& s : rep.strata) {
    strata.push_back({{"signature", sig_json(s.signature)},
                      {"label", s.signature.to_string()},
                      {"dim_z", opt(s.dim_z)},
                      {"p_plus", opt(s.p_plus)},
                      {"p_minus", opt(s.p_minus)},
                      {"fiber_plus", opt(s.fiber_plus)},
                      {"fiber_minus", opt(s.fiber_minus)},
                      {"consistency_ok", opt(s.consistency_ok)},
                      {"note", s.note}});
  }
  return {{"wall", wall_json(rep.wall)},
          {"dim_master", rep.dim_master},
          {"strata", strata},
          {"smoothness_notes", rep.smoothness_notes}};
}

json endpoint_json(const EndpointModel& m) {
  return {{"base", m.base},
          {"fiber_dimension", m.fiber_dimension},
          {"base_dimension", opt(m.base_dimension)},
          {"total_dimension", opt(m.total_dimension)},
          {"description", m.description}};
}

json flip_chain_payload(const ModuliInput& in, std::vector<std::string>& warnings) {
  const auto chain = chamber_chain(in);
  const auto ends = endpoint_descriptors(in);
  json chambers = json::array(), deltas = json::array();
  for (const auto& step : chain.chambers) {
    chambers.push_back({{"lower", rat(step.chamber.lower)},
                        {"upper", rat(step.chamber.upper)},
                        {"poincare", poly(step.poincare)}});
  }
  for (const auto& d : chain.deltas) deltas.push_back({{"wall", wall_json(d.wall)}, {"delta", poly(d.delta)}});
  warnings.insert(warnings.end(), chain.warnings.begin(), chain.warnings.end());
  warnings.insert(warnings.end(), ends.warnings.begin(), ends.warnings.end());
  return {{"chambers", chambers},
          {"deltas", deltas},
          {"bottom_moduli_poincare", poly_or_null(chain.bottom_moduli_poincare)},
          {"endpoints",
           {{"bottom", endpoint_json(ends.bottom)},
            {"top", endpoint_json(ends.top)},
            {"coprime_gate", ends.coprime_gate},
            {"notes", ends.notes}}}};
}

json grading_json(const FormalPair& pair, Grading (*fn)(const FormalPair&)) {
  try {
    const auto g = fn(pair);
    return {{"signature", sig_json(g.signature)}, {"label", g.signature.to_string()}, {"wall", wall_json(g.wall)}};
  } catch (const Error& e) {
    return {{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
  }
}

Grading flow_up(const FormalPair& p) { return flow_limit(p, FlowDirection::up); }
Grading flow_down(const FormalPair& p) { return flow_limit(p, FlowDirection::down); }

FormalPair load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read pair file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("pair file is not valid JSON: ") + e.what());
  }
  return FormalPair::from(parse_formal_object(j));
}

json pair_payload(const FormalPair& pair) {
  json subs = json::array();
  for (const auto& s : visible_subobjects(pair)) {
    subs.push_back({{"rank", s.rank}, {"degree", s.degree}, {"contains_phi", s.contains_phi}, {"slope", rat(s.slope())}});
  }
  const auto iv = stability_interval(pair);
  json table = json::array();
  for (const auto& w : critical_values(pair.rank(), pair.degree())) {
    table.push_back({{"tau", rat(w.value)},
                     {"kind", to_string(w.kind)},
                     {"strict", is_tau_stable(pair, w.value, true)},
                     {"weak", is_tau_stable(pair, w.value, false)}});
  }
  const auto fp = fixed_point_wall(pair);
  return {{"pair", formal_object_to_json(pair.object)},
          {"pair_text", pair.object.to_string()},
          {"has_phi", pair.has_phi},
          {"visible_subobjects", subs},
          {"interval",
           {{"mu_plus", rat(iv.mu_plus)},
            {"mu_minus", iv.mu_minus ? rat(*iv.mu_minus) : json("inf")},
            {"stable", iv.stable},
            {"approximate", iv.approximate}}},
          {"stability", table},
          {"gr_minus", grading_json(pair, &gr_minus)},
          {"gr_plus", grading_json(pair, &gr_plus)},
          {"flow_up", grading_json(pair, &flow_up)},
          {"flow_down", grading_json(pair, &flow_down)},
          {"fixed_point_wall", fp ? wall_json(*fp) : json(nullptr)}};
}

json poincare_payload(const Command& cmd) {
  const int g = cmd.input.genus;
  const int n = cmd.poincare_n;
  switch (cmd.poincare_kind) {
    case PoincareKind::sym: return {{"kind", "sym"}, {"n", n}, {"g", g}, {"poincare", poly(sym_poincare(n, g))}};
    case PoincareKind::jac: return {{"kind", "jac"}, {"g", g}, {"poincare", poly(jac_poincare(g))}};
    case PoincareKind::proj: return {{"kind", "proj"}, {"n", n}, {"poincare", poly(proj_poincare(n))}};
  }
  return nullptr;
}

}  // namespace

Report run_command(const Command& cmd) {
  Report report;
  report.verb = to_string(cmd.verb);
  ModuliInput input = cmd.input;

  switch (cmd.verb) {
    case Verb::chambers: report.payload = chambers_payload(input); break;
    case Verb::strata: report.payload = strata_payload(input, resolve_wall(input, *cmd.wall)); break;
    case Verb::wall_report: report.payload = wall_report_payload(input, resolve_wall(input, *cmd.wall)); break;
    case Verb::flip_chain: report.payload = flip_chain_payload(input, report.warnings); break;
    case Verb::pair_eval: {
      const auto pair = load_pair(*cmd.pair_file);
      input.rank = pair.rank();
      input.degree = pair.degree();
      report.payload = pair_payload(pair);
      if (pair.object.has_nonsplit_ext()) {
        report.warnings.push_back("nonsplit extension: mu+/mu- are computed over the visible subobject lattice only");
      }
      break;
    }
    case Verb::poincare: report.payload = poincare_payload(cmd); break;
  }
  if (input.allow_low_degree && input.low_degree()) {
    report.warnings.insert(report.warnings.begin(), "d <= R(2g-2): outside the standing degree assumption");
  }
  report.input = input_echo(input);
  return report;
}

Report error_report(const Command& cmd, const Error& e) {
  Report report;
  report.verb = to_string(cmd.verb);
  report.input = input_echo(cmd.input);
  report.payload = {{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
  return report;
}

std::string render_json(const Report& report) {
  const json doc = {{"schema_version", kSchemaVersion},
                    {"verb", report.verb},
                    {"input", report.input},
                    {"payload", report.payload},
                    {"warnings", report.warnings}};
  static const std::regex marker("\"" + std::string(kBigIntMarker) + "(-?[0-9]+)\"");
  return std::regex_replace(doc.dump(2), marker, "$1") + "\n";
}

}  // namespace vortex::cli
