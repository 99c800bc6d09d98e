#include "mindswap/plan_document.hpp"

#include <algorithm>
#include <json.hpp>

#include "mindswap/keeler_two.hpp"
#include "mindswap/machine_m.hpp"
#include "mindswap/optimal_three.hpp"

namespace mindswap {

using Json = nlohmann::ordered_json;

VerificationSummary summarize(const VerificationReport& report) {
  VerificationSummary s;
  s.product_ok = report.product_ok;
  s.violations = report.violations;
  s.supports_distinct = std::none_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.kind == ViolationKind::DuplicateSupport;
  });
  s.outsider_in_every_move = std::none_of(report.violations.begin(), report.violations.end(),
                                          [](const Violation& v) { return v.kind == ViolationKind::NoOutsider; });
  return s;
}

RuleSet PlanDocument::rules() const {
  RuleSet r;
  r.machine_size = machine_size;
  r.outsiders = outsiders;
  return r;
}

namespace {

ViolationKind violation_kind(std::string_view name) {
  for (auto k : {ViolationKind::WrongSeatCount, ViolationKind::RepeatedSeat, ViolationKind::NoOutsider,
                 ViolationKind::DuplicateSupport, ViolationKind::OutsiderNotInPool})
    if (name == to_string(k)) return k;
  throw ParseError("unknown violation kind '" + std::string(name) + "'");
}

MachineMove parse_move(const std::string& text) {
  const auto groups = parse_cycle_groups(text);
  if (groups.size() != 1) throw ParseError("a move must be one parenthesized seat list: '" + text + "'");
  if (groups[0].size() < 2) throw ParseError("a move needs at least two seats: '" + text + "'");
  return MachineMove(groups[0]);
}

}  // namespace

std::string to_json(const PlanDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["machine_size"] = doc.machine_size;
  j["target"] = doc.target.format();
  Json outsiders = Json::array();
  for (const auto& e : doc.outsiders) outsiders.push_back(e.label());
  j["outsiders"] = outsiders;
  Json moves = Json::array();
  for (const auto& mv : doc.moves) moves.push_back(mv.format());
  j["moves"] = moves;
  Json meta;
  meta["solver"] = doc.solver;
  meta["step_count"] = doc.moves.size();
  meta["lower_bound"] = doc.lower_bound ? Json(*doc.lower_bound) : Json(nullptr);
  j["metadata"] = meta;
  if (doc.verification) {
    const auto& v = *doc.verification;
    Json ver;
    ver["product_ok"] = v.product_ok;
    ver["supports_distinct"] = v.supports_distinct;
    ver["outsider_in_every_move"] = v.outsider_in_every_move;
    Json list = Json::array();
    for (const auto& viol : v.violations)
      list.push_back(Json{{"move", viol.move_index}, {"kind", to_string(viol.kind)}, {"detail", viol.detail}});
    ver["violations"] = list;
    j["verification"] = ver;
  }
  return j.dump(2) + "\n";
}

PlanDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("plan document is not valid JSON: ") + e.what());
  }
  try {
    PlanDocument doc;
    if (!j.is_object()) throw ParseError("plan document must be a JSON object");
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kSchemaVersion)
      throw ParseError("unsupported schema_version " + std::to_string(doc.schema_version));
    doc.machine_size = j.at("machine_size").get<int>();
    if (doc.machine_size < 2) throw ParseError("machine_size must be at least 2");
    doc.target = parse_cycles(j.at("target").get<std::string>());
    for (const auto& label : j.at("outsiders")) {
      const auto e = parse_element(label.get<std::string>());
      if (!e.is_outsider()) throw ParseError("outsider list holds insider " + e.label());
      doc.outsiders.push_back(e);
    }
    for (const auto& mv : j.at("moves")) doc.moves.push_back(parse_move(mv.get<std::string>()));
    if (j.contains("metadata")) {
      const auto& meta = j.at("metadata");
      doc.solver = meta.value("solver", "");
      if (meta.contains("step_count") && meta.at("step_count").get<std::size_t>() != doc.moves.size())
        throw ParseError("metadata.step_count does not match the number of moves");
      if (meta.contains("lower_bound") && !meta.at("lower_bound").is_null())
        doc.lower_bound = meta.at("lower_bound").get<std::size_t>();
    }
    if (j.contains("verification")) {
      const auto& ver = j.at("verification");
      VerificationSummary v;
      v.product_ok = ver.at("product_ok").get<bool>();
      v.supports_distinct = ver.at("supports_distinct").get<bool>();
      v.outsider_in_every_move = ver.at("outsider_in_every_move").get<bool>();
      for (const auto& viol : ver.at("violations"))
        v.violations.push_back({viol.at("move").get<std::size_t>(),
                                violation_kind(viol.at("kind").get<std::string>()),
                                viol.value("detail", "")});
      doc.verification = std::move(v);
    }
    return doc;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed plan document: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed plan document: ") + e.what());
  }
}

void attach_verification(PlanDocument& doc) {
  doc.verification = summarize(verify_plan(doc.target, doc.moves, doc.rules()));
}

PlanDocument solve_document(const Permutation& target, int m, std::string_view solver) {
  if (m < 2) throw std::invalid_argument("machine size must be at least 2");
  std::string name(solver);
  if (name == "auto") name = m == 2 ? "keeler2" : m == 3 ? "optimal3" : "general_m";

  PlanDocument doc;
  doc.machine_size = m;
  doc.target = target;
  doc.solver = name;
  if (name == "keeler2") {
    if (m != 2) throw std::invalid_argument("keeler2 needs machine size 2");
    auto plan = solve_two_machine(target);
    doc.outsiders = {plan.x, plan.y};
    doc.moves = std::move(plan.moves);
  } else if (name == "optimal3") {
    if (m != 3) throw std::invalid_argument("optimal3 needs machine size 3");
    auto plan = solve_three_machine_optimal(target);
    doc.outsiders = {plan.x};
    doc.moves = std::move(plan.moves);
    doc.lower_bound = lower_bound(target);
  } else if (name == "general_m") {
    if (m < 3) throw std::invalid_argument("general_m needs machine size 3 or more");
    auto plan = solve_m_machine(target, m);
    doc.outsiders = plan.outsider_pool;
    doc.moves = std::move(plan.moves);
  } else {
    throw std::invalid_argument("unknown solver '" + name + "'");
  }
  attach_verification(doc);
  return doc;
}

}  // namespace mindswap
