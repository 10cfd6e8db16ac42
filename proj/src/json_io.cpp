#include "mcc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mcc/error.hpp"

namespace mcc {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::vector<Point> points_from(const Json& j) {
  std::vector<Point> points;
  for (const auto& p : j) points.push_back(p.get<Point>());
  return points;
}

const char* kind_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::variable: return "variable";
    case GadgetKind::clause: return "clause";
    case GadgetKind::piece: return "piece";
  }
  return "?";
}

GadgetKind kind_from(const std::string& s) {
  if (s == "variable") return GadgetKind::variable;
  if (s == "clause") return GadgetKind::clause;
  if (s == "piece") return GadgetKind::piece;
  throw InvalidInput("unknown gadget kind '" + s + "'");
}

}  // namespace

Json election_to_json(const Election& election) {
  return Json{{"dim", election.dim},
              {"candidates", election.candidates},
              {"voters", election.voters}};
}

Election election_from_json(const Json& j) {
  Election e = guarded("instance", [&] {
    Election out;
    out.dim = j.at("dim").get<int>();
    out.candidates = points_from(j.at("candidates"));
    out.voters = points_from(j.at("voters"));
    return out;
  });
  validate(e);
  return e;
}

Json committee_to_json(const Committee& committee, int score) {
  return Json{{"k", committee.size()}, {"members", committee.members}, {"score", score}};
}

Json report_to_json(const SolveReport& report, bool include_timing) {
  Json j;
  j["algorithm"] = report.algorithm;
  j["committee"] = committee_to_json(report.committee, report.score);
  j["score"] = report.score;
  if (report.score_bound) j["score_bound"] = *report.score_bound;
  if (report.lower_bound) j["lower_bound"] = *report.lower_bound;
  Json params = Json::object();
  for (const auto& [key, value] : report.params) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  j["params"] = params;
  if (!report.voter_ratios.empty()) j["voter_ratios"] = report.voter_ratios;
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

SolveReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    SolveReport r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.committee.members = j.at("committee").at("members").get<std::vector<int>>();
    r.score = j.at("score").get<int>();
    if (j.contains("score_bound")) r.score_bound = j["score_bound"].get<int>();
    if (j.contains("lower_bound")) r.lower_bound = j["lower_bound"].get<int>();
    if (j.contains("params")) {
      for (const auto& [key, value] : j["params"].items()) {
        if (value.is_number_integer()) {
          r.params[key] = value.get<std::int64_t>();
        } else if (value.is_number()) {
          r.params[key] = value.get<double>();
        } else {
          r.params[key] = value.get<std::string>();
        }
      }
    }
    if (j.contains("voter_ratios")) r.voter_ratios = j["voter_ratios"].get<std::vector<double>>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
    return r;
  });
}

Json formula_to_json(const Pm3SatInstance& formula) {
  Json clauses = Json::array();
  for (const auto& c : formula.clauses) {
    clauses.push_back({{"vars", c.vars},
                       {"polarity", c.polarity == Polarity::positive ? "pos" : "neg"},
                       {"level", c.level}});
  }
  return Json{{"num_vars", formula.num_vars},
              {"var_order", formula.var_order},
              {"clauses", clauses}};
}

Pm3SatInstance formula_from_json(const Json& j) {
  Pm3SatInstance f = guarded("PM-3SAT", [&] {
    Pm3SatInstance out;
    out.num_vars = j.at("num_vars").get<int>();
    if (j.contains("var_order")) {
      out.var_order = j["var_order"].get<std::vector<int>>();
    } else {
      for (int v = 0; v < out.num_vars; ++v) out.var_order.push_back(v);
    }
    for (const auto& c : j.at("clauses")) {
      Clause clause;
      const auto vars = c.at("vars").get<std::vector<int>>();
      if (vars.size() != 3) throw InvalidInput("every clause needs exactly 3 variables");
      std::copy(vars.begin(), vars.end(), clause.vars.begin());
      const auto polarity = c.at("polarity").get<std::string>();
      if (polarity == "pos") {
        clause.polarity = Polarity::positive;
      } else if (polarity == "neg") {
        clause.polarity = Polarity::negative;
      } else {
        throw InvalidInput("clause polarity must be \"pos\" or \"neg\"");
      }
      clause.level = c.value("level", 1);
      out.clauses.push_back(clause);
    }
    return out;
  });
  validate(f);
  return f;
}

Json reduction_to_json(const ReductionOutput& reduction) {
  Json j = election_to_json(reduction.election);
  j["k"] = reduction.k;
  j["num_pieces"] = reduction.num_pieces;
  Json gadgets = Json::array();
  for (const auto& g : reduction.gadgets) {
    gadgets.push_back({{"kind", kind_name(g.kind)},
                       {"owner", g.owner},
                       {"offset", g.offset},
                       {"side", g.side},
                       {"variable", g.variable}});
  }
  j["gadgets"] = gadgets;
  j["formula"] = formula_to_json(reduction.formula);
  return j;
}

bool is_reduction_json(const Json& j) {
  return j.is_object() && j.contains("gadgets") && j.contains("formula");
}

ReductionOutput reduction_from_json(const Json& j) {
  ReductionOutput r;
  r.election = election_from_json(j);
  r.formula = formula_from_json(j.at("formula"));
  guarded("reduction", [&] {
    r.k = j.at("k").get<int>();
    r.num_pieces = j.at("num_pieces").get<int>();
    for (const auto& g : j.at("gadgets")) {
      r.gadgets.push_back(GadgetTag{kind_from(g.at("kind").get<std::string>()),
                                    g.at("owner").get<int>(), g.at("offset").get<double>(),
                                    g.at("side").get<int>(), g.at("variable").get<int>()});
    }
    return 0;
  });
  if (static_cast<int>(r.gadgets.size()) != r.election.num_candidates()) {
    throw InvalidInput("gadget side-table does not cover every point");
  }
  return r;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mcc
