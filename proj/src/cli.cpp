#include "parasoc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parasoc/bribery.hpp"
#include "parasoc/cake.hpp"
#include "parasoc/circuit.hpp"
#include "parasoc/control.hpp"
#include "parasoc/dodgson.hpp"
#include "parasoc/election.hpp"
#include "parasoc/errors.hpp"
#include "parasoc/generate.hpp"
#include "parasoc/io.hpp"
#include "parasoc/kemeny.hpp"
#include "parasoc/mab.hpp"
#include "parasoc/rational.hpp"
#include "parasoc/structure.hpp"

namespace parasoc {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output schemas

const std::map<std::string, std::string, std::less<>>& schemas() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"winners", R"({"type":"object","required":["rule","scores","winners"],"properties":{
        "rule":{"type":"string"},
        "scores":{"type":"array","items":{"type":"integer"}},
        "winners":{"type":"array","items":{"type":"integer"}}}})"},
      {"kemeny", R"({"type":"object","required":["score","ranking"],"properties":{
        "score":{"type":"integer","minimum":0},
        "ranking":{"type":"array","items":{"type":"integer","minimum":0}},
        "within_budget":{"type":"boolean"},
        "avg_distance":{"type":"integer","minimum":0}}})"},
      {"dodgson", R"({"type":"object","properties":{
        "score":{"type":["integer","null"],"minimum":0},
        "within_budget":{"type":"boolean"},
        "scores":{"type":"array","items":{"type":"integer","minimum":0}},
        "winners":{"type":"array","items":{"type":"integer"}},
        "types":{"type":"array","items":{"type":"object","required":["order","multiplicity"],"properties":{
          "order":{"type":"array","items":{"type":"integer"}},
          "multiplicity":{"type":"integer","minimum":1}}}},
        "lifts":{"type":"array","items":{"type":"array","items":{"type":"integer","minimum":0}}}}})"},
      {"ccdv", R"({"type":"object","required":["solvable","deleted","relevant","irrelevant"],"properties":{
        "solvable":{"type":"boolean"},
        "deleted":{"type":["array","null"],"items":{"type":"integer"}},
        "relevant":{"type":"array","items":{"type":"integer"}},
        "irrelevant":{"type":"array","items":{"type":"integer"}},
        "reduced_voters":{"type":"integer","minimum":1}}})"},
      {"bribe", R"({"type":"object","required":["flavor","solvable","cost","actions"],"properties":{
        "flavor":{"type":"string","enum":["unit","priced","swap","shift"]},
        "solvable":{"type":"boolean"},
        "cost":{"type":["integer","null"],"minimum":0},
        "actions":{"type":"array","items":{"type":"object","required":["voter","order","cost"],"properties":{
          "voter":{"type":"integer","minimum":0},
          "order":{"type":"array","items":{"type":"integer"}},
          "swaps":{"type":"array","items":{"type":"array","items":{"type":"integer"}}},
          "shift":{"type":"integer","minimum":0},
          "cost":{"type":"integer","minimum":0}}}},
        "winners":{"type":"array","items":{"type":"integer"}}}})"},
      {"structure", R"({"type":"object","properties":{
        "single_peaked":{"type":"boolean"},
        "axis":{"type":["array","null"],"items":{"type":"integer"}},
        "single_peaked_wrt":{"type":"boolean"},
        "single_crossing":{"type":"boolean"},
        "max_crossings":{"type":"integer","minimum":0},
        "group_separable":{"type":"boolean"},
        "split":{"type":["array","null"],"items":{"type":"array","items":{"type":"integer"}}},
        "maverick_voters":{"type":"object","required":["distance","witness"],"properties":{
          "distance":{"type":"integer","minimum":0},
          "witness":{"type":"array","items":{"type":"integer"}}}},
        "maverick_alternatives":{"type":"object","required":["distance","witness"],"properties":{
          "distance":{"type":"integer","minimum":0},
          "witness":{"type":"array","items":{"type":"integer"}}}},
        "euclidean":{"type":"boolean"}}})"},
      {"mab", R"({"type":"object","properties":{
        "solvable":{"type":"boolean"},
        "set":{"type":["array","null"],"items":{"type":"integer"}},
        "k":{"type":"integer","minimum":0},
        "circuit":{"type":"string"},
        "num_variables":{"type":"integer","minimum":0},
        "weft":{"type":"integer","minimum":0},
        "depth":{"type":"integer","minimum":0}}})"},
      {"wcs", R"({"type":"object","required":["satisfiable","assignment","weft","depth"],"properties":{
        "satisfiable":{"type":"boolean"},
        "assignment":{"type":["array","null"],"items":{"type":"integer"}},
        "weft":{"type":"integer","minimum":0},
        "depth":{"type":"integer","minimum":0}}})"},
      {"cake", R"({"type":"object","properties":{
        "protocol":{"type":"string"},
        "exact":{"type":"boolean"},
        "pieces":{"type":"array","items":{"type":"array","items":{"type":"array","items":{"type":"string"}}}},
        "values":{"type":"array","items":{"type":"array","items":{"type":"string"}}},
        "epsilon":{"type":"string"},
        "proportional":{"type":"boolean"},
        "envy_free":{"type":"boolean"},
        "equitable":{"type":"boolean"},
        "equitable_equal_values":{"type":"boolean"},
        "utilitarian":{"type":"string"},
        "egalitarian":{"type":"string"},
        "x":{"type":"string"},
        "lower":{"type":"string"},
        "upper":{"type":"string"}}})"},
      {"gen", R"({"type":"object","required":["model","m","n","seed","election"],"properties":{
        "model":{"type":"string","enum":["impartial-culture","single-peaked","euclidean-1d"]},
        "m":{"type":"integer","minimum":1},
        "n":{"type":"integer","minimum":1},
        "seed":{"type":"integer","minimum":0},
        "election":{"type":"string"},
        "axis":{"type":"array","items":{"type":"integer"}},
        "embedding":{"type":"object","required":["dimension","alternatives","voters"],"properties":{
          "dimension":{"type":"integer","minimum":1},
          "alternatives":{"type":"array","items":{"type":"array","items":{"type":"string"}}},
          "voters":{"type":"array","items":{"type":"array","items":{"type":"string"}}}}}}})"},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Input helpers

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_all(f);
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

// Elections arrive as native text, PrefLib SOC, or the JSON object printed by `gen`.
Election load_election(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const Json j = parse_json(text, "election JSON");
    if (!j.contains("election") || !j["election"].is_string()) {
      throw InputError("JSON input lacks an \"election\" string");
    }
    return parse_election(j["election"].get<std::string>());
  }
  return parse_election_auto(text);
}

std::vector<int> parse_id_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    if (part.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw InputError(what + ": '" + part + "' is not an integer");
    }
  }
  return out;
}

Alternative require_alternative(const std::optional<int>& target, const Election& e) {
  if (!target) throw InputError("--target is required");
  if (*target < 0 || *target >= e.num_alternatives()) {
    throw InputError("--target " + std::to_string(*target) + " is out of range");
  }
  return *target;
}

Score json_score(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<Score>();
}

std::vector<Score> json_score_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<Score> out;
  for (const auto& x : j) out.push_back(json_score(x, what));
  return out;
}

Rational json_rational(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError(what + " must be an integer or a rational string");
}

std::vector<std::vector<Rational>> json_points(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<std::vector<Rational>> out;
  for (const auto& p : j) {
    if (!p.is_array()) throw InputError(what + " entries must be arrays");
    std::vector<Rational> coords;
    for (const auto& x : p) coords.push_back(json_rational(x, what));
    out.push_back(std::move(coords));
  }
  return out;
}

Json rational_points(const std::vector<std::vector<Rational>>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

ScoringVector make_rule(const std::string& rule, int m, int d, const std::string& vector) {
  if (rule == "plurality") return ScoringVector::plurality(m);
  if (rule == "borda") return ScoringVector::borda(m);
  if (rule == "approval") return ScoringVector::approval(m, d);
  if (rule == "vector") {
    std::vector<Score> alpha;
    for (int x : parse_id_list(vector, "--vector")) alpha.push_back(x);
    if (static_cast<int>(alpha.size()) != m) throw DimensionError("--vector must have m entries");
    return ScoringVector(std::move(alpha));
  }
  throw InputError("unknown rule '" + rule + "'");
}

void check_limit(int limit, int m) {
  if (limit > 0 && m > limit) {
    throw CapacityError("m = " + std::to_string(m) + " exceeds --limit-m " + std::to_string(limit));
  }
}

// ---------------------------------------------------------------------------
// Options

struct Options {
  std::string in;
  std::uint64_t seed = 0;
  bool unique_winner = false;
  int limit_m = 0;
  std::optional<std::int64_t> budget;
  std::optional<int> target;
  bool json_schema = false;

  std::string rule = "plurality";
  int d = 1;
  std::string vector;
  std::string method;
  bool stats = false;
  bool witness = false;
  std::string flavor = "unit";
  std::string prices;
  std::string check = "all";
  std::string axis;
  std::string voter_order;
  std::string embedding;
  std::optional<int> size;
  bool unanimous = false;
  bool encode = false;
  std::optional<int> k;
  std::string protocol;
  std::optional<std::string> cut_from;
  std::optional<std::string> value;
  int player = 0;
  std::string model = "impartial-culture";
  int m = 0;
  int n = 0;
  std::string format = "json";

  WinnerMode mode() const { return unique_winner ? WinnerMode::unique_winner : WinnerMode::co_winner; }
};

struct Outcome {
  Json result;
  int code = exit_success;
};

// ---------------------------------------------------------------------------
// Subcommands

Outcome run_winners(const Options& o, const Election& e) {
  const auto rule = make_rule(o.rule, e.num_alternatives(), o.d, o.vector);
  const auto r = scoring_winners(e, rule, o.mode());
  return {Json{{"rule", o.rule}, {"scores", r.scores}, {"winners", r.winners}}};
}

Outcome run_kemeny(const Options& o, const Election& e) {
  KemenyResult r = o.method == "brute"
                       ? kemeny_brute_force(e, o.limit_m > 0 ? o.limit_m : 8)
                       : kemeny_dp(e, o.limit_m > 0 ? o.limit_m : 24);
  Json j{{"score", r.score}, {"ranking", r.ranking.ranking()}};
  if (o.budget) j["within_budget"] = r.score <= *o.budget;
  if (o.stats) j["avg_distance"] = avg_pairwise_distance(e);
  return {std::move(j)};
}

Outcome run_dodgson(const Options& o, const Election& e) {
  check_limit(o.limit_m, e.num_alternatives());
  if (!o.target) {
    std::vector<std::int64_t> all;
    for (Alternative c = 0; c < e.num_alternatives(); ++c) all.push_back(dodgson_score(e, c).score);
    const auto best = *std::min_element(all.begin(), all.end());
    std::vector<int> winners;
    for (int c = 0; c < e.num_alternatives(); ++c) {
      if (all[c] == best) winners.push_back(c);
    }
    return {Json{{"scores", all}, {"winners", winners}}};
  }
  const Alternative c = require_alternative(o.target, e);
  const auto sol = dodgson_score(e, c);
  Json j;
  j["score"] = sol.feasible ? Json(sol.score) : Json(nullptr);
  if (o.budget) j["within_budget"] = sol.feasible && sol.score <= *o.budget;
  if (o.witness && sol.feasible) {
    const auto program = build_program(e, c);
    Json types = Json::array();
    for (const auto& t : program.types) {
      types.push_back(Json{{"order", t.order.ranking()}, {"multiplicity", t.multiplicity}});
    }
    j["types"] = std::move(types);
    j["lifts"] = sol.lifts;
  }
  return {std::move(j), sol.feasible ? exit_success : exit_no_solution};
}

Outcome run_ccdv(const Options& o, const Election& e) {
  if (!o.budget) throw InputError("--budget is required");
  if (o.limit_m > 0) check_limit(o.limit_m, e.num_alternatives());
  ControlInstance inst{e, o.d, require_alternative(o.target, e), static_cast<int>(*o.budget), o.mode()};
  validate(inst);
  const auto split = relevance_split(e, o.d, inst.p, inst.mode);
  const auto answer = o.method == "brute" ? ccdv_bruteforce(inst) : ccdv_fpt(inst);
  Json j{{"solvable", answer.has_value()},
         {"deleted", answer ? Json(*answer) : Json(nullptr)},
         {"relevant", split.relevant},
         {"irrelevant", split.irrelevant}};
  j["reduced_voters"] = reduce_instance(e, o.d, inst.p, inst.mode).num_voters();
  return {std::move(j), answer ? exit_success : exit_no_solution};
}

Outcome run_bribe(const Options& o, const Election& e) {
  if (!o.budget) throw InputError("--budget is required");
  const Alternative p = require_alternative(o.target, e);
  const auto rule = make_rule(o.rule, e.num_alternatives(), o.d, o.vector);
  const int max_m = o.limit_m > 0 ? o.limit_m : 6;
  std::optional<Json> prices;
  if (!o.prices.empty()) {
    std::ifstream f(o.prices, std::ios::binary);
    if (!f) throw InputError("cannot open '" + o.prices + "'");
    prices = parse_json(read_all(f), "--prices");
  }
  std::optional<BriberyPlan> plan;
  if (o.flavor == "unit" || o.flavor == "priced") {
    BriberyBudget b{*o.budget, std::nullopt};
    if (o.flavor == "priced" && prices) b.prices = json_score_list(*prices, "--prices");
    if (o.flavor == "unit" && prices) throw InputError("unit bribery takes no --prices");
    plan = unit_or_priced_bribery(e, rule, o.mode(), p, b, max_m);
  } else if (o.flavor == "swap") {
    SwapPrices sp = SwapPrices::unit(e.num_voters(), e.num_alternatives());
    if (prices) {
      if (!prices->is_array()) throw InputError("--prices must be an array of matrices");
      std::vector<PairPrices> per_voter;
      for (const auto& mat : *prices) {
        if (!mat.is_array()) throw InputError("--prices must be an array of matrices");
        PairPrices pp;
        for (const auto& row : mat) pp.push_back(json_score_list(row, "--prices"));
        per_voter.push_back(std::move(pp));
      }
      sp = SwapPrices(std::move(per_voter));
    }
    plan = swap_bribery(e, rule, o.mode(), p, sp, *o.budget, max_m);
  } else if (o.flavor == "shift") {
    ShiftPrices sp = ShiftPrices::linear(e, p);
    if (prices) {
      if (!prices->is_array()) throw InputError("--prices must be an array of arrays");
      std::vector<std::vector<Score>> per_voter;
      for (const auto& row : *prices) per_voter.push_back(json_score_list(row, "--prices"));
      sp = ShiftPrices(std::move(per_voter));
    }
    plan = shift_bribery(e, rule, o.mode(), p, sp, *o.budget);
  } else {
    throw InputError("unknown --flavor '" + o.flavor + "'");
  }
  Json j{{"flavor", o.flavor}, {"solvable", plan.has_value()}};
  j["cost"] = plan ? Json(plan->cost) : Json(nullptr);
  Json actions = Json::array();
  if (plan) {
    for (std::size_t v = 0; v < plan->actions.size(); ++v) {
      const auto& a = plan->actions[v];
      if (a.kind == VoterAction::Kind::unchanged) continue;
      Json entry{{"voter", v}, {"order", a.order.ranking()}};
      if (a.kind == VoterAction::Kind::swaps) {
        Json swaps = Json::array();
        for (const auto& [x, y] : a.swaps) swaps.push_back(Json::array({x, y}));
        entry["swaps"] = std::move(swaps);
      }
      if (a.kind == VoterAction::Kind::shift) entry["shift"] = a.shift;
      entry["cost"] = a.cost;
      actions.push_back(std::move(entry));
    }
  }
  j["actions"] = std::move(actions);
  if (plan) j["winners"] = scoring_winners(plan->result, rule, o.mode()).winners;
  return {std::move(j), plan ? exit_success : exit_no_solution};
}

Json deletion_json(const DeletionDistance& d) {
  return Json{{"distance", d.distance}, {"witness", d.witness}};
}

Outcome run_structure(const Options& o, const Election& e) {
  static const std::vector<std::string> known = {"all", "sp", "sc", "gs", "maverick", "altdel", "euclid"};
  if (std::find(known.begin(), known.end(), o.check) == known.end()) {
    throw InputError("unknown --check '" + o.check + "'");
  }
  const bool all = o.check == "all";
  const int max_m = o.limit_m > 0 ? o.limit_m : 10;
  Json j = Json::object();
  if (all || o.check == "sp") {
    if (!o.axis.empty()) {
      Axis axis{PreferenceOrder(parse_id_list(o.axis, "--axis"))};
      if (axis.order.size() != e.num_alternatives()) throw DimensionError("--axis must list all alternatives");
      j["single_peaked_wrt"] = is_single_peaked_wrt(e, axis);
    }
    const auto axis = find_single_peaked_axis(e, max_m);
    j["single_peaked"] = axis.has_value();
    j["axis"] = axis ? Json(axis->order.ranking()) : Json(nullptr);
  }
  if (all || o.check == "sc") {
    std::vector<int> order;
    if (o.voter_order.empty()) {
      for (int v = 0; v < e.num_voters(); ++v) order.push_back(v);
    } else {
      order = parse_id_list(o.voter_order, "--voter-order");
    }
    const auto r = single_crossing_report(e, order);
    j["single_crossing"] = r.single_crossing;
    j["max_crossings"] = r.max_crossings;
  }
  if (all || o.check == "gs") {
    const auto split = group_separable_split(e, o.limit_m > 0 ? o.limit_m : 20);
    j["group_separable"] = split.has_value();
    j["split"] = split ? Json::array({split->first, split->second}) : Json(nullptr);
  }
  if (all || o.check == "maverick") {
    j["maverick_voters"] = deletion_json(sp_deletion_distance(e, DeletionMode::voters, 10, o.limit_m > 0 ? o.limit_m : 8));
  }
  if (all || o.check == "altdel") {
    j["maverick_alternatives"] =
        deletion_json(sp_deletion_distance(e, DeletionMode::alternatives, 10, o.limit_m > 0 ? o.limit_m : 8));
  }
  if (o.check == "euclid" || (all && !o.embedding.empty())) {
    if (o.embedding.empty()) throw InputError("--embedding is required for --check euclid");
    std::ifstream f(o.embedding, std::ios::binary);
    if (!f) throw InputError("cannot open '" + o.embedding + "'");
    Json emb_json = parse_json(read_all(f), "--embedding");
    if (emb_json.contains("embedding")) emb_json = emb_json["embedding"];
    EuclideanEmbedding emb;
    emb.dimension = emb_json.value("dimension", 1);
    emb.alternatives = json_points(emb_json.value("alternatives", Json::array()), "alternatives");
    emb.voters = json_points(emb_json.value("voters", Json::array()), "voters");
    j["euclidean"] = verify_euclidean(e, emb);
  }
  return {std::move(j)};
}

Outcome run_mab(const Options& o, const std::string& text) {
  const MabInstance inst = parse_mab(text);
  if (o.encode) {
    if (!o.size) throw InputError("--encode needs --size");
    const Circuit c = mab_to_majority_circuit(inst, *o.size, o.unanimous);
    const auto mt = metrics(c);
    return {Json{{"k", *o.size},
                 {"circuit", write_circuit(c)},
                 {"num_variables", c.num_variables()},
                 {"weft", mt.weft},
                 {"depth", mt.depth}}};
  }
  const auto set = mab_solve(inst, o.size, o.unanimous, o.limit_m > 0 ? o.limit_m : 20);
  return {Json{{"solvable", set.has_value()}, {"set", set ? Json(*set) : Json(nullptr)}},
          set ? exit_success : exit_no_solution};
}

Outcome run_wcs(const Options& o, const std::string& text) {
  if (!o.k) throw InputError("--k is required");
  const Circuit c = parse_circuit(text);
  const auto mt = metrics(c);
  const auto sol = wcs_solve(c, *o.k);
  return {Json{{"satisfiable", sol.has_value()},
               {"assignment", sol ? Json(*sol) : Json(nullptr)},
               {"weft", mt.weft},
               {"depth", mt.depth}},
          sol ? exit_success : exit_no_solution};
}

Outcome run_cake(const Options& o, const std::string& text) {
  const auto densities = parse_densities(text);
  const int n = static_cast<int>(densities.size());
  if (o.cut_from || o.value) {
    if (!o.cut_from || !o.value) throw InputError("cut queries need both --cut-from and --value");
    if (o.player < 0 || o.player >= n) throw InputError("--player out of range");
    const auto r = cut_query(densities[o.player], parse_rational(*o.cut_from), parse_rational(*o.value));
    return {Json{{"x", to_string(r.x)}, {"lower", to_string(r.lower)}, {"upper", to_string(r.upper)}, {"exact", r.exact}}};
  }
  std::string protocol = o.protocol;
  if (protocol.empty()) protocol = n == 2 ? "cut-and-choose" : "last-diminisher";
  Division div;
  if (protocol == "cut-and-choose") {
    div = cut_and_choose(densities);
  } else if (protocol == "last-diminisher") {
    div = last_diminisher(densities);
  } else {
    throw InputError("unknown --protocol '" + protocol + "'");
  }
  const auto report = check_fairness(div, densities);
  Json pieces = Json::array();
  for (const auto& piece : div.pieces) {
    Json ivs = Json::array();
    for (const auto& iv : piece.intervals()) ivs.push_back(Json::array({to_string(iv.left), to_string(iv.right)}));
    pieces.push_back(std::move(ivs));
  }
  Json values = Json::array();
  for (const auto& row : report.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    values.push_back(std::move(r));
  }
  return {Json{{"protocol", protocol},
               {"exact", div.exact},
               {"pieces", std::move(pieces)},
               {"values", std::move(values)},
               {"epsilon", to_string(report.epsilon)},
               {"proportional", report.proportional},
               {"envy_free", report.envy_free},
               {"equitable", report.equitable},
               {"equitable_equal_values", report.equitable_equal_values},
               {"utilitarian", to_string(welfare(div, densities, WelfareKind::utilitarian))},
               {"egalitarian", to_string(welfare(div, densities, WelfareKind::egalitarian))}}};
}

Outcome run_gen(const Options& o, std::ostream& out, bool& printed) {
  const auto model = generator_model_from(o.model);
  if (!model) throw InputError("unknown --model '" + o.model + "'");
  GeneratorSpec spec{*model, o.m, o.n, o.seed, std::nullopt};
  if (!o.axis.empty()) spec.axis = Axis{PreferenceOrder(parse_id_list(o.axis, "--axis"))};
  const auto g = generate(spec);
  if (o.format == "text") {
    out << write_election(g.election);
    printed = true;
    return {};
  }
  if (o.format != "json") throw InputError("unknown --format '" + o.format + "'");
  Json j{{"model", std::string(to_string(*model))},
         {"m", o.m},
         {"n", o.n},
         {"seed", o.seed},
         {"election", write_election(g.election)}};
  if (g.axis) j["axis"] = g.axis->order.ranking();
  if (g.embedding) {
    j["embedding"] = Json{{"dimension", g.embedding->dimension},
                          {"alternatives", rational_points(g.embedding->alternatives)},
                          {"voters", rational_points(g.embedding->voters)}};
  }
  return {std::move(j)};
}

}  // namespace

std::vector<std::string> cli_subcommands() {
  return {"winners", "kemeny", "dodgson", "ccdv", "bribe", "structure", "mab", "wcs", "cake", "gen"};
}

std::string output_schema(std::string_view subcommand) {
  const auto& table = schemas();
  auto it = table.find(subcommand);
  if (it == table.end()) throw InputError("no schema for '" + std::string(subcommand) + "'");
  return Json::parse(it->second).dump();
}

int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  Options o;
  CLI::App app{"Parameterized computational social choice solvers", "parasoc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--in", o.in, "Input file; '-' or absent reads standard input");
  app.add_option("--seed", o.seed, "Seed for generators");
  app.add_flag("--unique-winner", o.unique_winner, "Require a unique winner instead of co-winners");
  app.add_option("--limit-m", o.limit_m, "Largest number of alternatives for exhaustive solvers");
  app.add_option("--budget", o.budget, "Budget k");
  app.add_option("--target", o.target, "Target alternative id");
  app.add_flag("--json-schema", o.json_schema, "Print the result schema and exit");

  auto* winners = app.add_subcommand("winners", "Scoring-rule scores and winners");
  auto* kemeny = app.add_subcommand("kemeny", "Kemeny consensus ranking");
  auto* dodgson = app.add_subcommand("dodgson", "Dodgson scores");
  auto* ccdv = app.add_subcommand("ccdv", "Constructive control by deleting voters under d-approval");
  auto* bribe = app.add_subcommand("bribe", "Bribery for scoring rules");
  auto* structure = app.add_subcommand("structure", "Preference domain restrictions");
  auto* mab = app.add_subcommand("mab", "Majority agenda acceptance (multiple referenda)");
  auto* wcs = app.add_subcommand("wcs", "Weighted circuit satisfiability");
  auto* cake = app.add_subcommand("cake", "Cake cutting protocols and cut queries");
  auto* gen = app.add_subcommand("gen", "Deterministic election generators");

  for (auto* sub : {winners, bribe}) {
    sub->add_option("--rule", o.rule, "plurality | borda | approval | vector");
    sub->add_option("--vector", o.vector, "Comma-separated scoring vector for --rule vector");
  }
  for (auto* sub : {winners, bribe, ccdv}) sub->add_option("--d", o.d, "Approval width");
  kemeny->add_option("--method", o.method, "dp | brute");
  kemeny->add_flag("--stats", o.stats, "Also report the average pairwise voter distance");
  dodgson->add_flag("--witness", o.witness, "Report the optimal lift vector");
  ccdv->add_option("--method", o.method, "fpt | brute");
  bribe->add_option("--flavor", o.flavor, "unit | priced | swap | shift");
  bribe->add_option("--prices", o.prices, "JSON file with voter prices");
  structure->add_option("--check", o.check, "sp | sc | gs | maverick | altdel | euclid | all");
  structure->add_option("--axis", o.axis, "Comma-separated axis to test");
  structure->add_option("--voter-order", o.voter_order, "Comma-separated voter order for single-crossing");
  structure->add_option("--embedding", o.embedding, "JSON embedding for --check euclid");
  mab->add_option("--size", o.size, "Exact agenda size k");
  mab->add_flag("--unanimous", o.unanimous, "Every voter must accept");
  mab->add_flag("--encode", o.encode, "Emit the majority-circuit encoding instead of solving");
  wcs->add_option("--k", o.k, "Weight of the satisfying assignment");
  cake->add_option("--protocol", o.protocol, "cut-and-choose | last-diminisher");
  cake->add_option("--cut-from", o.cut_from, "Cut query left end a");
  cake->add_option("--value", o.value, "Cut query value v");
  cake->add_option("--player", o.player, "Player answering the cut query");
  gen->add_option("--model", o.model, "impartial-culture | single-peaked | euclidean-1d");
  gen->add_option("--m", o.m, "Number of alternatives");
  gen->add_option("--n", o.n, "Number of voters");
  gen->add_option("--axis", o.axis, "Comma-separated axis for single-peaked");
  gen->add_option("--format", o.format, "json | text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_input_error;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    if (o.json_schema) {
      out << output_schema(name) << "\n";
      return exit_success;
    }
    Outcome outcome;
    bool printed = false;
    if (name == "gen") {
      outcome = run_gen(o, out, printed);
    } else {
      const std::string text = read_source(o.in, in);
      if (name == "mab") {
        outcome = run_mab(o, text);
      } else if (name == "wcs") {
        outcome = run_wcs(o, text);
      } else if (name == "cake") {
        outcome = run_cake(o, text);
      } else {
        const Election e = load_election(text);
        if (name == "winners") outcome = run_winners(o, e);
        else if (name == "kemeny") outcome = run_kemeny(o, e);
        else if (name == "dodgson") outcome = run_dodgson(o, e);
        else if (name == "ccdv") outcome = run_ccdv(o, e);
        else if (name == "bribe") outcome = run_bribe(o, e);
        else outcome = run_structure(o, e);
      }
    }
    if (!printed) out << outcome.result.dump() << "\n";
    return outcome.code;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return exit_capacity_error;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
}

}  // namespace parasoc
