#include "ppgrowth/serialize.hpp"

#include "ppgrowth/error.hpp"

namespace ppgrowth {

json to_json(const ElementaryMove& move, int rank) {
  auto gen = [rank](int g) { return format_letter(Letter::positive(g), rank); };
  return std::visit(
      [&](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Substitute>) {
          return {{"sub", format_move(m, rank)}};
        } else if constexpr (std::is_same_v<T, Invert>) {
          return {{"inv", gen(m.generator)}};
        } else {
          std::string sep = rank > 7 ? " " : "";
          return {{"swap", gen(m.first) + sep + gen(m.second)}};
        }
      },
      move);
}

ElementaryMove move_from_json(const json& j, int rank) {
  if (!j.is_object() || j.size() != 1) throw Error(ErrorKind::ParseError, "move must be a one-key object");
  const auto& [key, value] = *j.items().begin();
  if (!value.is_string()) throw Error(ErrorKind::ParseError, "move value must be a string");
  const std::string text = value.get<std::string>();
  ElementaryMove move;
  if (key == "sub") {
    move = parse_move(text, rank);
    if (!std::holds_alternative<Substitute>(move)) throw Error(ErrorKind::InvalidMove, "'sub' needs a substitution");
  } else if (key == "inv") {
    Letter g = parse_letter(text, rank);
    move = Invert{g.generator()};
  } else if (key == "swap") {
    Word w = parse_word(text, rank);
    if (w.size() != 2) throw Error(ErrorKind::InvalidMove, "'swap' needs two generators");
    move = Swap{w[0].generator(), w[1].generator()};
  } else {
    throw Error(ErrorKind::ParseError, "unknown move kind '" + key + "'");
  }
  validate_move(move, rank);
  return move;
}

json to_json(const Automorphism& phi) {
  json arr = json::array();
  for (const auto& m : phi.moves()) arr.push_back(to_json(m, phi.rank()));
  return arr;
}

Automorphism automorphism_from_json(const json& j, int rank) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "automorphism must be a list of moves");
  Automorphism phi(rank);
  for (const auto& m : j) phi.then(move_from_json(m, rank));
  return phi;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const IntPolynomial& p) {
  json c = json::array();
  for (const auto& v : p.coefficients()) c.push_back(v.get_str());
  return c;
}

json to_json(const RootApproximation& r) {
  return {{"value", r.to_string().substr(0, r.to_string().find(' '))},
          {"radius", r.radius.get_d()},
          {"bracket", {r.lo.get_str(), r.hi.get_str()}}};
}

json to_json(const Witness& w) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        json j{{"description", describe(w)}};
        if constexpr (std::is_same_v<T, InverseEdgeWitness>) {
          j["kind"] = "inverse_edge";
          j["edge"] = {v.edge.src, v.edge.dst};
        } else if constexpr (std::is_same_v<T, UnreachableWitness>) {
          j["kind"] = "unreachable";
          j["from"] = v.from;
          j["to"] = v.to;
        } else if constexpr (std::is_same_v<T, PeriodWitness>) {
          j["kind"] = "period";
          j["period"] = v.period;
        } else {
          j["kind"] = "duplicate_paths";
          j["paths"] = {v.first, v.second};
        }
        return j;
      },
      w);
}

json to_json(const PropertyReport& r) {
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  return {{"reduced", r.reduced},
          {"strongly_connected", r.strongly_connected},
          {"mixing", r.mixing},
          {"one_to_constant", r.one_to_constant},
          {"witnesses", ws}};
}

json to_json(const Decision& d) {
  json j{{"verdict", std::string(to_string(d.verdict))},
         {"witness", to_json(d.witness)},
         {"steps_used", d.steps_used},
         {"final_word", format_word(d.final_word)}};
  if (d.certificate) {
    j["certificate"] = {{"step", d.certificate_step}, {"word", format_word(*d.certificate)}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

json to_json(const SwitchResult& s) {
  return {{"image", format_word(s.image)},
          {"outcome", std::string(to_string(s.outcome))},
          {"keeps_Ba", s.keeps_Ba},
          {"switches_to_Ab", s.switches_to_Ab},
          {"moves", to_json(s.moves)}};
}

json to_json(const GrowthSeries& g) {
  json counts = json::object();
  for (const auto& [n, c] : g.counts) counts[std::to_string(n)] = c.get_str();
  return {{"label", g.label}, {"counts", counts}};
}

json to_json(const std::vector<DensityPoint>& points) {
  json arr = json::array();
  for (const auto& p : points) {
    arr.push_back({{"length", p.length},
                   {"numerator", p.numerator.get_str()},
                   {"denominator", p.denominator.get_str()},
                   {"value", p.value.get_str()},
                   {"approx", p.value.get_d()}});
  }
  return arr;
}

json to_json(const TableRow& row, int digits) {
  return {{"rank", row.rank},
          {"positive_rate", row.positive_rate},
          {"pp_lower_bound", row.pp_lower_bound.decimal(digits)},
          {"pp_lower_bound_rounded", row.pp_lower_bound.decimal(3, true)},
          {"all_rate", row.all_rate}};
}

json to_json(const SampleReport& s) {
  json words = json::array();
  for (const auto& w : s.accepted) words.push_back(format_word(w));
  return {{"length", s.length},
          {"requested", s.requested},
          {"draws", s.draws},
          {"accepted", s.accepted.size()},
          {"in_lower_language", s.in_lower_language},
          {"fraction", s.fraction},
          {"caveat", s.caveat},
          {"words", words}};
}

}  // namespace ppgrowth
