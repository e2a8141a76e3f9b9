#include "omegafrag/json_io.hpp"

#include <map>

#include <json.hpp>

namespace omegafrag::json_io {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::InvalidInput, std::string("bad value for \"") + what + "\"");
  }
}

json pair_json(const FiniteMonoid& m, LinkedPair p) { return json::array({m.name(p.s), m.name(p.e)}); }

json witness_json(const FiniteMonoid& m, const Witness& w) {
  json j;
  j["accepted"] = {{"s", m.name(w.accepted.s)}, {"e", m.name(w.accepted.e)}};
  j["rejected"] = {{"s", m.name(w.rejected.s)}, {"e", m.name(w.rejected.e)}};
  if (w.alphabet) j["C"] = w.alphabet->letters();
  j["u_hat"] = w.u_hat;
  j["e_hat"] = w.e_hat;
  j["v_hat"] = w.v_hat;
  j["f_hat"] = w.f_hat;
  j["alpha"] = to_string(w.alpha);
  j["beta"] = to_string(w.beta);
  return j;
}

json blocks_json(const FiniteMonoid& m, const std::vector<Block>& blocks) {
  json out = json::array();
  for (Block b : blocks) out.push_back({{"s", m.name(b.s)}, {"C", b.c.letters()}});
  return out;
}

}  // namespace

std::string language_to_json(const RecognizedLanguage& lang, bool analysis) {
  const FiniteMonoid& m = lang.monoid();
  json j;
  j["elements"] = m.names();
  j["identity"] = m.name(m.identity());
  json table = json::array();
  for (Element a = 0; a < m.size(); ++a) {
    json row = json::array();
    for (Element b = 0; b < m.size(); ++b) row.push_back(m.name(m.mul(a, b)));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  json gens = json::object();
  for (char c : lang.alphabet().letters()) gens[std::string(1, c)] = m.name(lang.hom().image(c));
  j["generators"] = std::move(gens);
  if (const auto& order = m.order()) {
    json pairs = json::array();
    for (Element a = 0; a < m.size(); ++a)
      for (Element b = 0; b < m.size(); ++b)
        if (a != b && order->leq(a, b)) pairs.push_back({m.name(a), m.name(b)});
    j["order"] = std::move(pairs);
  }
  json accepted = json::array();
  for (LinkedPair p : lang.accepted_pairs()) accepted.push_back(pair_json(m, p));
  j["accepted"] = std::move(accepted);
  if (analysis) {
    json idem = json::array();
    for (Element e : m.idempotents()) idem.push_back(m.name(e));
    j["idempotents"] = std::move(idem);
    json linked = json::array();
    for (LinkedPair p : linked_pairs(m)) linked.push_back(pair_json(m, p));
    j["linked_pairs"] = std::move(linked);
  }
  return j.dump(2);
}

RecognizedLanguage language_from_json(std::string_view text) {
  const json j = parse(text);
  const auto names = get<std::vector<std::string>>(field(j, "elements"), "elements");
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], static_cast<Element>(i)).second)
      throw Error(ErrorCode::InvalidInput, "duplicate element name " + names[i]);
  auto lookup = [&](const json& v, const char* what) {
    const auto name = get<std::string>(v, what);
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorCode::InvalidInput, std::string("unknown element \"") + name + "\" in " + what);
    return it->second;
  };

  const json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != names.size())
    throw Error(ErrorCode::InvalidInput, "table must have one row per element");
  std::vector<Element> table;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != names.size())
      throw Error(ErrorCode::InvalidInput, "table must have one column per element");
    for (const json& cell : row) table.push_back(lookup(cell, "table"));
  }
  const Element identity = lookup(field(j, "identity"), "identity");

  std::optional<Order> order;
  if (j.contains("order")) {
    Order o(names.size());
    for (const json& p : j.at("order")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidInput, "order entries are [lesser, greater]");
      o.set(lookup(p[0], "order"), lookup(p[1], "order"));
    }
    // transitive closure of the listed pairs
    const std::size_t n = names.size();
    for (Element k = 0; k < n; ++k)
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (o.leq(a, k) && o.leq(k, b)) o.set(a, b);
    order = std::move(o);
  }
  auto monoid = std::make_shared<const FiniteMonoid>(names, std::move(table), identity, std::move(order));

  const json& gens = field(j, "generators");
  if (!gens.is_object() || gens.empty()) throw Error(ErrorCode::InvalidInput, "generators must be a nonempty object");
  std::string letters;
  std::vector<Element> images;
  for (const auto& [letter, image] : gens.items()) {  // object keys iterate in sorted order
    if (letter.size() != 1 || !is_letter(letter[0]))
      throw Error(ErrorCode::InvalidInput, "generator key \"" + letter + "\" is not a letter");
    letters += letter;
    images.push_back(lookup(image, "generators"));
  }
  Hom hom(Alphabet::of(letters), std::move(monoid), images);

  std::vector<LinkedPair> accepted;
  for (const json& p : field(j, "accepted")) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidInput, "accepted entries are [s, e]");
    accepted.push_back({lookup(p[0], "accepted"), lookup(p[1], "accepted")});
  }
  return RecognizedLanguage(std::move(hom), accepted);
}

std::string automaton_to_json(const Buchi& a) {
  json j;
  j["states"] = a.num_states;
  j["alphabet"] = a.alphabet.letters();
  json ts = json::array();
  for (const Transition& t : a.transitions) ts.push_back({t.from, std::string(1, t.letter), t.to});
  j["transitions"] = std::move(ts);
  j["initial"] = a.initial;
  json buchi = json::array(), fin = json::array();
  for (State s = 0; s < a.num_states; ++s) {
    if (a.buchi_accepting[s]) buchi.push_back(s);
    if (a.finite_accepting[s]) fin.push_back(s);
  }
  j["buchi_accepting"] = std::move(buchi);
  j["finite_accepting"] = std::move(fin);
  return j.dump(2);
}

Buchi automaton_from_json(std::string_view text) {
  const json j = parse(text);
  Buchi a;
  a.num_states = get<std::size_t>(field(j, "states"), "states");
  const auto letters = get<std::string>(field(j, "alphabet"), "alphabet");
  for (char c : letters)
    if (!is_letter(c)) throw Error(ErrorCode::InvalidInput, "alphabet must consist of letters a-z");
  a.alphabet = Alphabet::of(letters);
  for (const json& t : field(j, "transitions")) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::InvalidInput, "transitions are [from, letter, to]");
    const auto letter = get<std::string>(t[1], "transitions");
    if (letter.size() != 1) throw Error(ErrorCode::InvalidInput, "transition letter must be one character");
    a.transitions.push_back({get<State>(t[0], "transitions"), letter[0], get<State>(t[2], "transitions")});
  }
  const json& init = field(j, "initial");
  a.initial = init.is_array() ? get<std::vector<State>>(init, "initial") : std::vector<State>{get<State>(init, "initial")};
  a.buchi_accepting.assign(a.num_states, 0);
  a.finite_accepting.assign(a.num_states, 0);
  auto mark = [&](const char* key, std::vector<char>& flags) {
    if (!j.contains(key)) return;
    for (State s : get<std::vector<State>>(j.at(key), key)) {
      if (s >= a.num_states) throw Error(ErrorCode::InvalidInput, std::string(key) + " state out of range");
      flags[s] = 1;
    }
  };
  mark("buchi_accepting", a.buchi_accepting);
  mark("finite_accepting", a.finite_accepting);
  a.validate();
  return a;
}

std::string verdict_to_json(const Verdict& v) {
  json j;
  j["question"] = v.question;
  j["answer"] = to_string(v.answer);
  if (!v.condition.empty()) j["condition"] = v.condition;
  if (v.witness) j["witness"] = witness_json(*v.monoid, *v.witness);
  if (v.answer == Answer::Yes) j["representation"] = blocks_json(*v.monoid, v.representation);
  json checks = json::object();
  if (v.verified_bound) checks["verified_bound"] = {v.verified_bound->first, v.verified_bound->second};
  j["checks"] = std::move(checks);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j.dump(2);
}

std::string verify_to_json(const VerifyReport& r, const std::vector<Block>& blocks, const FiniteMonoid& m,
                           std::size_t max_prefix, std::size_t max_loop) {
  json j;
  j["ok"] = r.ok;
  j["bound"] = {max_prefix, max_loop};
  j["checked"] = r.checked;
  j["representation"] = blocks_json(m, blocks);
  if (r.counterexample) {
    j["counterexample"] = to_string(*r.counterexample);
    j["in_language"] = r.in_language;
  }
  return j.dump(2);
}

}  // namespace omegafrag::json_io
