// omega-frag: command-line front end over the C API.
//
// Exit codes: 0 yes / pass, 1 no / fail, 2 unknown, 2 + of_status on errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegafrag/omegafrag.h"

using nlohmann::json;

namespace {

struct Failure {
  of_status status;
  std::string message;
};

void check(of_status st) {
  if (st != OF_OK) throw Failure{st, of_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  of_string_free(s);
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{OF_IO, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  of_language* lang = nullptr;
  ~Input() { of_language_free(lang); }
};

void load(Input& in, const std::string& source, bool force) {
  of_options opts{0, force ? 1 : 0};
  if (ends_with(source, ".aut.json"))
    check(of_language_from_automaton_json(read_file(source).c_str(), &opts, &in.lang));
  else if (ends_with(source, ".monoid.json") || ends_with(source, ".json"))
    check(of_language_from_monoid_json(read_file(source).c_str(), &opts, &in.lang));
  else
    check(of_language_from_regex(source.c_str(), &opts, &in.lang));
}

std::string cls(const std::string& letters) { return "[" + letters + "]"; }

std::string pair_text(const json& p) { return "[" + p["s"].get<std::string>() + "][" + p["e"].get<std::string>() + "]^ω"; }

// --- human output -------------------------------------------------------------------

void print_monoid(const json& m) {
  const auto names = m["elements"].get<std::vector<std::string>>();
  std::size_t width = 1;
  for (const auto& n : names) width = std::max(width, n.size());
  auto pad = [&](const std::string& s) { return s + std::string(width + 1 - s.size(), ' '); };

  std::cout << "elements (" << names.size() << "):";
  for (const auto& n : names) std::cout << ' ' << n;
  std::cout << "\nidentity: " << m["identity"].get<std::string>() << "\ngenerators:";
  for (const auto& [letter, image] : m["generators"].items()) std::cout << ' ' << letter << "↦" << image.get<std::string>();
  std::cout << "\ntable:\n" << std::string(width + 3, ' ');
  for (const auto& n : names) std::cout << pad(n);
  std::cout << '\n';
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::cout << "  " << pad(names[i]);
    for (const auto& cell : m["table"][i]) std::cout << pad(cell.get<std::string>());
    std::cout << '\n';
  }
  std::cout << "idempotents:";
  for (const auto& e : m["idempotents"]) std::cout << ' ' << e.get<std::string>();
  std::cout << "\nlinked pairs:";
  for (const auto& p : m["linked_pairs"]) std::cout << " (" << p[0].get<std::string>() << ',' << p[1].get<std::string>() << ')';
  std::cout << "\naccepted:";
  for (const auto& p : m["accepted"]) std::cout << " [" << p[0].get<std::string>() << "][" << p[1].get<std::string>() << "]^ω";
  std::cout << '\n';
  if (m.contains("order")) {
    std::cout << "order:";
    for (const auto& p : m["order"]) std::cout << ' ' << p[0].get<std::string>() << " ≤ " << p[1].get<std::string>();
    std::cout << '\n';
  }
}

void print_blocks(const json& blocks) {
  if (blocks.empty()) {
    std::cout << "representation: no blocks\n";
    return;
  }
  std::cout << "representation (" << blocks.size() << (blocks.size() == 1 ? " block):" : " blocks):");
  for (const auto& b : blocks) std::cout << " L(" << b["s"].get<std::string>() << ", " << cls(b["C"]) << ')';
  std::cout << '\n';
}

void print_verdict(const json& v) {
  std::string answer = v["answer"];
  for (auto& c : answer) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::cout << v["question"].get<std::string>() << ": " << answer;
  if (v.contains("condition")) std::cout << " (" << v["condition"].get<std::string>() << " condition)";
  std::cout << '\n';
  if (v.contains("witness")) {
    const json& w = v["witness"];
    std::cout << "  " << pair_text(w["accepted"]) << " ⊆ L, " << pair_text(w["rejected"]) << " ⊄ L";
    if (w.contains("C")) std::cout << ", C = " << cls(w["C"]);
    std::cout << "\n  α = " << w["alpha"].get<std::string>() << " ∈ L\n  β = " << w["beta"].get<std::string>() << " ∉ L\n";
  }
  if (v.contains("representation") && v["question"] != "cantor-bool") {
    std::cout << "  ";
    print_blocks(v["representation"]);
  }
  if (v["checks"].contains("verified_bound"))
    std::cout << "  verified on all lassos up to (" << v["checks"]["verified_bound"][0] << ','
              << v["checks"]["verified_bound"][1] << ")\n";
  if (v.contains("notes"))
    for (const auto& n : v["notes"]) std::cout << "  note: " << n.get<std::string>() << '\n';
}

std::pair<std::size_t, std::size_t> parse_bounds(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const auto u = std::stoul(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const auto rest = s.substr(comma + 1);
    const auto v = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {u, v};
  } catch (const std::exception&) {
    throw Failure{OF_INVALID_INPUT, "--bounds expects U,V (e.g. 6,6), got " + s};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean combinations of alphabetic opens and conditional BΣ₂ for ω-regular languages", "omega-frag"};
  app.require_subcommand(1);

  std::string source, question, bounds = "6,6", oracle = "unknown", mutate;
  bool as_json = false, force = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--force", force, "Lift enumeration guards");
  app.add_option("--bounds", bounds, "Lasso bounds U,V for verification")->capture_default_str();

  auto* synt = app.add_subcommand("synt", "Syntactic monoid, order and accepted pairs");
  synt->add_option("input", source, "Regex, .aut.json or .monoid.json file")->required();

  auto* decide = app.add_subcommand("decide", "Decide alph-bool, cantor-bool or bsigma2");
  decide->add_option("question", question)->required()->check(CLI::IsMember({"alph-bool", "cantor-bool", "bsigma2"}));
  decide->add_option("input", source, "Regex, .aut.json or .monoid.json file")->required();
  decide->add_option("--oracle", oracle, "unknown | assume-yes | evidence:K")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the constructed representation on bounded lassos");
  verify->add_option("input", source, "Regex, .aut.json or .monoid.json file")->required();
  verify->add_option("--mutate", mutate, "drop-block[:i] removes a block before checking");

  for (auto* sub : {synt, decide, verify}) {
    sub->add_flag("--json", as_json, "Machine-readable output");
    sub->add_flag("--force", force, "Lift enumeration guards");
    sub->add_option("--bounds", bounds, "Lasso bounds U,V");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2 + OF_INVALID_INPUT;
  }

  try {
    const auto [bu, bv] = parse_bounds(bounds);
    Input in;
    load(in, source, force);

    if (*synt) {
      char* out = nullptr;
      check(of_language_monoid_json(in.lang, 1, &out));
      const std::string text = take(out);
      if (as_json)
        std::cout << text << '\n';
      else
        print_monoid(json::parse(text));
      return 0;
    }

    if (*decide) {
      of_answer answer{};
      char* out = nullptr;
      check(of_decide(in.lang, question.c_str(), oracle.c_str(), bu, bv, &answer, &out));
      const std::string text = take(out);
      if (as_json)
        std::cout << text << '\n';
      else
        print_verdict(json::parse(text));
      return static_cast<int>(answer);
    }

    long drop = -1;
    if (!mutate.empty()) {
      if (mutate == "drop-block") {
        drop = 0;
      } else if (mutate.rfind("drop-block:", 0) == 0) {
        try {
          drop = std::stol(mutate.substr(11));
        } catch (const std::exception&) {
          throw Failure{OF_INVALID_INPUT, "bad block index in --mutate " + mutate};
        }
      } else {
        throw Failure{OF_INVALID_INPUT, "unknown mutation " + mutate + " (expected drop-block[:i])"};
      }
    }
    int ok = 0;
    char* out = nullptr;
    check(of_verify(in.lang, bu, bv, drop, &ok, &out));
    const std::string text = take(out);
    if (as_json) {
      std::cout << text << '\n';
    } else {
      const json r = json::parse(text);
      print_blocks(r["representation"]);
      if (ok)
        std::cout << "pass: " << r["checked"] << " lassos up to (" << bu << ',' << bv << ") agree\n";
      else
        std::cout << "fail: " << r["counterexample"].get<std::string>()
                  << (r["in_language"].get<bool>() ? " is in L but not covered" : " is covered but not in L") << '\n';
    }
    return ok ? 0 : 1;
  } catch (const Failure& f) {
    std::cerr << "omega-frag: " << f.message << '\n';
    return 2 + static_cast<int>(f.status);
  }
}
