// Command line front end: parse a Cayley or generator file, run the engine,
// print text or JSON. Exit codes: 0 ok, 2 parse, 3 validation, 4 size cap,
// 5 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noble/io.hpp"
#include "noble/oracle.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw noble::NobleError(noble::ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ids_of(const noble::ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_validate(const noble::SemigroupTable& S, bool as_json) {
  json j;
  j["n"] = S.n;
  j["inverses"] = S.inv;
  j["idempotents"] = noble::to_json(S.idempotents);
  j["zero"] = S.zero ? json(*S.zero) : json(nullptr);
  j["identity"] = S.identity ? json(*S.identity) : json(nullptr);
  std::string t = "valid inverse semigroup, " + std::to_string(S.n) + " elements\n";
  t += "idempotents " + ids_of(S.idempotents) + "\n";
  t += "zero " + (S.zero ? std::to_string(*S.zero) : std::string("none")) + ", identity " +
       (S.identity ? std::to_string(*S.identity) : std::string("none")) + "\n";
  emit(j, as_json, t);
  return 0;
}

int run_analyze(const noble::SemigroupTable& S, bool as_json) {
  auto g = noble::green_relations(S);
  // covering pairs of the natural order
  std::vector<std::pair<int, int>> hasse;
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < S.n; ++t) {
      if (s == t || !S.natural_leq(s, t)) continue;
      bool covers = true;
      for (int u = 0; u < S.n && covers; ++u)
        if (u != s && u != t && S.natural_leq(s, u) && S.natural_leq(u, t)) covers = false;
      if (covers) hasse.emplace_back(s, t);
    }
  json j;
  j["idempotents"] = noble::to_json(S.idempotents);
  j["zero"] = S.zero ? json(*S.zero) : json(nullptr);
  j["identity"] = S.identity ? json(*S.identity) : json(nullptr);
  j["hasse_edges"] = json::array();
  for (auto [s, t] : hasse) j["hasse_edges"].push_back({s, t});
  j["green"] = {{"L", g.L}, {"R", g.R}, {"D", g.D}};
  std::string t = "idempotents " + ids_of(S.idempotents) + "\n";
  t += "hasse edges:";
  for (auto [a, b] : hasse) t += " " + std::to_string(a) + "<" + std::to_string(b);
  t += "\nL classes:";
  for (int x : g.L) t += " " + std::to_string(x);
  t += "\nR classes:";
  for (int x : g.R) t += " " + std::to_string(x);
  t += "\nD classes:";
  for (int x : g.D) t += " " + std::to_string(x);
  t += "\n";
  emit(j, as_json, t);
  return 0;
}

int run_filters(const noble::SemigroupTable& S, bool as_json, bool s1) {
  auto filters = noble::enumerate_filters(S);
  // magnitude classes, first-seen order
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < filters.size(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (noble::same_magnitude(S, filters[c[0]], filters[i], s1)) {
        c.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    if (!placed) classes.push_back({static_cast<int>(i)});
  }
  json j;
  j["filters"] = json::array();
  for (const auto& F : filters) {
    json f;
    f["carrier"] = noble::to_json(F.carrier);
    f["principal_of"] = F.principal_of ? json(*F.principal_of) : json(nullptr);
    f["closed_inverse_subsemigroup"] = noble::is_closed_inverse_subsemigroup(S, F);
    j["filters"].push_back(f);
  }
  j["magnitude_classes"] = classes;
  std::string t = std::to_string(filters.size()) + " filters\n";
  for (size_t i = 0; i < filters.size(); ++i) {
    t += std::to_string(i) + ": " + ids_of(filters[i].carrier);
    if (filters[i].principal_of) t += " principal of " + std::to_string(*filters[i].principal_of);
    if (noble::is_closed_inverse_subsemigroup(S, filters[i])) t += " [closed inverse subsemigroup]";
    t += "\n";
  }
  t += "magnitude classes:";
  for (const auto& c : classes) {
    t += " {";
    for (size_t k = 0; k < c.size(); ++k) t += (k ? "," : "") + std::to_string(c[k]);
    t += "}";
  }
  t += "\n";
  emit(j, as_json, t);
  return 0;
}

int run_nobility(const noble::SemigroupTable& S, bool as_json, const std::string& digest) {
  auto cert = noble::decide_nobility(S);
  json j = noble::certificate_to_json(cert, digest);
  std::string t = std::string("verdict: ") +
                  (cert.verdict == noble::Verdict::noble ? "noble" : "not_noble") + "\n";
  if (cert.witness) {
    t += "witness H " + ids_of(cert.witness->H.carrier) + ", family kind " +
         noble::to_string(cert.witness->family.kind) + ", degree " +
         std::to_string(cert.witness->family.size()) + "\n";
  }
  for (const auto& r : cert.refutation)
    t += "candidate " + ids_of(r.candidate.carrier) + " fails at idempotent " +
         std::to_string(r.failing_idempotent) + "\n";
  if (cert.oracle_bound)
    t += "oracle bound " + std::to_string(*cert.oracle_bound) + "\n";
  for (const auto& f : cert.findings) t += "finding: " + f + "\n";
  emit(j, as_json, t);
  return 0;
}

noble::Filter filter_from_ids(const noble::SemigroupTable& S, const std::vector<int>& ids) {
  noble::ElementSet c(S.n);
  for (int i : ids) {
    if (i < 0 || i >= S.n)
      throw noble::NobleError(noble::ErrorKind::ParseError, "element id out of range");
    c.insert(i);
  }
  return noble::Filter{c, std::nullopt};
}

int run_represent(const noble::SemigroupTable& S, bool as_json, const std::vector<int>& H_ids,
                  const std::string& family_kind) {
  noble::Filter H = filter_from_ids(S, H_ids);
  if (!noble::is_filter(S, H.carrier))
    throw noble::NobleError(noble::ErrorKind::NotClosedInverseSubsemigroup,
                            "the given carrier is not a filter");
  noble::FilterFamily fam = family_kind == "magnitude" ? noble::magnitude_family(S, H)
                                                       : noble::coset_family(S, H);
  auto rep = noble::build_representation(S, fam);
  json j = noble::to_json(rep);
  std::string t = "family kind " + std::string(noble::to_string(fam.kind)) + ", degree " +
                  std::to_string(fam.size()) + "\n";
  for (int i = 0; i < fam.size(); ++i)
    t += "F" + std::to_string(i) + " = " + ids_of(fam.filters[i].carrier) + "\n";
  for (int s = 0; s < S.n; ++s) t += "f(" + std::to_string(s) + ") = " + rep.action[s].to_string() + "\n";
  emit(j, as_json, t);
  return 0;
}

int run_verify(const noble::SemigroupTable& S, bool as_json, const std::string& rep_path) {
  json j = json::parse(slurp(rep_path));
  noble::Representation rep;
  rep.family.kind = noble::FamilyKind::custom;
  for (const auto& carrier : j.at("family").at("filters")) {
    noble::ElementSet c(S.n);
    for (int i : carrier.get<std::vector<int>>()) c.insert(i);
    rep.family.filters.push_back(noble::Filter{c, std::nullopt});
  }
  for (const auto& row : j.at("action")) {
    std::vector<int> map;
    for (const auto& v : row)
      map.push_back(v.is_null() ? noble::PartialBijection::kUndef : v.get<int>());
    rep.action.emplace_back(std::move(map));
  }
  if (static_cast<int>(rep.action.size()) != S.n)
    throw noble::NobleError(noble::ErrorKind::ParseError,
                            "action table does not match the semigroup order");
  rep = noble::verify_representation(S, std::move(rep));
  json out;
  out["flags"] = {{"is_homomorphism", noble::to_string(rep.is_homomorphism)},
                  {"is_faithful", noble::to_string(rep.is_faithful)},
                  {"is_transitive", noble::to_string(rep.is_transitive)}};
  std::string t = std::string("is_homomorphism ") + noble::to_string(rep.is_homomorphism) +
                  "\nis_faithful " + noble::to_string(rep.is_faithful) + "\nis_transitive " +
                  noble::to_string(rep.is_transitive) + "\n";
  emit(out, as_json, t);
  return 0;
}

int run_embed_wp(const noble::SemigroupTable& S, bool as_json) {
  auto F = noble::wagner_preston(S);
  if (as_json) {
    json j;
    j["points"] = F.m;
    j["maps"] = json::array();
    for (const auto& f : F.elems) j["maps"].push_back(noble::to_json(f));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << noble::emit_generators(F);
  }
  return 0;
}

int run_oracle(const noble::SemigroupTable& S, bool as_json, int max_degree) {
  auto w = noble::brute_force_noble(S, max_degree);
  json j;
  std::string t;
  if (w) {
    j["found"] = true;
    j["degree"] = w->degree;
    j["assignment"] = json::array();
    for (const auto& f : w->assignment) j["assignment"].push_back(noble::to_json(f));
    t = "transitive embedding of degree " + std::to_string(w->degree) + "\n";
    for (int s = 0; s < S.n; ++s) t += std::to_string(s) + " -> " + w->assignment[s].to_string() + "\n";
  } else {
    j["found"] = false;
    j["bound"] = max_degree;
    t = "no transitive embedding up to degree " + std::to_string(max_degree) +
        " (bounded evidence, not proof)\n";
  }
  emit(j, as_json, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse semigroup nobility engine"};
  app.require_subcommand(1);

  std::string input, format = "text", seed_order = "fixed", rep_path, family_kind = "orbit";
  std::vector<int> H_ids;
  int max_degree = 4;
  bool s1 = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input file")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed-order", seed_order, "candidate order (only 'fixed' exists)")
        ->check(CLI::IsMember({"fixed"}));
  };
  add_common(app.add_subcommand("validate", "check the inverse semigroup axioms"));
  add_common(app.add_subcommand("analyze", "idempotents, order, Green partitions"));
  auto* cf = app.add_subcommand("filters", "filters and magnitude classes");
  add_common(cf);
  cf->add_flag("--s1", s1, "adjoin an identity for the magnitude search");
  add_common(app.add_subcommand("nobility", "decide nobility, emit a certificate"));
  auto* cr = app.add_subcommand("represent", "build the action on a filter family");
  add_common(cr);
  cr->add_option("--H", H_ids, "carrier of the closed inverse subsemigroup")->required();
  cr->add_option("--family", family_kind, "family kind")
      ->check(CLI::IsMember({"orbit", "magnitude"}));
  auto* cv = app.add_subcommand("verify", "verify a representation dump");
  add_common(cv);
  cv->add_option("--rep", rep_path, "representation JSON file")->required();
  add_common(app.add_subcommand("embed-wp", "right translation embedding"));
  auto* co = app.add_subcommand("oracle", "brute force embedding search");
  add_common(co);
  co->add_option("--max-degree", max_degree, "largest point set to try");

  CLI11_PARSE(app, argc, argv);
  bool as_json = format == "json";

  try {
    std::string text = slurp(input);
    noble::SemigroupTable S = noble::parse_cayley(text);
    if (app.got_subcommand("validate")) return run_validate(S, as_json);
    if (app.got_subcommand("analyze")) return run_analyze(S, as_json);
    if (app.got_subcommand("filters")) return run_filters(S, as_json, s1);
    if (app.got_subcommand("nobility"))
      return run_nobility(S, as_json, noble::input_digest(text));
    if (app.got_subcommand("represent")) return run_represent(S, as_json, H_ids, family_kind);
    if (app.got_subcommand("verify")) return run_verify(S, as_json, rep_path);
    if (app.got_subcommand("embed-wp")) return run_embed_wp(S, as_json);
    if (app.got_subcommand("oracle")) return run_oracle(S, as_json, max_degree);
  } catch (const noble::NobleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
