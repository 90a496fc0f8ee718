#ifndef NOBLE_IO_HPP
#define NOBLE_IO_HPP

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "noble/error.hpp"
#include "noble/nobility.hpp"
#include "noble/partial_bijection.hpp"
#include "noble/semigroup.hpp"

namespace noble {

inline constexpr const char* kToolVersion = "1.0.0";

namespace detail {

inline std::vector<std::string> content_lines(const std::string& text,
                                              std::vector<int>* line_numbers = nullptr) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    out.push_back(line);
    if (line_numbers) line_numbers->push_back(no);
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline int parse_int(const std::string& t, int line_no, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw NobleError(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                                ": expected " + what + ", got '" + t + "'");
  }
}

}  // namespace detail

/// Cayley file: a "cayley <n>" header then n rows of n element ids.
/// '#' lines are comments.
inline SemigroupTable parse_cayley(const std::string& text) {
  std::vector<int> line_no;
  auto lines = detail::content_lines(text, &line_no);
  if (lines.empty())
    throw NobleError(ErrorKind::ParseError, "empty input");
  auto head = detail::tokens(lines[0]);
  if (head.size() != 2 || head[0] != "cayley")
    throw NobleError(ErrorKind::ParseError,
                     "line " + std::to_string(line_no[0]) + ": expected 'cayley <n>'");
  int n = detail::parse_int(head[1], line_no[0], "element count");
  if (n < 1)
    throw NobleError(ErrorKind::ParseError, "element count must be positive");
  if (static_cast<int>(lines.size()) != n + 1)
    throw NobleError(ErrorKind::ParseError,
                     "expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> raw(n);
  for (int i = 0; i < n; ++i) {
    auto row = detail::tokens(lines[i + 1]);
    if (static_cast<int>(row.size()) != n)
      throw NobleError(ErrorKind::ParseError,
                       "line " + std::to_string(line_no[i + 1]) + ": expected " +
                           std::to_string(n) + " entries");
    for (const auto& t : row) raw[i].push_back(detail::parse_int(t, line_no[i + 1], "element id"));
  }
  return validate_inverse_semigroup(raw);
}

inline std::string emit_cayley(const SemigroupTable& S, const std::string& name = "") {
  std::string out;
  if (!name.empty()) out += "# name: " + name + "\n";
  out += "cayley " + std::to_string(S.n) + "\n";
  for (int i = 0; i < S.n; ++i) {
    for (int j = 0; j < S.n; ++j) {
      if (j) out += ' ';
      out += std::to_string(S.product(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Generator file: a "points <m>" header then one generator per line, each
/// point's image or "-" when undefined. Returns the closure.
inline ConcreteFamily parse_generators(const std::string& text, size_t cap = 100000) {
  std::vector<int> line_no;
  auto lines = detail::content_lines(text, &line_no);
  if (lines.empty())
    throw NobleError(ErrorKind::ParseError, "empty input");
  auto head = detail::tokens(lines[0]);
  if (head.size() != 2 || head[0] != "points")
    throw NobleError(ErrorKind::ParseError,
                     "line " + std::to_string(line_no[0]) + ": expected 'points <m>'");
  int m = detail::parse_int(head[1], line_no[0], "point count");
  if (m < 1)
    throw NobleError(ErrorKind::ParseError, "point count must be positive");
  std::vector<PartialBijection> gens;
  for (size_t li = 1; li < lines.size(); ++li) {
    auto row = detail::tokens(lines[li]);
    if (static_cast<int>(row.size()) != m)
      throw NobleError(ErrorKind::ParseError,
                       "line " + std::to_string(line_no[li]) + ": expected " +
                           std::to_string(m) + " entries");
    std::vector<int> map(m, PartialBijection::kUndef);
    for (int a = 0; a < m; ++a) {
      if (row[a] == "-") continue;
      int b = detail::parse_int(row[a], line_no[li], "point id");
      if (b < 0 || b >= m)
        throw NobleError(ErrorKind::ParseError,
                         "line " + std::to_string(line_no[li]) + ": point id out of range");
      map[a] = b;
    }
    PartialBijection f(std::move(map));
    if (!f.is_injective())
      throw NobleError(ErrorKind::NotInjective,
                       "line " + std::to_string(line_no[li]) + ": two points share an image");
    gens.push_back(std::move(f));
  }
  return generate_closure(gens, cap);
}

inline std::string emit_generators(const ConcreteFamily& F, const std::string& name = "") {
  std::string out;
  if (!name.empty()) out += "# name: " + name + "\n";
  out += "points " + std::to_string(F.m) + "\n";
  for (const auto& f : F.elems) out += f.to_string() + "\n";
  return out;
}

/// FNV-1a of the input text; fingerprints inputs inside documents.
inline std::string input_digest(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// JSON serialization (nlohmann::json objects keep keys sorted)
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const ElementSet& s) {
  return nlohmann::json(s.to_vector());
}

inline nlohmann::json to_json(const PartialBijection& f) {
  nlohmann::json a = nlohmann::json::array();
  for (int p = 0; p < f.points(); ++p)
    a.push_back(f.defined(p) ? nlohmann::json(f.at(p)) : nlohmann::json(nullptr));
  return a;
}

inline nlohmann::json to_json(const FilterFamily& family) {
  nlohmann::json filters = nlohmann::json::array();
  for (const auto& F : family.filters) filters.push_back(to_json(F.carrier));
  nlohmann::json j;
  j["filters"] = filters;
  j["kind"] = to_string(family.kind);
  if (family.anchor) j["anchor"] = to_json(family.anchor->carrier);
  return j;
}

inline nlohmann::json to_json(const Representation& rep) {
  nlohmann::json action = nlohmann::json::array();
  for (const auto& f : rep.action) action.push_back(to_json(f));
  nlohmann::json j;
  j["family"] = to_json(rep.family);
  j["action"] = action;
  j["flags"] = {{"is_homomorphism", to_string(rep.is_homomorphism)},
                {"is_faithful", to_string(rep.is_faithful)},
                {"is_transitive", to_string(rep.is_transitive)}};
  return j;
}

inline nlohmann::json certificate_to_json(const NobilityCertificate& cert,
                                          const std::string& digest) {
  nlohmann::json j;
  j["verdict"] = cert.verdict == Verdict::noble ? "noble" : "not_noble";
  if (cert.witness) {
    nlohmann::json w;
    w["H"] = to_json(cert.witness->H.carrier);
    w["family"] = to_json(cert.witness->family);
    w["representation"] = to_json(cert.witness->rep);
    j["witness"] = w;
  }
  if (!cert.refutation.empty() || cert.verdict == Verdict::not_noble) {
    nlohmann::json candidates = nlohmann::json::array();
    for (const auto& r : cert.refutation)
      candidates.push_back({{"carrier", to_json(r.candidate.carrier)},
                            {"failing_idempotent", r.failing_idempotent}});
    nlohmann::json ref;
    ref["candidates"] = candidates;
    if (cert.oracle_bound) ref["oracle_bound"] = *cert.oracle_bound;
    j["refutation"] = ref;
  }
  j["findings"] = cert.findings;
  j["tool_version"] = kToolVersion;
  j["input_digest"] = digest;
  return j;
}

}  // namespace noble

#endif
