#pragma once

// ExpansionRecord: the machine-readable form of one expansion, emitted as
// JSON or CSV by the command-line tool. See docs/expansion-record.md.

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "hybrid.hpp"

namespace hybridweyl {

inline constexpr int kRecordSchemaVersion = 1;

struct RecordTerm {
  std::vector<int> mu;
  std::int64_t coeff = 0;
  friend bool operator==(const RecordTerm&, const RecordTerm&) = default;
};

struct ExpansionRecord {
  int schema_version = kRecordSchemaVersion;
  std::string algebra;
  std::vector<int> lambda;
  std::string kind;
  std::int64_t dimension = 0;
  std::vector<RecordTerm> terms;  // descending lexicographic order of mu
  bool verified = false;
  friend bool operator==(const ExpansionRecord&, const ExpansionRecord&) = default;
};

// Verifies the expansion and cross-checks the coefficient-sum dimension
// against both closed forms.
inline ExpansionRecord make_record(const RootSystemData& rs, const HybridExpansion& exp) {
  ExpansionRecord r;
  r.algebra = rs.label.name();
  r.lambda = exp.highest.coords();
  r.kind = to_string(exp.kind);
  r.dimension = hybrid_dimension(rs, exp.kind, exp.highest);
  const std::int64_t summed = expansion_dimension(rs, exp);
  r.verified = static_cast<bool>(verify_expansion(rs, exp)) && summed == r.dimension;
  for (auto it = exp.coefficients.rbegin(); it != exp.coefficients.rend(); ++it)
    r.terms.push_back({it->first.coords(), it->second});
  return r;
}

inline nlohmann::ordered_json to_json(const ExpansionRecord& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = r.schema_version;
  j["algebra"] = r.algebra;
  j["lambda"] = r.lambda;
  j["kind"] = r.kind;
  j["dimension"] = r.dimension;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : r.terms) j["terms"].push_back({{"mu", t.mu}, {"coeff", t.coeff}});
  j["verified"] = r.verified;
  return j;
}

template <class Json>
ExpansionRecord record_from_json(const Json& j) {
  ExpansionRecord r;
  r.schema_version = j.at("schema_version").template get<int>();
  if (r.schema_version != kRecordSchemaVersion)
    throw PreconditionError("unsupported record schema version " + std::to_string(r.schema_version));
  r.algebra = j.at("algebra").template get<std::string>();
  r.lambda = j.at("lambda").template get<std::vector<int>>();
  r.kind = j.at("kind").template get<std::string>();
  r.dimension = j.at("dimension").template get<std::int64_t>();
  for (const auto& t : j.at("terms"))
    r.terms.push_back({t.at("mu").template get<std::vector<int>>(), t.at("coeff").template get<std::int64_t>()});
  r.verified = j.at("verified").template get<bool>();
  return r;
}

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// Metadata as '#' comment lines, then "mu_1,...,mu_n,coeff" and one row per term.
inline std::string to_csv(const ExpansionRecord& r) {
  std::ostringstream out;
  out << "# schema_version=" << r.schema_version << "\n"
      << "# algebra=" << r.algebra << "\n"
      << "# lambda=" << join(r.lambda) << "\n"
      << "# kind=" << r.kind << "\n"
      << "# dimension=" << r.dimension << "\n"
      << "# verified=" << (r.verified ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < r.lambda.size(); ++i) out << "mu_" << i + 1 << ",";
  out << "coeff\n";
  for (const auto& t : r.terms) out << join(t.mu) << "," << t.coeff << "\n";
  return out.str();
}

// Comma-separated omega-coordinates, e.g. "2,1".
inline Weight parse_lambda(std::string_view text, int rank) {
  std::vector<int> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw PreconditionError("cannot parse lambda '" + std::string(text) + "'");
    if (value < 0) throw PreconditionError("lambda coordinates must be nonnegative");
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(coords.size()) != rank)
    throw PreconditionError("lambda has " + std::to_string(coords.size()) + " coordinates, expected " +
                            std::to_string(rank));
  return Weight(std::move(coords));
}

}  // namespace hybridweyl
