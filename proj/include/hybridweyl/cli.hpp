#pragma once

// Command-line driver. Exit codes: 0 success, 1 usage or parse error,
// 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cache.hpp"
#include "hybrid.hpp"
#include "record.hpp"

namespace hybridweyl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

// Multiplicity tables and expansions for one invocation, backed by the
// on-disk cache when HYBRIDWEYL_CACHE_DIR is set.
class Session {
 public:
  Session() : dir_(cache_dir_from_env()) {
    if (dir_) load_cache(*dir_, tables_);
  }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  ~Session() {
    if (!dir_ || !tables_.dirty()) return;
    try {
      save_cache(*dir_, tables_);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write cache: " << e.what() << "\n";
    }
  }

  ExpansionRecord record(const RootSystemData& rs, Kind kind, const Weight& lambda) {
    return make_record(rs, *expansions_.get(rs, kind, lambda));
  }

  std::shared_ptr<const HybridExpansion> expansion(const RootSystemData& rs, Kind kind, const Weight& lambda) {
    return expansions_.get(rs, kind, lambda);
  }

 private:
  std::optional<std::filesystem::path> dir_;
  MultiplicityCache tables_;
  ExpansionCache expansions_{tables_};
};

struct Options {
  std::string algebra;
  std::string lambda;
  std::string kind = "plain";
  std::string format = "json";
  int max_coord = 0;
  std::string out_path;
};

inline void write_records(std::ostream& out, const std::vector<ExpansionRecord>& records, const std::string& format,
                          bool as_array) {
  if (format == "csv") {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (i) out << "\n";
      out << to_csv(records[i]);
    }
    return;
  }
  if (!as_array) {
    out << to_json(records.front()).dump(2) << "\n";
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  out << arr.dump(2) << "\n";
}

// All dominant weights with coordinates <= max_coord, lexicographically ascending.
inline std::vector<Weight> weights_up_to(int rank, int max_coord) {
  std::vector<Weight> out;
  Weight w = Weight::zero(rank);
  for (;;) {
    out.push_back(w);
    int i = rank - 1;
    while (i >= 0 && w[i] == max_coord) w[i--] = 0;
    if (i < 0) return out;
    ++w[i];
  }
}

inline int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystemData rs = build_root_system(AlgebraLabel::parse(o.algebra));
  const Weight lambda = parse_lambda(o.lambda, rs.rank());
  Session session;
  const ExpansionRecord r = session.record(rs, parse_kind(o.kind), lambda);
  write_records(out, {r}, o.format, false);
  if (!r.verified) {
    err << "verification failed for " << r.algebra << " " << lambda.str() << " " << r.kind << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

inline int cmd_dim(const Options& o, std::ostream& out, std::ostream&) {
  const RootSystemData rs = build_root_system(AlgebraLabel::parse(o.algebra));
  const Weight lambda = parse_lambda(o.lambda, rs.rank());
  out << hybrid_dimension(rs, parse_kind(o.kind), lambda) << "\n";
  return kExitOk;
}

inline int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_coord < 0) throw PreconditionError("--max-coord must be nonnegative");
  const RootSystemData rs = build_root_system(AlgebraLabel::parse(o.algebra));
  const Kind kind = parse_kind(o.kind);
  Session session;
  std::vector<ExpansionRecord> records;
  for (const Weight& lambda : weights_up_to(rs.rank(), o.max_coord)) {
    records.push_back(session.record(rs, kind, lambda));
    if (!records.back().verified) {
      err << "verification failed for " << rs.label.name() << " " << lambda.str() << " " << o.kind << "\n";
      return kExitVerification;
    }
  }
  if (o.out_path.empty()) {
    write_records(out, records, o.format, true);
  } else {
    std::ofstream file(o.out_path, std::ios::trunc);
    write_records(file, records, o.format, true);
    if (!file) throw Error("cannot write " + o.out_path);
  }
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystemData rs = build_root_system(AlgebraLabel::parse(o.algebra));
  const Weight lambda = parse_lambda(o.lambda, rs.rank());
  Session session;
  const auto exp = session.expansion(rs, parse_kind(o.kind), lambda);
  const Verification v = verify_expansion(rs, *exp);
  if (!v) {
    err << "mismatch at " << v.first_mismatch->str() << ": product coefficient " << v.product_coefficient
        << ", expected " << v.expected_coefficient << "\n";
    return kExitVerification;
  }
  out << "verified " << rs.label.name() << " " << lambda.str() << " " << o.kind << " (" << exp->coefficients.size()
      << " terms)\n";
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dominant weight multiplicities of characters and hybrid characters"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_lambda) {
    sub->add_option("--algebra", o.algebra, "algebra label, e.g. B3, C2, F4, G2")->required();
    if (with_lambda) sub->add_option("--lambda", o.lambda, "highest weight, comma-separated omega-coordinates")->required();
    sub->add_option("--kind", o.kind, "plain, long or short")
        ->check(CLI::IsMember({"plain", "long", "short"}))
        ->capture_default_str();
  };
  auto* expand = app.add_subcommand("expand", "expand a character in C-functions");
  common(expand, true);
  expand->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  auto* dim = app.add_subcommand("dim", "print the (hybrid) dimension");
  common(dim, true);
  auto* table = app.add_subcommand("table", "expand every lambda with coordinates <= max-coord");
  common(table, false);
  table->add_option("--max-coord", o.max_coord)->required();
  table->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  table->add_option("--out", o.out_path, "output file (default: standard output)");
  auto* verify = app.add_subcommand("verify", "check an expansion by the group-algebra identity");
  common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(o, out, err);
    if (dim->parsed()) return cmd_dim(o, out, err);
    if (table->parsed()) return cmd_table(o, out, err);
    return cmd_verify(o, out, err);
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const DegeneracyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hybridweyl::cli
