#include "richardson/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>

#include "richardson/classifier.hpp"
#include "richardson/exceptional.hpp"
#include "richardson/matrix_oracle.hpp"
#include "richardson/partition_engine.hpp"
#include "richardson/records.hpp"

namespace richardson {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& s, bool allow_table = true) {
  if (s == "table" && allow_table) return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "'");
}

const std::vector<Family>& exceptional_families() {
  static const std::vector<Family> f = {Family::G2, Family::F4, Family::E6, Family::E7,
                                        Family::E8};
  return f;
}

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {
    if (fmt_ == Format::Csv) out_ << csv_header() << "\n";
  }
  void write(const OutputRecord& rec) {
    switch (fmt_) {
      case Format::Json: out_ << to_json(rec).dump() << "\n"; break;
      case Format::Csv: out_ << to_csv_row(rec) << "\n"; break;
      case Format::Table: buffered_.push_back(rec); break;
    }
  }
  void finish() {
    if (fmt_ == Format::Table) out_ << format_table(buffered_);
  }

 private:
  std::ostream& out_;
  Format fmt_;
  std::vector<OutputRecord> buffered_;
};

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string kind;
  std::string blocks;
  std::optional<int> central;
  std::string coloring;
  std::string format = "table";
  bool oracle = false;
  int trials = 3;
  std::uint64_t seed = 1;
};

std::string palindrome_hint(const LieKind& kind, const std::vector<int>& d,
                            std::optional<int> central) {
  if (kind.family() == Family::A || central || d.size() < 2) return "";
  const int sum = std::accumulate(d.begin(), d.end(), 0);
  if (sum == kind.matrix_size() && is_palindromic(d))
    return "hint: --blocks takes the half sequence d_1..d_r; put the middle block "
           "in --central instead of passing the full palindrome";
  return "";
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const Format fmt = parse_format(a.format);
  const LieKind kind = LieKind::parse(a.kind);
  const bool has_blocks = !a.blocks.empty() || a.central;
  if (has_blocks == !a.coloring.empty())
    throw UsageError("give exactly one of --blocks/--central or --coloring");
  if (a.trials < 1) throw UsageError("--trials must be positive");

  ClassifyOptions opts;
  opts.use_oracle = a.oracle;
  opts.trials = a.trials;
  opts.seed = a.seed;

  ClassificationReport rep;
  if (has_blocks) {
    if (!kind.is_classical())
      throw UsageError(kind.name() + " takes --coloring, not --blocks");
    const auto d = parse_int_list(a.blocks);
    try {
      rep = classify(BlockVector(kind, d, a.central), opts);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      if (auto hint = palindrome_hint(kind, d, a.central); !hint.empty())
        err << hint << "\n";
      return kExitUsage;
    }
  } else {
    rep = classify(Coloring(kind, parse_int_list(a.coloring)), opts);
  }

  RecordWriter w(out, fmt);
  if (fmt == Format::Table) {
    out << format_report(rep);
    return kExitOk;
  }
  w.write(to_record(rep));
  w.finish();
  return kExitOk;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::string kind;
  std::optional<int> rank;
  std::optional<int> max_rank;
  bool by_blocks = false;
  bool nice = false;
  bool birational = false;
  bool sl2 = false;
  bool normal = false;
  bool oracle = false;
  std::string format = "table";
};

constexpr int kMaxEnumerateRank = 16;

std::vector<LieKind> resolve_kinds(const EnumerateArgs& a) {
  if (a.rank && a.max_rank) throw UsageError("--rank and --max-rank are exclusive");
  std::string lower = a.kind;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "exceptional") {
    if (a.rank || a.max_rank)
      throw UsageError("exceptional kinds have fixed ranks");
    std::vector<LieKind> out;
    for (Family f : exceptional_families()) out.emplace_back(f, exceptional_rank(f));
    return out;
  }
  auto fam = parse_family(a.kind);
  if (fam && LieKind::is_classical_family(*fam)) {
    if (!a.rank && !a.max_rank)
      throw UsageError("family " + a.kind + " needs --rank or --max-rank");
    const int hi = a.rank ? *a.rank : *a.max_rank;
    const int lo = a.rank ? *a.rank : min_rank(*fam);
    if (hi > kMaxEnumerateRank)
      throw UsageError("rank above " + std::to_string(kMaxEnumerateRank) + " is not enumerated");
    if (hi < min_rank(*fam))
      throw UsageError("rank " + std::to_string(hi) + " is below the minimum for " +
                       family_name(*fam));
    std::vector<LieKind> out;
    for (int n = lo; n <= hi; ++n) out.emplace_back(*fam, n);
    return out;
  }
  if (a.rank || a.max_rank)
    throw UsageError("--rank/--max-rank go with a family letter, not " + a.kind);
  const LieKind k = LieKind::parse(a.kind);
  if (k.is_classical() && k.rank() > kMaxEnumerateRank)
    throw UsageError("rank above " + std::to_string(kMaxEnumerateRank) + " is not enumerated");
  return {k};
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const Format fmt = parse_format(a.format);
  const auto kinds = resolve_kinds(a);
  for (const auto& k : kinds) {
    if (!k.is_classical() && a.by_blocks)
      throw UsageError("--by-blocks needs a classical kind");
    if (!k.is_classical() && a.normal)
      throw UsageError("--normal is only defined for classical kinds");
  }
  ClassifyOptions opts;
  opts.use_oracle = a.oracle;

  RecordWriter w(out, fmt);
  auto emit = [&](const ClassificationReport& rep) {
    if (a.nice && !rep.nice) return;
    if (a.birational && !rep.birational) return;
    if (a.sl2 && !rep.sl2_given) return;
    if (a.normal && rep.normal_closure != NormalClosure::Normal) return;
    w.write(to_record(rep));
  };
  for (const auto& k : kinds) {
    if (a.by_blocks) {
      auto bvs = all_block_vectors(k);
      std::stable_sort(bvs.begin(), bvs.end(), [](const BlockVector& x, const BlockVector& y) {
        return coloring_from_blocks(x).u() < coloring_from_blocks(y).u();
      });
      for (const auto& b : bvs) emit(classify(b, opts));
    } else {
      for (const auto& c : all_colorings(k)) emit(classify(c, opts));
    }
  }
  w.finish();
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string kind;
  int max_n = 12;
  int trials = 3;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.trials < 1) throw UsageError("--trials must be positive");
  std::vector<LieKind> kinds;
  if (auto fam = parse_family(a.kind); fam && LieKind::is_classical_family(*fam)) {
    for (int n = min_rank(*fam);; ++n) {
      LieKind k(*fam, n);
      if (k.matrix_size() > a.max_n) break;
      kinds.push_back(k);
    }
  } else {
    LieKind k = LieKind::parse(a.kind);
    if (!k.is_classical()) throw UsageError("verify needs a classical kind");
    if (k.matrix_size() <= a.max_n) kinds.push_back(k);
  }

  int cases = 0, failures = 0;
  for (const auto& k : kinds) {
    for (const auto& b : all_block_vectors(k)) {
      if (!nice_check(b)) continue;
      ++cases;
      std::vector<std::string> problems;
      const Partition closed = richardson_partition(b);
      const OracleResult res = oracle_richardson_partition(b, a.trials, a.seed);
      if (!(closed == res.partition))
        problems.push_back("closed form " + closed.to_string() + " vs oracle " +
                           res.partition.to_string());
      if (!res.certified)
        problems.push_back("oracle sample not certified (dim g^X=" +
                           std::to_string(res.centralizer_dim) +
                           ", dim m=" + std::to_string(res.levi_dim) + ")");
      if (k.family() != Family::A &&
          birational_via_blocks(b) != birational_via_partition(k, b, closed))
        problems.push_back("block and partition birationality criteria disagree");
      out << (problems.empty() ? "PASS " : "FAIL ") << k.name() << " " << b.to_string()
          << " lambda=" << closed.to_string();
      for (const auto& p : problems) out << " | " << p;
      out << "\n";
      if (!problems.empty()) ++failures;
    }
  }
  out << "summary: " << a.kind << " N<=" << a.max_n << ", " << cases << " cases, "
      << failures << " discrepancies\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

// ---- export ----------------------------------------------------------------

struct ExportArgs {
  std::string kind = "exceptional";
  std::string table = "appendix";
  std::string out = "-";
  std::string format = "json";
};

struct ExportRow {
  std::string table;
  std::string kind;
  std::string row;
  std::vector<int> coloring;
  bool nice;
  bool birational;
  bool sl2;
  int orbit_dim;
  std::optional<int> stored_orbit_dim;
  bool mismatch;
  std::optional<std::string> label;
};

std::vector<ExportRow> export_rows(const std::vector<Family>& fams, const std::string& table) {
  std::vector<ExportRow> rows;
  auto fill = [](ExportRow& r, const LieKind& k) {
    const Coloring c(k, r.coloring);
    const auto rec = exceptional_lookup(c);
    r.nice = rec.nice;
    r.birational = rec.birational;
    r.sl2 = rec.sl2_given;
    r.orbit_dim = orbit_dim(root_system(k.family()), c);
    r.label = rec.bala_carter_label;
    r.mismatch = r.stored_orbit_dim && *r.stored_orbit_dim != r.orbit_dim;
  };
  for (Family f : fams) {
    const LieKind k(f, exceptional_rank(f));
    if (table == "appendix") {
      for (const auto& ar : appendix_rows(f)) {
        ExportRow r{table, k.name(), std::to_string(ar.row), ar.u, false, false, false, 0,
                    std::nullopt, false, std::nullopt};
        for (const auto& ns : non_sl2_rows())
          if (ns.family == f && ns.u == ar.u) r.stored_orbit_dim = ns.orbit_dim;
        fill(r, k);
        rows.push_back(std::move(r));
      }
    } else {
      for (const auto& ns : non_sl2_rows()) {
        if (ns.family != f) continue;
        ExportRow r{table, k.name(), std::string(1, ns.tag), ns.u, false, false, false, 0,
                    ns.orbit_dim, false, std::nullopt};
        fill(r, k);
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

void write_export(std::ostream& os, const std::vector<ExportRow>& rows, Format fmt) {
  auto opt_int = [](const std::optional<int>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  if (fmt == Format::Csv)
    os << "table,kind,row,coloring,nice,birational,sl2,orbit_dim,stored_orbit_dim,"
          "orbit_dim_mismatch,label\n";
  for (const auto& r : rows) {
    if (fmt == Format::Json) {
      nlohmann::ordered_json j;
      j["table"] = r.table;
      j["kind"] = r.kind;
      j["row"] = r.row;
      j["coloring"] = r.coloring;
      j["nice"] = r.nice;
      j["birational"] = r.birational;
      j["sl2"] = r.sl2;
      j["orbit_dim"] = r.orbit_dim;
      j["stored_orbit_dim"] = opt_int(r.stored_orbit_dim);
      j["orbit_dim_mismatch"] = r.mismatch;
      j["label"] = r.label ? nlohmann::ordered_json(*r.label) : nlohmann::ordered_json(nullptr);
      os << j.dump() << "\n";
    } else {
      auto b = [](bool x) { return x ? "true" : "false"; };
      os << r.table << ',' << r.kind << ',' << r.row << ",(" << join_ints(r.coloring, ";")
         << ")," << b(r.nice) << ',' << b(r.birational) << ',' << b(r.sl2) << ','
         << r.orbit_dim << ','
         << (r.stored_orbit_dim ? std::to_string(*r.stored_orbit_dim) : "") << ','
         << b(r.mismatch) << ',' << r.label.value_or("") << "\n";
    }
  }
}

int cmd_export(const ExportArgs& a, std::ostream& out, std::ostream& err) {
  const Format fmt = parse_format(a.format, false);
  if (a.table != "appendix" && a.table != "non-sl2")
    throw UsageError("--table must be appendix or non-sl2");
  std::vector<Family> fams;
  std::string lower = a.kind;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "exceptional" || lower == "all") {
    fams = exceptional_families();
  } else {
    const LieKind k = LieKind::parse(a.kind);
    if (k.is_classical()) throw UsageError("export covers exceptional kinds only");
    fams = {k.family()};
  }
  const auto rows = export_rows(fams, a.table);
  int mismatches = 0;
  for (const auto& r : rows) mismatches += r.mismatch;

  if (a.out.empty() || a.out == "-") {
    write_export(out, rows, fmt);
  } else {
    std::ofstream file(a.out);
    if (!file) {
      err << "error: cannot open '" << a.out << "' for writing\n";
      return kExitUsage;
    }
    write_export(file, rows, fmt);
    file.close();
    if (!file) {
      err << "error: failed writing '" << a.out << "'\n";
      return kExitUsage;
    }
    err << "wrote " << rows.size() << " rows to " << a.out << "\n";
  }
  if (mismatches)
    err << "warning: " << mismatches << " stored orbit dimensions differ from recomputed\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Richardson elements and moment-map birationality for parabolic subalgebras",
               "richardson"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "classify one parabolic subalgebra");
  classify_cmd->add_option("--kind", ca.kind, "Lie type, e.g. C3 or E7")->required();
  classify_cmd->add_option("--blocks", ca.blocks, "half-palindrome d_1,...,d_r (type A: all blocks)");
  classify_cmd->add_option("--central", ca.central, "central block d_{r+1}");
  classify_cmd->add_option("--coloring", ca.coloring, "0/1 marks on simple roots, e.g. 1,0,1");
  classify_cmd->add_option("--format", ca.format, "table, json or csv");
  classify_cmd->add_flag("--oracle", ca.oracle, "use the matrix oracle when no closed form applies");
  classify_cmd->add_option("--trials", ca.trials, "oracle samples");
  classify_cmd->add_option("--seed", ca.seed, "first oracle seed");

  EnumerateArgs ea;
  auto* enum_cmd = app.add_subcommand("enumerate", "list parabolics of a type with their flags");
  enum_cmd->add_option("--kind", ea.kind, "family letter, full kind, or 'exceptional'")->required();
  enum_cmd->add_option("--rank", ea.rank, "single rank for a family letter");
  enum_cmd->add_option("--max-rank", ea.max_rank, "all ranks up to this one");
  enum_cmd->add_flag("--by-blocks", ea.by_blocks, "enumerate block vectors instead of colorings");
  enum_cmd->add_flag("--nice", ea.nice, "keep parabolics with a Richardson element in g_1");
  enum_cmd->add_flag("--birational", ea.birational, "keep birational ones");
  enum_cmd->add_flag("--sl2", ea.sl2, "keep those given by an sl2-triple");
  enum_cmd->add_flag("--normal", ea.normal, "keep those with normal orbit closure");
  enum_cmd->add_flag("--oracle", ea.oracle, "use the matrix oracle when no closed form applies");
  enum_cmd->add_option("--format", ea.format, "table, json or csv");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "compare closed forms with the matrix oracle");
  verify_cmd->add_option("--kind", va.kind, "A, B, C or D (or a single kind)")->required();
  verify_cmd->add_option("--max-N", va.max_n, "largest matrix size");
  verify_cmd->add_option("--trials", va.trials, "oracle samples per case");
  verify_cmd->add_option("--seed", va.seed, "first oracle seed");

  ExportArgs xa;
  auto* export_cmd = app.add_subcommand("export", "write the exceptional tables");
  export_cmd->add_option("--kind", xa.kind, "G2, F4, E6, E7, E8 or 'exceptional'");
  export_cmd->add_option("--table", xa.table, "appendix or non-sl2");
  export_cmd->add_option("--out", xa.out, "output path, '-' for stdout");
  export_cmd->add_option("--format", xa.format, "json or csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca, out, err);
    if (*enum_cmd) return cmd_enumerate(ea, out);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*export_cmd) return cmd_export(xa, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace richardson
