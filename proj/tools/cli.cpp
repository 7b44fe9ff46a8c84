#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "kneserlab/kneserlab.hpp"

namespace kneserlab::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

enum class Format { text, json, csv };

struct RunConfig {
  std::uint64_t budget = EnumerationBudget{}.max_sets;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string output;

  Format fmt() const { return format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text; }
  EnumerationBudget enumeration() const { return EnumerationBudget{budget}; }
};

// ---- rendering helpers ----

Json set_json(const RSet& s) { return Json(s.elements()); }

Json family_json(const Family& f) {
  Json out = Json::array();
  for (const auto& s : f) out.push_back(set_json(s));
  return out;
}

Json params_json(const UniverseParams& p) {
  return Json{{"n", p.n},
              {"r", p.r},
              {"l", p.l},
              {"p", p.p},
              {"binom_n_r", binomial(p.n, p.r)},
              {"binom_l_p", binomial(p.l, p.p)}};
}

Json document(std::string_view command) { return Json{{"schema", 1}, {"command", command}}; }

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string quoted(const RSet& s) { return '"' + to_string(s) + '"'; }

std::string braces(const RSet& s) { return '{' + to_string(s) + '}'; }

std::string list_sets(const Family& f) {
  std::string out;
  for (const auto& s : f) out += (out.empty() ? "" : " ") + braces(s);
  return out.empty() ? "(none)" : out;
}

void text_params(std::ostream& out, const UniverseParams& p) {
  out << "n=" << p.n << " r=" << p.r << " l=" << p.l << " p=" << p.p << " C(n,r)=" << binomial(p.n, p.r)
      << " C(l,p)=" << binomial(p.l, p.p) << '\n';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

template <class T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string{};
}

Json opt_json(const auto& v) { return v ? Json(*v) : Json(nullptr); }

// ---- input helpers ----

RSet endpoint(const std::string& text, const UniverseParams& params) {
  const RSet s = parse_rset(text, params.n);
  if (s.size() != params.r) {
    throw DomainError("set {" + text + "} has " + std::to_string(s.size()) + " elements, expected r=" +
                      std::to_string(params.r));
  }
  return s;
}

Family load_family(const std::string& path, const UniverseParams& params) {
  Family f = read_family_file(path);
  if (f.universe() != params.n || f.r() != params.r) {
    throw DomainError("family file " + path + " has n=" + std::to_string(f.universe()) + " r=" +
                      std::to_string(f.r()) + ", expected n=" + std::to_string(params.n) + " r=" +
                      std::to_string(params.r));
  }
  return f;
}

std::vector<int> parse_int_list(const std::string& text, std::string_view what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw DomainError("malformed " + std::string(what) + " list '" + text + "'");
    }
  }
  if (out.empty()) throw DomainError("empty " + std::string(what) + " list");
  return out;
}

std::pair<int, int> parse_grid_point(const std::string& text) {
  const auto sep = text.find_first_of(":,");
  if (sep == std::string::npos) throw DomainError("grid point '" + text + "' is not of the form n:r");
  const auto values = parse_int_list(text.substr(0, sep) + "," + text.substr(sep + 1), "grid point");
  if (values.size() != 2) throw DomainError("grid point '" + text + "' is not of the form n:r");
  return {values[0], values[1]};
}

void write_pair_files(const FamilyPair& pair, const fs::path& stem_a, const fs::path& stem_b) {
  const std::string header = "construction: " + pair.construction + " params: " + pair.parameters;
  if (stem_a.has_parent_path()) fs::create_directories(stem_a.parent_path());
  write_family_file(stem_a, pair.a, header);
  write_family_file(stem_b, pair.b, header);
}

// Witness files for a bound report; returns the path of the side-A file.
std::string write_witness(const BoundReport& report, const std::string& dir) {
  if (dir.empty() || !report.witness) return {};
  const std::string stem = "witness-n" + std::to_string(report.params.n) + "-r" + std::to_string(report.params.r);
  const fs::path a = fs::path(dir) / (stem + "-A.fam");
  write_pair_files(*report.witness, a, fs::path(dir) / (stem + "-B.fam"));
  return a.string();
}

bool bound_finding(const BoundReport& report) {
  return report.exact_max && (*report.exact_max > report.bound || (report.params.l >= 1 && report.strict_gap &&
                                                                    *report.strict_gap <= 0));
}

Json bound_json(const BoundReport& report, const std::string& witness_file) {
  Json row = params_json(report.params);
  row["bound"] = report.bound;
  row["exact_max"] = opt_json(report.exact_max);
  row["min_cut_size"] = opt_json(report.min_cut_size);
  row["strict_gap"] = opt_json(report.strict_gap);
  row["witness_file"] = witness_file.empty() ? Json(nullptr) : Json(witness_file);
  if (report.witness) {
    row["witness"] = Json{{"a_size", report.witness->a.size()}, {"b_size", report.witness->b.size()}};
  }
  if (!report.note.empty()) row["note"] = report.note;
  return row;
}

constexpr const char* kScanHeader = "n,r,l,p,binom_n_r,binom_l_p,bound,exact_max,strict_gap,witness_file,error";

std::string bound_csv(const UniverseParams& p, const BoundReport* report, const std::string& witness_file,
                      const std::string& error) {
  std::ostringstream row;
  row << p.n << ',' << p.r << ',' << p.l << ',' << p.p << ',';
  if (report) {
    row << report->binom_n_r << ',' << report->binom_l_p << ',' << report->bound << ','
        << opt_str(report->exact_max) << ',' << opt_str(report->strict_gap) << ',' << witness_file << ',';
  } else {
    row << ",,,,,,";
  }
  if (!error.empty()) row << '"' << error << '"';
  return row.str();
}

// ---- commands ----

struct BoundArgs {
  int n = 0;
  int r = 0;
  bool exact = false;
  std::string witness_dir;
};

int cmd_bound(const RunConfig& cfg, std::ostream& out, const BoundArgs& args) {
  const auto params = make_params(args.n, args.r);
  BoundReport report = bound_report(params);
  if (args.exact) {
    require_within_budget(params, cfg.enumeration());
    report = exact_max_sum(params);
  }
  const std::string witness_file = write_witness(report, args.witness_dir);
  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("bound");
      doc.update(bound_json(report, witness_file));
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << kScanHeader << '\n' << bound_csv(params, &report, witness_file, {}) << '\n';
      break;
    case Format::text:
      text_params(out, params);
      out << "bound: " << report.bound << '\n';
      if (args.exact) {
        if (report.exact_max) {
          out << "exact: " << *report.exact_max << '\n';
          out << "min_cut: " << *report.min_cut_size << '\n';
          out << "strict_gap: " << *report.strict_gap << '\n';
        } else {
          out << "exact: none\n";
        }
        if (!witness_file.empty()) out << "witness_file: " << witness_file << '\n';
      }
      if (!report.note.empty()) out << "note: " << report.note << '\n';
      break;
  }
  return bound_finding(report) ? kFinding : kSuccess;
}

struct ScanArgs {
  std::vector<std::string> grid;
  int r_min = 1;
  int r_max = 0;
  int l_max = -1;
  bool exact = false;
  unsigned threads = 0;
  std::string witness_dir;
};

int cmd_scan(const RunConfig& cfg, std::ostream& out, const ScanArgs& args) {
  std::vector<std::pair<int, int>> grid;
  for (const auto& g : args.grid) grid.push_back(parse_grid_point(g));
  for (int r = args.r_min; r <= args.r_max; ++r) {
    for (int l = 0; l <= args.l_max; ++l) grid.emplace_back(2 * r + l, r);
  }
  ScanOptions options;
  options.exact = args.exact;
  options.max_threads = args.threads;
  options.limits.max_vertices = std::min<std::uint64_t>(options.limits.max_vertices, cfg.budget);
  const auto rows = scan(grid, options);

  bool finding = false;
  bool errored = false;
  std::vector<std::string> witness_files;
  for (const auto& row : rows) {
    witness_files.push_back(row.report ? write_witness(*row.report, args.witness_dir) : std::string{});
    finding = finding || (row.report && bound_finding(*row.report));
    errored = errored || !row.error.empty();
  }

  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("scan");
      doc["rows"] = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        Json j = row.report ? bound_json(*row.report, witness_files[i])
                            : Json{{"n", grid[i].first}, {"r", grid[i].second}};
        if (!row.error.empty()) j["error"] = row.error;
        doc["rows"].push_back(std::move(j));
      }
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << kScanHeader << '\n';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << bound_csv(rows[i].params, rows[i].report ? &*rows[i].report : nullptr, witness_files[i],
                         rows[i].error)
            << '\n';
      }
      break;
    case Format::text:
      out << std::setw(4) << "n" << std::setw(4) << "r" << std::setw(4) << "l" << std::setw(4) << "p"
          << std::setw(12) << "C(n,r)" << std::setw(8) << "C(l,p)" << std::setw(12) << "bound" << std::setw(12)
          << "exact_max" << std::setw(8) << "gap" << '\n';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.report) {
          out << std::setw(4) << grid[i].first << std::setw(4) << grid[i].second << "  error: " << row.error << '\n';
          continue;
        }
        const auto& rep = *row.report;
        out << std::setw(4) << rep.params.n << std::setw(4) << rep.params.r << std::setw(4) << rep.params.l
            << std::setw(4) << rep.params.p << std::setw(12) << rep.binom_n_r << std::setw(8) << rep.binom_l_p
            << std::setw(12) << rep.bound << std::setw(12) << (rep.exact_max ? opt_str(rep.exact_max) : "-")
            << std::setw(8) << (rep.strict_gap ? opt_str(rep.strict_gap) : "-") << '\n';
        if (!row.error.empty()) out << "      error: " << row.error << '\n';
      }
      break;
  }
  if (finding) return kFinding;
  return errored ? kBudgetError : kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, const std::string& file_a, const std::string& file_b) {
  const Family a = read_family_file(file_a);
  const Family b = read_family_file(file_b);
  require_same_universe(a, b);
  const auto params = make_params(a.universe(), a.r());
  const auto v = verify_pair(params, a, b);
  const std::string within = v.within_bound ? yes_no(*v.within_bound) : "not-asserted";
  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("verify");
      doc.update(params_json(params));
      doc["size_a"] = v.size_a;
      doc["size_b"] = v.size_b;
      doc["disjoint"] = v.disjoint;
      doc["cross"] = v.cross_intersecting;
      doc["vacuous"] = v.vacuous;
      doc["sum"] = v.sum;
      doc["bound"] = v.bound;
      doc["within"] = opt_json(v.within_bound);
      doc["min_side"] = v.min_side;
      if (v.cross_violation) {
        doc["cross_violation"] = Json::array({set_json(v.cross_violation->first), set_json(v.cross_violation->second)});
      }
      doc["passes"] = v.passes();
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << "n,r,l,p,binom_n_r,binom_l_p,size_a,size_b,disjoint,cross,vacuous,sum,bound,within,min_side,passes\n";
      out << params.n << ',' << params.r << ',' << params.l << ',' << params.p << ',' << binomial(params.n, params.r)
          << ',' << binomial(params.l, params.p) << ',' << v.size_a << ',' << v.size_b << ',' << yes_no(v.disjoint)
          << ',' << yes_no(v.cross_intersecting) << ',' << yes_no(v.vacuous) << ',' << v.sum << ',' << v.bound << ','
          << within << ',' << v.min_side << ',' << yes_no(v.passes()) << '\n';
      break;
    case Format::text:
      text_params(out, params);
      out << "size_a: " << v.size_a << "\nsize_b: " << v.size_b << "\ndisjoint: " << yes_no(v.disjoint)
          << "\ncross: " << yes_no(v.cross_intersecting) << "\nvacuous: " << yes_no(v.vacuous) << "\nsum: " << v.sum
          << "\nbound: " << v.bound << "\nwithin: " << within << "\nmin_side: " << v.min_side << '\n';
      if (v.cross_violation) {
        out << "cross_violation: " << braces(v.cross_violation->first) << " " << braces(v.cross_violation->second)
            << '\n';
      }
      out << "verdict: " << (v.passes() ? "pass" : "fail") << '\n';
      break;
  }
  return v.passes() ? kSuccess : kFinding;
}

Json trace_json(const ChainTrace& t) {
  auto sets = [](const std::vector<RSet>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(set_json(s));
    return out;
  };
  return Json{{"case_taken", to_string(t.case_taken)},
              {"t", t.t},
              {"m", t.m},
              {"q", t.q},
              {"blocks_a", sets(t.blocks_a)},
              {"blocks_b", sets(t.blocks_b)},
              {"skeletons", sets(t.skeletons)},
              {"backtracks", t.backtracks},
              {"notes", t.notes}};
}

struct ChainArgs {
  int n = 0;
  int r = 0;
  std::string a;
  std::string b;
  std::string c_file;
  int random_c = -1;
  bool oracle = false;
  bool greedy = false;
};

// `count` distinct r-sets other than the endpoints, drawn with the run's seed.
Family random_forbidden(const UniverseParams& params, const RSet& a, const RSet& b, int count,
                        const RunConfig& cfg) {
  auto masks = all_rset_masks(params, cfg.enumeration());
  std::erase_if(masks, [&](Mask m) { return m == a.bits() || m == b.bits(); });
  if (count < 0 || static_cast<std::size_t>(count) > masks.size()) {
    throw DomainError("--random-c " + std::to_string(count) + " outside [0, " + std::to_string(masks.size()) + "]");
  }
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), masks.size() - 1);
    std::swap(masks[static_cast<std::size_t>(i)], masks[pick(rng)]);
  }
  masks.resize(static_cast<std::size_t>(count));
  return Family::from_masks(params.n, params.r, masks);
}

int cmd_chain(const RunConfig& cfg, std::ostream& out, std::ostream& err, const ChainArgs& args) {
  const auto params = make_params(args.n, args.r);
  const RSet a = endpoint(args.a, params);
  const RSet b = endpoint(args.b, params);
  if (!args.c_file.empty() && args.random_c >= 0) throw DomainError("--c and --random-c are exclusive");
  Family forbidden(params.n, params.r);
  if (!args.c_file.empty()) forbidden = load_family(args.c_file, params);
  if (args.random_c >= 0) forbidden = random_forbidden(params, a, b, args.random_c, cfg);

  ChainOptions options;
  options.allow_oracle_fallback = args.oracle;
  options.backtrack = !args.greedy;
  options.budget = cfg.enumeration();

  Chain chain;
  try {
    chain = build_chain(params, forbidden, a, b, options);
  } catch (const ChainConstructionError& e) {
    err << "proof violation: " << e.what() << '\n';
    err << "pool_size: " << e.pool_size() << " forbidden_size: " << e.forbidden_size() << '\n';
    err << "trace: " << trace_json(e.trace()).dump() << '\n';
    return kProofViolation;
  }
  const auto defect = find_chain_defect(params, forbidden, a, b, chain);
  const auto oracle = bfs_path_avoiding(params, forbidden, a, b, cfg.enumeration());
  const bool agrees = oracle.has_value();

  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("chain");
      doc["params"] = params_json(params);
      doc["seed"] = cfg.seed;
      doc["forbidden_size"] = forbidden.size();
      doc["allowed_forbidden"] = binomial(params.l, params.p);
      Json sets = Json::array();
      for (const auto& s : chain.sets) sets.push_back(set_json(s));
      doc["chain"] = std::move(sets);
      doc["f"] = chain.length();
      doc["trace"] = trace_json(chain.trace);
      doc["verified"] = !defect;
      if (defect) doc["defect"] = *defect;
      doc["oracle_length"] = oracle ? Json(static_cast<int>(oracle->size()) - 1) : Json(nullptr);
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << "k,set\n";
      for (std::size_t k = 0; k < chain.sets.size(); ++k) out << k << ',' << quoted(chain.sets[k]) << '\n';
      break;
    case Format::text:
      text_params(out, params);
      out << "forbidden: " << forbidden.size() << " (C(l,p)=" << binomial(params.l, params.p) << ")\n";
      for (std::size_t k = 0; k < chain.sets.size(); ++k) out << 'S' << k << ": " << to_string(chain.sets[k]) << '\n';
      out << "f: " << chain.length() << '\n';
      out << "trace: " << trace_json(chain.trace).dump() << '\n';
      out << "verified: " << yes_no(!defect) << '\n';
      if (defect) out << "defect: " << *defect << '\n';
      out << "oracle: "
          << (oracle ? "reachable, shortest chain f=" + std::to_string(oracle->size() - 1) : std::string("unreachable"))
          << '\n';
      break;
  }
  if (defect || !agrees) {
    err << "proof violation: " << (defect ? *defect : "BFS oracle finds no path for a constructed chain") << '\n';
    return kProofViolation;
  }
  return kSuccess;
}

struct ConstructArgs {
  std::string name;
  int n = 0;
  int r = 0;
  int center = 1;
  std::string rule = "first-half";
  std::string parts;
  std::string out_dir = ".";
};

std::pair<UniverseParams, FamilyPair> make_construction(const RunConfig& cfg, Construction kind,
                                                         const ConstructArgs& args) {
  if (kind == Construction::pair_partition) {
    if (args.n != 0 && args.n != 2 * args.r) throw DomainError("pair_partition requires n = 2r");
    const auto params = make_params(2 * args.r, args.r);
    require_within_budget(params, cfg.enumeration());
    if (args.parts.empty()) throw DomainError("pair_partition requires --parts");
    const auto parts = parse_int_list(args.parts, "part");
    return {params, pair_partition(args.r, parts)};
  }
  const auto params = make_params(args.n, args.r);
  require_within_budget(params, cfg.enumeration());
  if (kind == Construction::large_r_pair) return {params, large_r_pair(params)};
  return {params, star_partition(params, args.center, parse_split_rule(args.rule))};
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, const ConstructArgs& args) {
  const Construction kind = parse_construction(args.name);
  const auto [p, pair] = make_construction(cfg, kind, args);
  const std::optional<UniverseParams> params = p;
  const auto expected = expected_sizes(*params, kind);
  const auto v = verify_pair(*params, pair.a, pair.b);
  const bool sizes_match = (!expected.a || *expected.a == pair.a.size()) &&
                           (!expected.b || *expected.b == pair.b.size()) &&
                           expected.total == pair.a.size() + pair.b.size();

  const fs::path file_a = fs::path(args.out_dir) / (args.name + "-A.fam");
  const fs::path file_b = fs::path(args.out_dir) / (args.name + "-B.fam");
  write_pair_files(pair, file_a, file_b);

  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("construct");
      doc["construction"] = pair.construction;
      doc["parameters"] = pair.parameters;
      doc["params"] = params_json(*params);
      doc["size_a"] = pair.a.size();
      doc["size_b"] = pair.b.size();
      doc["total"] = pair.a.size() + pair.b.size();
      doc["expected"] = Json{{"a", opt_json(expected.a)}, {"b", opt_json(expected.b)}, {"total", expected.total}};
      doc["sizes_match"] = sizes_match;
      doc["disjoint"] = v.disjoint;
      doc["cross"] = v.cross_intersecting;
      doc["vacuous"] = v.vacuous;
      doc["bound"] = v.bound;
      doc["files"] = Json::array({file_a.string(), file_b.string()});
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << "side,set\n";
      for (const auto& s : pair.a) out << "A," << quoted(s) << '\n';
      for (const auto& s : pair.b) out << "B," << quoted(s) << '\n';
      break;
    case Format::text: {
      auto expect = [](const std::optional<std::uint64_t>& e) {
        return e ? " (expected " + std::to_string(*e) + ")" : std::string{};
      };
      out << "construction: " << pair.construction << " params: " << pair.parameters << '\n';
      text_params(out, *params);
      out << "size_a: " << pair.a.size() << expect(expected.a) << '\n';
      out << "size_b: " << pair.b.size() << expect(expected.b) << '\n';
      out << "total: " << pair.a.size() + pair.b.size() << expect(expected.total) << '\n';
      out << "sizes_match: " << yes_no(sizes_match) << '\n';
      out << "disjoint: " << yes_no(v.disjoint) << "\ncross: " << yes_no(v.cross_intersecting)
          << "\nvacuous: " << yes_no(v.vacuous) << "\nbound: " << v.bound << '\n';
      out << "files: " << file_a.string() << ' ' << file_b.string() << '\n';
      break;
    }
  }
  return sizes_match && v.disjoint && v.cross_intersecting && !v.vacuous ? kSuccess : kFinding;
}

struct KneserArgs {
  int n = 0;
  int r = 0;
  std::string c_file;
  int max_size = -1;
  bool exhaustive = false;
};

int cmd_components(const RunConfig& cfg, std::ostream& out, const KneserArgs& args) {
  const auto params = make_params(args.n, args.r);
  require_within_budget(params, cfg.enumeration());
  Family forbidden(params.n, params.r);
  if (!args.c_file.empty()) forbidden = load_family(args.c_file, params);
  const auto labels = components_avoiding(params, forbidden, cfg.enumeration());
  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("kneser components");
      doc["params"] = params_json(params);
      doc["forbidden_size"] = forbidden.size();
      doc["component_count"] = labels.component_count;
      Json comps = Json::array();
      for (int id = 0; id < labels.component_count; ++id) {
        comps.push_back(Json{{"id", id}, {"size", labels.component_sizes[id]}, {"sets", family_json(labels.component(id))}});
      }
      doc["components"] = std::move(comps);
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << "set,component_id\n";
      for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        if (labels.labels[i] == ComponentLabeling::kForbidden) continue;
        out << quoted(RSet(canonical_unrank(i, params.r), params.n)) << ',' << labels.labels[i] << '\n';
      }
      break;
    case Format::text:
      text_params(out, params);
      out << "forbidden: " << forbidden.size() << '\n';
      out << "components: " << labels.component_count << '\n';
      for (int id = 0; id < labels.component_count; ++id) {
        out << "component " << id << " (size " << labels.component_sizes[id] << "): " << list_sets(labels.component(id))
            << '\n';
      }
      break;
  }
  return kSuccess;
}

int cmd_mincut(const RunConfig& cfg, std::ostream& out, const KneserArgs& args) {
  const auto params = make_params(args.n, args.r);
  require_within_budget(params, cfg.enumeration());
  const int max_size = args.max_size >= 0 ? args.max_size : static_cast<int>(binomial(params.n, params.r));
  const auto cut = args.exhaustive ? min_disconnecting_set_exhaustive(params, max_size)
                                   : min_disconnecting_set(params, max_size);
  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("kneser mincut");
      doc["params"] = params_json(params);
      doc["max_size"] = max_size;
      doc["method"] = args.exhaustive ? "exhaustive" : "flow";
      if (cut) {
        doc["size"] = cut->size;
        doc["cut"] = family_json(cut->cut);
        doc["side_a"] = family_json(cut->side_a);
        doc["side_b"] = family_json(cut->side_b);
      } else {
        doc["size"] = nullptr;
      }
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << "set,role\n";
      if (cut) {
        for (const auto& s : cut->cut) out << quoted(s) << ",cut\n";
        for (const auto& s : cut->side_a) out << quoted(s) << ",side_a\n";
        for (const auto& s : cut->side_b) out << quoted(s) << ",side_b\n";
      }
      break;
    case Format::text:
      text_params(out, params);
      if (!cut) {
        out << "size: none (no disconnecting set of size <= " << max_size << ")\n";
        break;
      }
      out << "size: " << cut->size << '\n';
      out << "cut: " << list_sets(cut->cut) << '\n';
      out << "side_a (" << cut->side_a.size() << "): " << list_sets(cut->side_a) << '\n';
      out << "side_b (" << cut->side_b.size() << "): " << list_sets(cut->side_b) << '\n';
      break;
  }
  return kSuccess;
}

int cmd_kpartite(const RunConfig& cfg, std::ostream& out, const KneserArgs& args) {
  if (args.n != 0 && args.n != 2 * args.r) throw DomainError("kpartite requires n = 2r");
  const auto params = make_params(2 * args.r, args.r);
  const auto report = check_complete_kpartite(args.r, cfg.enumeration());
  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("kneser kpartite");
      doc["params"] = params_json(params);
      doc["k"] = report.k;
      Json parts = Json::array();
      for (const auto& [x, y] : report.parts) parts.push_back(Json::array({set_json(x), set_json(y)}));
      doc["parts"] = std::move(parts);
      doc["holds"] = report.holds;
      doc["violations"] = report.violations;
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << "part,x,complement\n";
      for (std::size_t i = 0; i < report.parts.size(); ++i) {
        out << i + 1 << ',' << quoted(report.parts[i].first) << ',' << quoted(report.parts[i].second) << '\n';
      }
      break;
    case Format::text:
      text_params(out, params);
      out << "k: " << report.k << '\n';
      for (std::size_t i = 0; i < report.parts.size(); ++i) {
        out << "part " << i + 1 << ": " << braces(report.parts[i].first) << ' ' << braces(report.parts[i].second)
            << '\n';
      }
      out << "holds: " << yes_no(report.holds) << '\n';
      for (const auto& v : report.violations) out << "violation: " << v << '\n';
      break;
  }
  return report.holds ? kSuccess : kFinding;
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out, int r) {
  const auto rep = compression_failure_scenario(r);
  const auto collision = rep.standard_collision ? to_string(*rep.standard_collision) : std::string{};
  switch (cfg.fmt()) {
    case Format::json: {
      Json doc = document("counterexample");
      doc["params"] = params_json(make_params(rep.n, rep.r));
      doc["A"] = set_json(rep.set_a);
      doc["B"] = set_json(rep.set_b);
      doc["C"] = set_json(rep.set_c);
      doc["shifted_C"] = set_json(rep.shifted_c);
      doc["family_a"] = family_json(rep.family_a);
      doc["family_b"] = family_json(rep.family_b);
      doc["inputs_disjoint"] = rep.inputs_disjoint;
      doc["inputs_cross_intersecting"] = rep.inputs_cross_intersecting;
      doc["standard_a"] = family_json(rep.standard_a);
      doc["standard_b"] = family_json(rep.standard_b);
      doc["standard_breaks_disjointness"] = rep.standard_breaks_disjointness;
      doc["standard_collision"] = rep.standard_collision ? set_json(*rep.standard_collision) : Json(nullptr);
      doc["modified_a"] = family_json(rep.modified_a);
      doc["modified_b"] = family_json(rep.modified_b);
      doc["modified_breaks_cross_intersection"] = rep.modified_breaks_cross_intersection;
      doc["modified_keeps_disjointness"] = rep.modified_keeps_disjointness;
      doc["both_failures_reproduced"] = rep.both_failures_reproduced();
      emit(out, doc);
      break;
    }
    case Format::csv:
      out << "r,A,B,C,shifted_C,standard_breaks_disjointness,modified_breaks_cross_intersection\n";
      out << rep.r << ',' << quoted(rep.set_a) << ',' << quoted(rep.set_b) << ',' << quoted(rep.set_c) << ','
          << quoted(rep.shifted_c) << ',' << yes_no(rep.standard_breaks_disjointness) << ','
          << yes_no(rep.modified_breaks_cross_intersection) << '\n';
      break;
    case Format::text:
      text_params(out, make_params(rep.n, rep.r));
      out << "A: " << to_string(rep.set_a) << "\nB: " << to_string(rep.set_b) << "\nC: " << to_string(rep.set_c)
          << "\ndelta_1_2(C): " << to_string(rep.shifted_c) << '\n';
      out << "family_a: " << list_sets(rep.family_a) << "\nfamily_b: " << list_sets(rep.family_b) << '\n';
      out << "inputs disjoint: " << yes_no(rep.inputs_disjoint)
          << "\ninputs cross-intersecting: " << yes_no(rep.inputs_cross_intersecting) << '\n';
      out << "standard: a=" << list_sets(rep.standard_a) << " b=" << list_sets(rep.standard_b) << '\n';
      out << "standard breaks disjointness: " << yes_no(rep.standard_breaks_disjointness);
      if (!collision.empty()) out << " (shared set {" << collision << "})";
      out << '\n';
      out << "modified: a=" << list_sets(rep.modified_a) << " b=" << list_sets(rep.modified_b) << '\n';
      out << "modified breaks cross-intersection: " << yes_no(rep.modified_breaks_cross_intersection) << '\n';
      out << "both failures reproduced: " << yes_no(rep.both_failures_reproduced()) << '\n';
      break;
  }
  return rep.both_failures_reproduced() ? kSuccess : kFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint cross-intersecting families: bounds, chains, constructions and Kneser-graph analyses",
               "kneserlab"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Write the report to this file instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for randomized inputs")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Maximum C(n,r) to enumerate")
      ->envname("KNESERLAB_BUDGET")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate C(n,r) - C(l,p), optionally with the exact maximum");
  bound_cmd->add_option("--n", bound.n, "Ground set size")->required();
  bound_cmd->add_option("--r", bound.r, "Set size")->required();
  bound_cmd->add_flag("--exact", bound.exact, "Compute the exact maximum via minimum disconnecting sets");
  bound_cmd->add_option("--witness-dir", bound.witness_dir, "Write the optimal pair here");

  std::string verify_a;
  std::string verify_b;
  auto* verify_cmd = app.add_subcommand("verify", "Check a pair of family files against the bound");
  verify_cmd->add_option("file_a", verify_a, "Family A")->required();
  verify_cmd->add_option("file_b", verify_b, "Family B")->required();

  ChainArgs chain;
  auto* chain_cmd = app.add_subcommand("chain", "Build and certify a chain of pairwise-disjoint steps");
  chain_cmd->add_option("--n", chain.n, "Ground set size")->required();
  chain_cmd->add_option("--r", chain.r, "Set size")->required();
  chain_cmd->add_option("--a", chain.a, "Start set, e.g. 1,2,3")->required();
  chain_cmd->add_option("--b", chain.b, "End set")->required();
  chain_cmd->add_option("--c", chain.c_file, "Forbidden family file");
  chain_cmd->add_option("--random-c", chain.random_c, "Forbid this many random sets (uses --seed)");
  chain_cmd->add_flag("--oracle", chain.oracle, "Fall back to BFS when the construction does not apply");
  chain_cmd->add_flag("--greedy", chain.greedy, "Keep the first admissible candidate at every step");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a construction as two family files");
  construct_cmd->add_option("name", construct.name, "star_partition | large_r_pair | pair_partition")->required();
  construct_cmd->add_option("--n", construct.n, "Ground set size");
  construct_cmd->add_option("--r", construct.r, "Set size")->required();
  construct_cmd->add_option("--center", construct.center, "Star center")->capture_default_str();
  construct_cmd->add_option("--rule", construct.rule, "first-half | alternating | singleton-vs-rest")
      ->capture_default_str();
  construct_cmd->add_option("--parts", construct.parts, "Selected complement-pair parts, e.g. 1,2");
  construct_cmd->add_option("--out-dir", construct.out_dir, "Directory for the family files")->capture_default_str();

  KneserArgs kneser;
  auto* kneser_cmd = app.add_subcommand("kneser", "Analyses of the disjointness graph on r-sets");
  kneser_cmd->fallthrough();
  kneser_cmd->require_subcommand(1);
  kneser_cmd->add_option("--n", kneser.n, "Ground set size");
  kneser_cmd->add_option("--r", kneser.r, "Set size")->required();
  auto* components_cmd = kneser_cmd->add_subcommand("components", "Component labeling avoiding a forbidden family");
  components_cmd->add_option("--c", kneser.c_file, "Forbidden family file");
  auto* mincut_cmd = kneser_cmd->add_subcommand("mincut", "Minimum disconnecting set with witness split");
  mincut_cmd->add_option("--max-size", kneser.max_size, "Largest cut to look for");
  mincut_cmd->add_flag("--exhaustive", kneser.exhaustive, "Use direct subset search instead of max-flow");
  auto* kpartite_cmd = kneser_cmd->add_subcommand("kpartite", "Check the complete k-partite structure at n = 2r");

  int counter_r = 0;
  auto* counter_cmd = app.add_subcommand("counterexample", "Show how compression breaks a disjoint pair");
  counter_cmd->add_option("--r", counter_r, "Set size (>= 2)")->required();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Bound table over a grid of (n, r)");
  scan_cmd->add_option("--grid", scan_args.grid, "Grid points n:r");
  scan_cmd->add_option("--r-min", scan_args.r_min, "Smallest r of the generated grid")->capture_default_str();
  scan_cmd->add_option("--r-max", scan_args.r_max, "Largest r of the generated grid");
  scan_cmd->add_option("--l-max", scan_args.l_max, "Largest l = n - 2r of the generated grid");
  scan_cmd->add_flag("--exact", scan_args.exact, "Compute exact maxima");
  scan_cmd->add_option("--threads", scan_args.threads, "Worker threads (0: hardware)");
  scan_cmd->add_option("--witness-dir", scan_args.witness_dir, "Write optimal pairs here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kDomainError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << " for writing\n";
      return kDomainError;
    }
    sink = &file;
  }

  try {
    if (bound_cmd->parsed()) return cmd_bound(cfg, *sink, bound);
    if (verify_cmd->parsed()) return cmd_verify(cfg, *sink, verify_a, verify_b);
    if (chain_cmd->parsed()) return cmd_chain(cfg, *sink, err, chain);
    if (construct_cmd->parsed()) return cmd_construct(cfg, *sink, construct);
    if (counter_cmd->parsed()) return cmd_counterexample(cfg, *sink, counter_r);
    if (scan_cmd->parsed()) return cmd_scan(cfg, *sink, scan_args);
    if (kneser_cmd->parsed()) {
      if (kpartite_cmd->parsed()) return cmd_kpartite(cfg, *sink, kneser);
      if (kneser.n == 0) throw DomainError("kneser " + std::string(components_cmd->parsed() ? "components" : "mincut") +
                                           " requires --n");
      if (components_cmd->parsed()) return cmd_components(cfg, *sink, kneser);
      if (mincut_cmd->parsed()) return cmd_mincut(cfg, *sink, kneser);
    }
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ChainConstructionError& e) {
    err << "proof violation: " << e.what() << '\n';
    return kProofViolation;
  } catch (const PoolExhaustedError& e) {
    err << "proof violation: " << e.what() << '\n';
    return kProofViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "error: no command given\n";
  return kDomainError;
}

}  // namespace kneserlab::cli
