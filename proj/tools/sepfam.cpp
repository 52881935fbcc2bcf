// sepfam: command-line front end for separating families of bipartitions.
//
// Exit codes: 0 success, 1 a predicate failed or two methods disagree,
// 2 usage, parse or capacity error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepfam/sepfam.hpp"

namespace {

using namespace sepfam;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Usage-class errors (bad flags, inputs outside a supported range).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("failed writing " + path);
}

void report_labels(const ParsedFamily& parsed) {
  if (!parsed.relabeled()) return;
  std::cerr << "labels:";
  for (std::size_t i = 0; i < parsed.labels.size(); ++i) {
    std::cerr << ' ' << parsed.labels[i] << "->" << i + 1;
  }
  std::cerr << '\n';
}

std::string prufer_text(const PruferSequence& s) {
  std::string out;
  for (unsigned v : s.seq) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string family_line(const Family& f, const std::string& format) {
  if (format == "doc") return family_to_json(f).dump();
  return family_to_compact(f);
}

// ---------------------------------------------------------------- check

struct CheckOptions {
  std::string input;
  bool minimal = false;
  std::optional<unsigned> n;
};

int run_check(const CheckOptions& opt) {
  const auto parsed = parse_family_text(read_input(opt.input), opt.n);
  report_labels(parsed);
  const bool sep = is_separating(parsed.family);
  std::string line = std::string("separating: ") + (sep ? "yes" : "no");
  bool ok = sep;
  if (opt.minimal) {
    const bool min = is_minimal_separating(parsed.family);
    line += std::string(", minimal: ") + (min ? "yes" : "no");
    ok = ok && min;
  }
  std::cout << line << '\n';
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- map

struct MapOptions {
  std::string direction;
  std::string input;
  std::optional<unsigned> n;
  std::string format;
};

int run_map(const MapOptions& opt) {
  const std::string text = read_input(opt.input);
  if (opt.direction == "family-to-tree") {
    const auto parsed = parse_family_text(text, opt.n);
    report_labels(parsed);
    const Family& f = parsed.family;
    if (f.n() < 2 || f.size() != f.n() - 1) {
      std::cerr << "error: family has " << f.size() << " members; a maximum-size minimal family on "
                << f.n() << " elements has " << (f.n() ? f.n() - 1 : 0) << '\n';
      return kFailed;
    }
    if (!is_minimal_separating(f)) {
      std::cerr << "error: family is not a minimal separating family\n";
      return kFailed;
    }
    const LabeledTree tree(phi_forward(f));
    const std::string format = opt.format.empty() ? "edges" : opt.format;
    if (format == "edges") {
      std::cout << format_edges(tree) << '\n';
    } else if (format == "prufer") {
      std::cout << prufer_text(prufer_encode(tree)) << '\n';
    } else {
      throw UsageError("family-to-tree output format must be edges or prufer");
    }
    return kOk;
  }

  std::vector<Edge> edges;
  try {
    edges = parse_edge_list(text);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  unsigned n = opt.n.value_or(0);
  if (!opt.n) {
    for (const Edge& e : edges) n = std::max(n, e.second);
  }
  if (n < 2) {
    std::cerr << "error: a tree needs at least two vertices\n";
    return kFailed;
  }
  std::optional<LabeledTree> tree;
  try {
    tree.emplace(n, edges);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  const Family f = phi_inverse(*tree);
  const std::string format = opt.format.empty() ? "doc" : opt.format;
  if (format == "doc") {
    std::cout << family_to_json(f).dump(2) << '\n';
  } else if (format == "compact") {
    std::cout << family_to_compact(f) << '\n';
  } else {
    throw UsageError("tree-to-family output format must be doc or compact");
  }
  return kOk;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions {
  std::string kind;
  unsigned n = 0;
  std::optional<unsigned> size;
  bool proper = false;
  bool minimal = false;
  std::optional<std::uint64_t> limit;
  std::string format;
};

int run_enumerate(const EnumerateOptions& opt) {
  std::uint64_t total = 0;
  auto emit = [&](const std::string& line) {
    if (!opt.limit || total < *opt.limit) std::cout << line << '\n';
    ++total;
  };
  if (opt.kind == "trees") {
    const std::string format = opt.format.empty() ? "edges" : opt.format;
    if (format != "edges" && format != "prufer") throw UsageError("trees format must be edges or prufer");
    PruferOdometer seqs(opt.n);
    while (auto s = seqs.next()) {
      emit(format == "edges" ? format_edges(prufer_decode(*s)) : prufer_text(*s));
    }
  } else if (opt.kind == "minimal-max-families") {
    const std::string format = opt.format.empty() ? "compact" : opt.format;
    if (format != "compact" && format != "doc") throw UsageError("family format must be compact or doc");
    auto stream = enumerate_minimal_max_families(opt.n);
    while (auto f = stream.next()) emit(family_line(*f, format));
  } else {
    const std::string format = opt.format.empty() ? "compact" : opt.format;
    if (format != "compact" && format != "doc") throw UsageError("family format must be compact or doc");
    check_oracle_ground(opt.n);
    const unsigned pool = (1u << (opt.n - 1)) - (opt.proper ? 1 : 0);
    const unsigned lo = opt.size.value_or(0);
    const unsigned hi = opt.size.value_or(pool);
    for (unsigned k = lo; k <= hi; ++k) {
      for (const auto& f : brute_separating_families(opt.n, k, opt.proper, opt.minimal)) {
        emit(family_line(f, format));
      }
    }
  }
  std::cout << "total: " << total << '\n';
  return kOk;
}

// ---------------------------------------------------------------- count

struct CountOptions {
  std::string quantity;
  std::optional<unsigned> n;
  std::optional<std::uint64_t> k;
  std::string method = "v1";
  bool proper = false;
};

unsigned need_n(const CountOptions& opt) {
  if (!opt.n) throw UsageError(opt.quantity + " needs --n");
  return *opt.n;
}

std::uint64_t need_k(const CountOptions& opt) {
  if (!opt.k) throw UsageError(opt.quantity + " needs --k");
  return *opt.k;
}

// Prints "v1: a, v2: b, brute: c" (or the single value) and returns kFailed
// when the printed values disagree.
int print_methods(const std::vector<std::pair<std::string, std::string>>& values, bool all) {
  if (values.empty()) throw UsageError("no method applies to these arguments");
  if (!all) {
    std::cout << values.front().second << '\n';
    return kOk;
  }
  bool agree = true;
  std::string line;
  for (const auto& [name, v] : values) {
    if (!line.empty()) line += ", ";
    line += name + ": " + v;
    agree = agree && v == values.front().second;
  }
  std::cout << line << '\n';
  if (!agree) {
    std::cerr << "error: methods disagree\n";
    return kFailed;
  }
  return kOk;
}

int run_count(const CountOptions& opt) {
  const bool all = opt.method == "all";
  auto wants = [&](const char* m) { return all || opt.method == m; };
  std::vector<std::pair<std::string, std::string>> values;

  if (opt.quantity == "tau" || opt.quantity == "sigma") {
    const bool tau = opt.quantity == "tau";
    const unsigned n = need_n(opt);
    const std::uint64_t k = need_k(opt);
    require_ground(n);
    auto note = [](const Count& c) {
      if (c.forced) std::cerr << "note: outside the formula range; zero is forced\n";
      if (!c.exact()) std::cerr << "warning: closed form did not divide exactly\n";
    };
    if (wants("v1")) {
      const Count c = tau ? tau_v1(n, k) : sigma_v1(n, k);
      if (!all) note(c);
      values.emplace_back("v1", to_decimal(c.value));
    }
    if (wants("v2")) {
      const bool in_domain = tau ? (k >= 2 && !reaches_bipartitions(n, k)) || k == 0 ||
                                       exceeds_bipartitions(n, k)
                                 : true;
      if (in_domain || !all) {
        const Count c = tau ? tau_v2(n, k) : sigma_v2(n, k);
        if (!all) note(c);
        values.emplace_back("v2", to_decimal(c.value));
      }
    }
    if (wants("brute")) {
      if (n <= kMaxOracleGround) {
        const std::uint64_t pool = (std::uint64_t{1} << (n - 1)) - (tau ? 0 : 1);
        values.emplace_back("brute", k > pool ? "0"
                                              : to_decimal(brute_count_separating(
                                                    n, static_cast<unsigned>(k), !tau)));
      } else if (!all) {
        check_oracle_ground(n);
      }
    }
  } else if (opt.quantity == "min-size") {
    std::cout << min_separating_size(need_n(opt)) << '\n';
    return kOk;
  } else if (opt.quantity == "min-size-count") {
    const unsigned n = need_n(opt);
    const unsigned m = min_separating_size(n);
    if (wants("v1")) values.emplace_back("v1", to_decimal(count_min_size_families(n)));
    if (wants("v2")) {
      if (m >= 2 && !reaches_bipartitions(n, m)) {
        values.emplace_back("v2", to_decimal(tau_v2(n, m).value));
      } else if (!all) {
        values.emplace_back("v2", to_decimal(tau_v2(n, m).value));
      }
    }
    if (wants("brute")) {
      if (n <= kMaxOracleGround) {
        values.emplace_back("brute", to_decimal(brute_count_separating(n, m, false)));
      } else if (!all) {
        check_oracle_ground(n);
      }
    }
  } else if (opt.quantity == "min-ground") {
    const std::uint64_t k = need_k(opt);
    auto describe = [&](unsigned size, std::optional<BigInt> count) {
      std::string s = "size " + std::to_string(size);
      if (count) s += ", count " + to_decimal(*count);
      return s;
    };
    if (wants("v1")) {
      const unsigned size = opt.proper ? min_ground_size_proper(k) : min_ground_size_arbitrary(k);
      std::optional<BigInt> count;
      if (opt.proper) {
        count = count_min_ground_proper(k);
      } else if (k >= 2) {
        count = count_min_ground_arbitrary(k);
      }
      values.emplace_back("v1", describe(size, count));
    }
    if (wants("brute")) {
      std::optional<std::string> found;
      for (unsigned n = 2; n <= kMaxOracleGround && !found; ++n) {
        const std::uint64_t pool = (std::uint64_t{1} << (n - 1)) - (opt.proper ? 1 : 0);
        if (k > pool) continue;
        const BigInt c = brute_count_separating(n, static_cast<unsigned>(k), opt.proper);
        if (c != 0) found = describe(n, c);
      }
      if (!opt.proper && k == 1) found = describe(1, std::nullopt);
      if (found) {
        values.emplace_back("brute", *found);
      } else if (!all) {
        throw CapacityError("brute-force search for k = " + std::to_string(k) +
                            " needs a ground set beyond n = " + std::to_string(kMaxOracleGround));
      }
    }
  } else if (opt.quantity == "stirling1" || opt.quantity == "stirling2") {
    const bool first = opt.quantity == "stirling1";
    const unsigned k = need_n(opt);
    const std::uint64_t i64 = need_k(opt);
    const unsigned i = static_cast<unsigned>(std::min<std::uint64_t>(i64, k + 1));
    if (k >= kMaxStirlingOrder) throw CapacityError("Stirling order too large");
    if (wants("v1")) {
      values.emplace_back("v1", to_decimal(first ? stirling1_unsigned(k, i) : stirling2(k, i)));
    }
    if (wants("brute")) {
      if (k <= kMaxBruteStirling) {
        values.emplace_back("brute", to_decimal(first ? brute_stirling1_unsigned(k, i)
                                                      : brute_stirling2(k, i)));
      } else if (!all) {
        throw CapacityError("brute Stirling enumeration limited to order " +
                            std::to_string(kMaxBruteStirling));
      }
    }
    if (opt.method == "v2") throw UsageError("Stirling numbers have no v2 method");
  } else {
    throw UsageError("unknown quantity " + opt.quantity);
  }
  return print_methods(values, all);
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  unsigned n_max = 5;
  unsigned k_max = 8;
  std::string out;
  std::string perturb;
};

Formulas build_formulas(unsigned n_max, unsigned k_max, const std::string& perturb) {
  const unsigned order = verify_order(std::min(n_max, kMaxVerifyGround),
                                      std::min(k_max, kMaxVerifySize));
  Formulas f(order);
  if (perturb.empty()) return f;
  // kind:k:i, adds one to that entry
  std::istringstream in(perturb);
  std::string kind, ks, is;
  if (!std::getline(in, kind, ':') || !std::getline(in, ks, ':') || !std::getline(in, is)) {
    throw UsageError("--perturb-stirling expects kind:k:i, e.g. first:4:2");
  }
  const unsigned k = static_cast<unsigned>(std::stoul(ks));
  const unsigned i = static_cast<unsigned>(std::stoul(is));
  if (kind == "first") {
    return Formulas(f.first_kind().with_entry(k, i, f.first_kind().at(k, i) + 1), f.second_kind());
  }
  if (kind == "second") {
    return Formulas(f.first_kind(), f.second_kind().with_entry(k, i, f.second_kind().at(k, i) + 1));
  }
  throw UsageError("Stirling kind must be first or second");
}

int run_verify(const VerifyOptions& opt) {
  const Formulas f = build_formulas(opt.n_max, opt.k_max, opt.perturb);
  const ValidationReport report = cross_validate(opt.n_max, opt.k_max, f);
  const auto lines = summarize(report);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& line : lines) {
    if (line.rfind("warning: ", 0) == 0) continue;
    std::cout << line << '\n';
  }
  if (!opt.out.empty()) write_output(opt.out, report_to_json(report).dump(2) + "\n");
  return report.passed() ? kOk : kFailed;
}

// ---------------------------------------------------------------- table

struct TableOptions {
  std::string quantity;
  unsigned n_max = 5;
  unsigned k_max = 8;
  std::string out;
};

int run_table(const TableOptions& opt) {
  const bool tau = opt.quantity == "tau";
  if (opt.n_max < 2) throw UsageError("--n-max must be at least 2");
  if (opt.k_max < 1) throw UsageError("--k-max must be at least 1");
  const Formulas f(required_order(opt.n_max, opt.k_max + 1));
  nlohmann::json rows = nlohmann::json::array();
  bool trusted = true;
  for (unsigned n = 2; n <= opt.n_max; ++n) {
    nlohmann::json cells = nlohmann::json::array();
    const bool check = n <= kMaxOracleGround;
    for (std::uint64_t k = 1; k <= opt.k_max; ++k) {
      const Count c = tau ? f.tau_v1(n, k) : f.sigma_v1(n, k);
      if (c.forced) {
        cells.push_back("0 (forced)");
        continue;
      }
      if (!c.exact()) {
        std::cerr << "error: inexact division at n=" << n << ", k=" << k << '\n';
        trusted = false;
      }
      if (check) {
        const BigInt brute = brute_count_separating(n, static_cast<unsigned>(k), !tau);
        if (brute != c.value) {
          std::cerr << "error: " << opt.quantity << "(" << n << "," << k << ") = " << c.value
                    << " but brute force gives " << brute << '\n';
          trusted = false;
        }
      }
      cells.push_back(to_decimal(c.value));
    }
    rows.push_back({{"n", n}, {"oracle_checked", check}, {"cells", std::move(cells)}});
  }
  const nlohmann::json doc{{"quantity", opt.quantity},
                           {"n_max", opt.n_max},
                           {"k_max", opt.k_max},
                           {"k_first", 1},
                           {"rows", std::move(rows)}};
  const std::string text = doc.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_output(opt.out, text);
  }
  return trusted ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating families of bipartitions: predicates, tree bijection, exact counts"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* cmd_check = app.add_subcommand("check", "Test whether a family is separating (and minimal)");
  cmd_check->add_option("--input", check.input, "Family document or compact line ('-' for stdin)")
      ->required();
  cmd_check->add_flag("--minimal", check.minimal, "Also require minimality");
  cmd_check->add_option("--n", check.n, "Ground-set size for an empty compact family");

  MapOptions map;
  auto* cmd_map = app.add_subcommand("map", "Map between maximum minimal families and spanning trees");
  cmd_map->add_option("direction", map.direction, "family-to-tree or tree-to-family")
      ->required()
      ->check(CLI::IsMember({"family-to-tree", "tree-to-family"}));
  cmd_map->add_option("--input", map.input, "Input file ('-' for stdin)")->required();
  cmd_map->add_option("--n", map.n, "Ground-set size (defaults to the largest label)");
  cmd_map->add_option("--format", map.format, "doc|compact|edges|prufer")
      ->check(CLI::IsMember({"doc", "compact", "edges", "prufer"}));

  EnumerateOptions en;
  auto* cmd_enum = app.add_subcommand("enumerate", "Stream trees or families, one per line");
  cmd_enum->add_option("kind", en.kind, "trees, minimal-max-families or families")
      ->required()
      ->check(CLI::IsMember({"trees", "minimal-max-families", "families"}));
  cmd_enum->add_option("--n", en.n, "Ground-set size")->required();
  cmd_enum->add_option("--size", en.size, "Family size (families only)");
  cmd_enum->add_flag("--proper", en.proper, "Proper bipartitions only (families only)");
  cmd_enum->add_flag("--minimal", en.minimal, "Minimal separating families only (families only)");
  cmd_enum->add_option("--limit", en.limit, "Print at most this many items");
  cmd_enum->add_option("--format", en.format, "doc|compact|edges|prufer")
      ->check(CLI::IsMember({"doc", "compact", "edges", "prufer"}));

  CountOptions count;
  auto* cmd_count = app.add_subcommand("count", "Exact counts as decimal strings");
  cmd_count->add_option("quantity", count.quantity,
                        "tau, sigma, min-size, min-size-count, min-ground, stirling1, stirling2")
      ->required()
      ->check(CLI::IsMember(
          {"tau", "sigma", "min-size", "min-size-count", "min-ground", "stirling1", "stirling2"}));
  cmd_count->add_option("--n", count.n, "Ground-set size (Stirling: order k)");
  cmd_count->add_option("--k", count.k, "Family size (Stirling: number of blocks/cycles)");
  cmd_count->add_option("--method", count.method, "v1|v2|brute|all")
      ->check(CLI::IsMember({"v1", "v2", "brute", "all"}));
  cmd_count->add_flag("--proper", count.proper, "min-ground: proper bipartitions");

  VerifyOptions verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run every identity and oracle cross-check");
  cmd_verify->add_option("--n-max", verify.n_max, "Largest ground set");
  cmd_verify->add_option("--k-max", verify.k_max, "Largest family size");
  cmd_verify->add_option("--out", verify.out, "Write the JSON report here");
  cmd_verify->add_option("--perturb-stirling", verify.perturb,
                         "Testing aid: add 1 to one Stirling entry, as kind:k:i");

  TableOptions table;
  auto* cmd_table = app.add_subcommand("table", "Bulk (n,k) table of tau or sigma");
  cmd_table->add_option("quantity", table.quantity, "tau or sigma")
      ->required()
      ->check(CLI::IsMember({"tau", "sigma"}));
  cmd_table->add_option("--n-max", table.n_max, "Largest ground set");
  cmd_table->add_option("--k-max", table.k_max, "Largest family size");
  cmd_table->add_option("--out", table.out, "Write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmd_check) return run_check(check);
    if (*cmd_map) return run_map(map);
    if (*cmd_enum) return run_enumerate(en);
    if (*cmd_count) return run_count(count);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_table) return run_table(table);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
