// eil: graph invariants, regularity of powers of edge ideals, and the bound
// checks built on them.
//
// Exit status: 0 success, 1 usage or input error, 2 budget exceeded,
// 3 consistency violation (a bound failed or two engines disagree).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "eil/bounds.hpp"
#include "eil/constructions.hpp"
#include "eil/graph_io.hpp"
#include "eil/scan.hpp"
#include "eil/serialize.hpp"

namespace {

using namespace eil;

constexpr int kUsage = 1;
constexpr int kResource = 2;
constexpr int kConsistency = 3;

struct GraphInput {
  std::string path;
  std::string format;

  Graph load() const {
    const GraphFormat f = format.empty() ? guess_format(path) : parse_format_name(format);
    if (path == "-") return read_graph(std::cin, f);
    return read_graph_file(path, f);
  }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graphfile", in.path, "Graph file, or - for stdin")->required();
  cmd->add_option("--format", in.format, "graph6 | edgelist | json (default: from extension)")
      ->check(CLI::IsMember({"graph6", "edgelist", "json"}));
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw InputError("cannot write to '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_invariants(const GraphInput& in, const Budget& budget) {
  const Graph g = in.load();
  std::cout << to_json(compute_invariants(g, budget)).dump(2) << "\n";
  return 0;
}

int run_regularity(const GraphInput& in, std::size_t power, const std::string& field, const Budget& budget) {
  const Graph g = in.load();
  const RegularityResult r = regularity_of_power(g, power, parse_field(field), budget);
  Json j = {{"s", power},
            {"generators", r.generators},
            {"polarized_variables", r.polarized_variables},
            {"reg_ideal", r.reg_ideal()},
            {"reg_quotient", r.reg_quotient()},
            {"betti", to_json(r.betti)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_verify(const GraphInput& in, std::size_t power, const std::string& field, const Budget& budget) {
  const Graph g = in.load();
  const BoundsReport r = evaluate_bounds(g, power, parse_field(field), budget, in.path);
  std::cout << to_json(r).dump(2) << "\n";
  return r.any_violated() ? kConsistency : 0;
}

int run_witness(const GraphInput& in, const std::string& lemma, const Budget& budget) {
  const Graph g = in.load();
  const WitnessRecord w = hereditary_witness_search(g, parse_hereditary_invariant(lemma), budget);
  std::cout << to_json(w).dump(2) << "\n";
  return w.found ? 0 : kConsistency;
}

std::size_t to_size(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw InputError(std::string("construct: ") + what + " must be a nonnegative integer, got '" + text + "'");
  }
}

int run_construct(const std::vector<std::string>& args, const std::string& format, const std::string& out_path) {
  if (args.empty()) throw InputError("construct: missing kind");
  const std::string& kind = args[0];
  auto need = [&](std::size_t n, const char* usage) {
    if (args.size() != n + 1) throw InputError(std::string("usage: construct ") + usage);
  };
  Graph g;
  if (kind == "hn") {
    need(1, "hn N");
    g = build_Hn(to_size(args[1], "N"));
  } else if (kind == "whisker") {
    need(1, "whisker GRAPHFILE");
    g = whisker(GraphInput{args[1], ""}.load());
  } else if (kind == "gn") {
    need(4, "gn HOSTFILE U N X");
    g = build_Gn(GraphInput{args[1], ""}.load(), static_cast<Vertex>(to_size(args[2], "U")), to_size(args[3], "N"),
                 static_cast<Vertex>(to_size(args[4], "X")));
  } else {
    need(1, "cycle|path|complete|star|empty N");
    g = build_standard(parse_standard_kind(kind), to_size(args[1], "N"));
  }
  Output out(out_path);
  out.stream() << format_graph(g, parse_format_name(format));
  return 0;
}

int run_scan(const std::optional<std::size_t>& exhaustive, const std::string& random, const std::string& family,
             std::size_t smin, std::size_t smax, const std::string& field, const std::string& out_path,
             const Budget& budget) {
  ScanConfig config;
  const int chosen = (exhaustive ? 1 : 0) + (random.empty() ? 0 : 1) + (family.empty() ? 0 : 1);
  if (chosen != 1) throw InputError("scan: give exactly one of --exhaustive, --random, --family");
  if (exhaustive) {
    config.source = ScanSource::exhaustive;
    config.max_n = *exhaustive;
  } else if (!random.empty()) {
    config.source = ScanSource::random;
    std::vector<std::string> parts;
    std::stringstream ss(random);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw InputError("scan: --random expects SEED,N,COUNT");
    config.seed = to_size(parts[0], "SEED");
    config.n = to_size(parts[1], "N");
    config.count = to_size(parts[2], "COUNT");
  } else {
    config.source = ScanSource::family;
    config.family = family;
  }
  config.s_min = smin;
  config.s_max = std::max(smin, smax);
  config.field = parse_field(field);
  config.budget = budget;
  Output out(out_path);
  const ScanSummary summary = scan(config, [&](const BoundsReport& r) {
    out.stream() << to_json(r).dump() << "\n";
    out.stream().flush();
  });
  out.stream() << to_json(summary).dump() << "\n";
  return summary.violated > 0 ? kConsistency : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph invariants and regularity of powers of edge ideals"};
  app.require_subcommand(1);

  std::optional<std::size_t> budget_vertices;
  std::optional<std::size_t> budget_subset;
  app.add_option("--budget-vertices", budget_vertices, "Vertex budget (default 24, or EIL_BUDGET_VERTICES)");

  GraphInput inv_in;
  auto* inv = app.add_subcommand("invariants", "Print every graph invariant with witnesses as JSON");
  add_graph_input(inv, inv_in);

  GraphInput reg_in;
  std::size_t reg_power = 1;
  std::string reg_field = "gf2";
  auto* reg = app.add_subcommand("regularity", "Exact reg(I(G)^s) and the Betti table of S/I(G)^s");
  add_graph_input(reg, reg_in);
  reg->add_option("--power", reg_power, "Power s >= 1")->required()->check(CLI::PositiveNumber);
  reg->add_option("--field", reg_field, "gf2 | rational")->check(CLI::IsMember({"gf2", "rational"}));
  reg->add_option("--budget", budget_subset, "Maximum polarized variables (default 20, or EIL_BUDGET_SUBSET)");

  GraphInput ver_in;
  std::size_t ver_power = 1;
  std::string ver_field = "gf2";
  auto* ver = app.add_subcommand("verify", "Evaluate every bound on reg(I(G)^s)");
  add_graph_input(ver, ver_in);
  ver->add_option("--power", ver_power, "Power s >= 1")->required()->check(CLI::PositiveNumber);
  ver->add_option("--field", ver_field, "gf2 | rational")->check(CLI::IsMember({"gf2", "rational"}));
  ver->add_option("--budget", budget_subset, "Maximum polarized variables");

  GraphInput wit_in;
  std::string lemma;
  auto* wit = app.add_subcommand("witness", "Find w with f(G-w) <= f(G) and f(G-N[w]) < f(G), f = invariant + 1");
  add_graph_input(wit, wit_in);
  wit->add_option("--lemma", lemma, "cochord | minmatch | minmatch-k2c5")
      ->required()
      ->check(CLI::IsMember({"cochord", "minmatch", "minmatch-k2c5"}));

  std::vector<std::string> con_args;
  std::string con_format = "graph6";
  std::string con_out;
  auto* con = app.add_subcommand("construct", "Build hn N | whisker FILE | gn HOST U N X | cycle|path|complete|star N");
  con->add_option("args", con_args, "Kind followed by its parameters")->required();
  con->add_option("--format", con_format, "Output format")->check(CLI::IsMember({"graph6", "edgelist", "json"}));
  con->add_option("-o,--output", con_out, "Output file (default stdout)");

  std::optional<std::size_t> scan_exhaustive;
  std::string scan_random;
  std::string scan_family;
  std::size_t scan_smin = 1;
  std::size_t scan_smax = 1;
  std::string scan_field = "gf2";
  std::string scan_out;
  auto* sc = app.add_subcommand("scan", "Stream one JSON report per (graph, s), then a summary line");
  sc->add_option("--exhaustive", scan_exhaustive, "All connected graphs on at most N vertices");
  sc->add_option("--random", scan_random, "SEED,N,COUNT");
  sc->add_option("--family", scan_family, "NAME:K or NAME:A-B, e.g. whisker-hn:1, cycle:3-7");
  sc->add_option("--smin", scan_smin, "Smallest power")->check(CLI::PositiveNumber);
  sc->add_option("--smax", scan_smax, "Largest power")->check(CLI::PositiveNumber);
  sc->add_option("--field", scan_field, "gf2 | rational")->check(CLI::IsMember({"gf2", "rational"}));
  sc->add_option("--budget", budget_subset, "Maximum polarized variables");
  sc->add_option("-o,--output", scan_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    Budget budget = Budget::from_environment();
    if (budget_vertices) budget.vertices = *budget_vertices;
    if (budget_subset) budget.subset = *budget_subset;
    if (budget.vertices > 64 || budget.subset > 64) throw InputError("budgets may not exceed 64");

    if (*inv) return run_invariants(inv_in, budget);
    if (*reg) return run_regularity(reg_in, reg_power, reg_field, budget);
    if (*ver) return run_verify(ver_in, ver_power, ver_field, budget);
    if (*wit) return run_witness(wit_in, lemma, budget);
    if (*con) return run_construct(con_args, con_format, con_out);
    if (*sc) {
      return run_scan(scan_exhaustive, scan_random, scan_family, scan_smin, scan_smax, scan_field, scan_out, budget);
    }
  } catch (const ResourceError& e) {
    std::cerr << "eil: resource budget exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "eil: consistency violation: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "eil: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
