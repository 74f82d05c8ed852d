// ectf: construct and certify 3-existentially-complete triangle-free graphs.
//
// Exit codes: 0 success or property holds, 1 property fails,
// 2 usage or parse error, 3 capacity exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ectf/ectf.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct InputArgs {
  std::string path;
  std::string family;
};

void add_input(CLI::App* cmd, InputArgs& in) {
  auto* file = cmd->add_option("input", in.path, "graph6 file (one graph per line)");
  auto* fam = cmd->add_option("--family", in.family, "family spec, e.g. \"albert-cycles n=5\"");
  file->excludes(fam);
  fam->excludes(file);
}

// Exactly one of the two sources must be given.
std::vector<ectf::Graph> load_input(const InputArgs& in) {
  if (in.path.empty() == in.family.empty())
    throw CLI::ValidationError("input", "give exactly one of a graph6 file or --family");
  if (!in.family.empty()) return {ectf::build_family(in.family)};
  auto graphs = ectf::read_graph6_file(in.path);
  if (graphs.empty()) throw ectf::ParseError("no graphs in '" + in.path + "'", 0);
  return graphs;
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_construct(const std::string& spec, const std::string& out) {
  const ectf::Graph g = ectf::build_family(spec);
  ectf::write_graph6_file(out, {g});
  ectf::write_label_file(out + ".labels", g);
  const auto stats = ectf::degree_stats(g);
  std::cout << "vertices " << g.order() << '\n'
            << "edges " << g.edge_count() << '\n'
            << "degree min=" << stats.min_degree << " max=" << stats.max_degree
            << " histogram=" << ectf::table_detail::degrees_string(stats)
            << (stats.regular() ? " regular" : "") << '\n';
  return kOk;
}

int cmd_check(const InputArgs& in, int k_max, const ectf::ExecOptions& exec, const std::string& format) {
  const auto graphs = load_input(in);
  bool all_hold = true;
  auto reports = nlohmann::ordered_json::array();
  for (const auto& g : graphs) {
    const auto r = ectf::certify(g, {k_max, exec});
    bool holds = r.is_3ectf;
    if (k_max < 3) {
      holds = true;
      for (int k = 1; k <= k_max; ++k) holds = holds && r.holds("e_" + std::to_string(k));
    }
    all_hold = all_hold && holds;
    if (format == "json")
      reports.push_back(ectf::to_json(r));
    else
      std::cout << ectf::to_text(r);
  }
  if (format == "json") print_json(graphs.size() == 1 ? reports[0] : reports);
  return all_hold ? kOk : kFails;
}

int cmd_mu(const InputArgs& in, int k, const std::string& mode, std::size_t samples, std::uint64_t seed,
           const ectf::ExecOptions& exec, const std::string& format) {
  const auto graphs = load_input(in);
  bool all_found = true;
  auto results = nlohmann::ordered_json::array();
  for (const auto& g : graphs) {
    const auto m = mode == "sample" ? ectf::multiplicity_sampled(g, k, samples, seed)
                                    : ectf::multiplicity(g, k, exec);
    all_found = all_found && m.value.has_value();
    if (format == "json") {
      results.push_back(ectf::to_json(m));
      continue;
    }
    std::cout << "mu_" << k << " = ";
    if (m.value)
      std::cout << *m.value;
    else
      std::cout << "none (no independent " << k << "-set)";
    if (m.sampled) std::cout << " (upper bound, " << m.samples << " samples)";
    std::cout << '\n';
    if (m.value) std::cout << "witness {" << ectf::report_detail::join(m.witness) << "}\n";
  }
  if (format == "json") print_json(graphs.size() == 1 ? results[0] : results);
  return all_found ? kOk : kFails;
}

int cmd_table(std::size_t max_size, const ectf::ExecOptions& exec, const std::string& format) {
  const auto r = ectf::run_table(max_size, exec);
  if (format == "json")
    print_json(ectf::to_json(r));
  else
    std::cout << ectf::to_text(r);
  return r.pass() ? kOk : kFails;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& kind, const std::string& dims) {
  auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size() || v == 0) throw CLI::ValidationError("--dims", "bad dimensions '" + dims + "'");
    return static_cast<std::size_t>(v);
  };
  const auto x = dims.find('x');
  if (kind == "tournament") {
    if (x != std::string::npos) throw CLI::ValidationError("--dims", "tournament dims is a vertex count");
    return {number(dims), 0};
  }
  if (x == std::string::npos) {
    const auto n = number(dims);
    return {n, n};
  }
  return {number(dims.substr(0, x)), number(dims.substr(x + 1))};
}

int cmd_shatter(const std::string& kind, const std::string& dims, std::size_t trials, std::uint64_t seed,
                const std::string& out, const ectf::ExecOptions& exec, const std::string& format) {
  const auto [a, b] = parse_dims(kind, dims);
  if (trials == 0) throw CLI::ValidationError("--trials", "must be >= 1");
  double fraction = 0;
  std::optional<std::uint64_t> trial;
  std::string instance;
  if (kind == "matrix") {
    if (a < 3 || b < 3) throw CLI::ValidationError("--dims", "matrices need at least 3 rows and columns");
    ectf::check_capacity(a * b, "matrix");
    fraction = ectf::shattered_fraction(a, b, trials, seed, exec);
    if (auto found = ectf::find_shattered_matrix(a, b, seed, trials, exec)) {
      trial = found->trial;
      instance = ectf::format_matrix(found->value);
    }
  } else {
    if (a < 4) throw CLI::ValidationError("--dims", "tournaments need at least 4 vertices");
    ectf::check_capacity(a, "tournament");
    fraction = ectf::shattered_tournament_fraction(a, trials, seed, exec);
    if (auto found = ectf::find_shattered_tournament(a, seed, trials, exec)) {
      trial = found->trial;
      instance = ectf::format_tournament(found->value);
    }
  }
  if (trial && !out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ectf::ParseError("cannot write '" + out + "'", 0);
    f << instance;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["dims"] = dims;
    j["trials"] = trials;
    j["seed"] = seed;
    j["rng"] = std::string(ectf::kRngAlgorithm);
    j["fraction"] = fraction;
    j["first_shattered_trial"] = trial ? nlohmann::ordered_json(*trial) : nlohmann::ordered_json(nullptr);
    print_json(j);
  } else {
    std::cout << kind << ' ' << dims << " trials=" << trials << " seed=" << seed << '\n'
              << "shattered fraction " << fraction << '\n';
    if (trial)
      std::cout << "first shattered instance at trial " << *trial << (out.empty() ? "" : " written to " + out)
                << '\n';
    else
      std::cout << "no shattered instance found\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify 3-existentially-complete triangle-free graphs"};
  app.require_subcommand(1);

  unsigned threads = 1;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads, 0 for all cores")->capture_default_str();
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  std::string spec, out;
  auto* construct = app.add_subcommand("construct", "build a family instance and write graph6");
  construct->add_option("spec", spec, "family spec, e.g. \"albert-cycles n=5\"")->required();
  construct->add_option("--out", out, "graph6 output path; labels go to <out>.labels")->required();

  InputArgs check_in;
  int k_max = 3;
  auto* check = app.add_subcommand("check", "certify a graph");
  add_input(check, check_in);
  check->add_option("--k", k_max, "check E_k for k up to this value")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  add_common(check);

  InputArgs mu_in;
  int mu_k = 2;
  std::string mode = "exact";
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  auto* mu = app.add_subcommand("mu", "compute the multiplicity mu_k");
  add_input(mu, mu_in);
  mu->add_option("--k", mu_k, "size of the independent sets")->check(CLI::Range(1, 16))->capture_default_str();
  mu->add_option("--mode", mode, "exact or sampled upper bound")
      ->check(CLI::IsMember({"exact", "sample"}))
      ->capture_default_str();
  mu->add_option("--samples", samples, "samples in sample mode")->capture_default_str();
  mu->add_option("--seed", seed, "seed in sample mode")->capture_default_str();
  add_common(mu);

  std::size_t max_size = 1100;
  auto* table = app.add_subcommand("table", "regression of the construction parameter table");
  table->add_option("--max-size", max_size, "largest instance order")->capture_default_str();
  add_common(table);

  std::string kind, dims = "16x16", shatter_out;
  std::size_t trials = 1000;
  std::uint64_t shatter_seed = 1;
  auto* shatter = app.add_subcommand("shatter", "sample random matrices or tournaments");
  shatter->add_option("kind", kind, "matrix or tournament")
      ->required()
      ->check(CLI::IsMember({"matrix", "tournament"}));
  shatter->add_option("--dims", dims, "RxC for matrices, vertex count for tournaments")->capture_default_str();
  shatter->add_option("--trials", trials, "number of seeded trials")->capture_default_str();
  shatter->add_option("--seed", shatter_seed, "base seed")->capture_default_str();
  shatter->add_option("--out", shatter_out, "write the first shattered instance here");
  add_common(shatter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const ectf::ExecOptions exec{threads};
  try {
    if (*construct) return cmd_construct(spec, out);
    if (*check) return cmd_check(check_in, k_max, exec, format);
    if (*mu) return cmd_mu(mu_in, mu_k, mode, samples, seed, exec, format);
    if (*table) return cmd_table(max_size, exec, format);
    if (*shatter) return cmd_shatter(kind, dims, trials, shatter_seed, shatter_out, exec, format);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ectf::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const ectf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
