// dagforge: generate labelled DAGs uniformly at random, manage count-table
// caches, and run statistical checks on DAG streams.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dagforge/baselines.hpp"
#include "dagforge/counting.hpp"
#include "dagforge/oracle.hpp"
#include "dagforge/restricted.hpp"
#include "dagforge/sample_exact.hpp"
#include "dagforge/sample_limit.hpp"
#include "dagforge/serialize.hpp"
#include "dagforge/stats.hpp"
#include "dagforge/table_io.hpp"

namespace df = dagforge;

namespace {

constexpr const char* kVersion = "dagforge 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitTableError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStatFail = 3;

df::BigRat parse_prob(const std::string& text) {
  df::BigRat p;
  if (mpq_set_str(p.get_mpq_t(), text.c_str(), 10) != 0)
    throw CLI::ValidationError("--edge-prob", "expected NUM/DEN, got '" + text + "'");
  p.canonicalize();
  if (p < 0 || p > 1) throw CLI::ValidationError("--edge-prob", "probability must be in [0,1]");
  return p;
}

df::Dag reverse_arcs(const df::Dag& d) {
  df::Dag out(d.n());
  for (auto [u, v] : d.edges()) out.set_edge(v, u);
  return out;
}

struct GenOptions {
  int nodes = 0;
  long count = 1;
  std::optional<std::uint64_t> seed;
  std::string method;  // empty = pick by size
  std::string format = "edgelist";
  bool connected = false;
  std::optional<int> max_in;
  std::optional<int> max_out_nonoutpoints;
  std::optional<int> max_children;
  std::optional<int> max_parents;
  std::optional<std::string> edge_prob;
  std::optional<long> burn_in;
  long thin = 1;
  bool prune_self_pairs = false;
  std::string tables_file;
  int n_switch = 20;
  int jobs = 1;
  bool allow_large = false;
};

std::string default_tables_path() {
  const char* env = std::getenv("DAGFORGE_TABLES");
  return env ? env : "";
}

int restriction_count(const GenOptions& o) {
  int c = 0;
  if (o.max_in) ++c;
  if (o.max_children) ++c;
  if (o.max_parents) ++c;
  if (o.edge_prob && o.method != "triangular") ++c;
  return c;
}

df::CountTable obtain_count_table(const GenOptions& o, df::TableVariant variant, int n_needed,
                                  int K, int K_n) {
  int cap = o.allow_large ? std::max(n_needed, df::kDefaultTableCap) : df::kDefaultTableCap;
  if (n_needed > cap)
    throw CLI::ValidationError(
        "--nodes", "n exceeds the table cap (" + std::to_string(df::kDefaultTableCap) +
                       "); use --method hybrid for large unrestricted DAGs, or --allow-large");
  bool explicit_file = !o.tables_file.empty();
  std::string path = explicit_file ? o.tables_file : default_tables_path();
  if (!path.empty()) {
    bool exists = std::ifstream(path).good();
    if (exists || explicit_file) {
      df::LoadedTable loaded = df::load_table_file(path);  // TableIoError on corruption
      if (loaded.count && loaded.count->variant == variant && loaded.count->n_max >= n_needed &&
          (variant == df::TableVariant::unrestricted ||
           (loaded.count->K == K &&
            (variant != df::TableVariant::max_in_out || loaded.count->K_n == K_n))))
        return std::move(*loaded.count);
      if (explicit_file)
        throw df::TableIoError("table cache " + path + " does not match the requested variant (" +
                               df::variant_name(variant) +
                               ", n_max >= " + std::to_string(n_needed) + ")");
    }
  }
  switch (variant) {
    case df::TableVariant::unrestricted: return df::build_count_table(n_needed, cap);
    case df::TableVariant::max_in:
      return df::build_restricted_table(n_needed, K, std::nullopt, cap);
    case df::TableVariant::max_in_out: return df::build_restricted_table(n_needed, K, K_n, cap);
    case df::TableVariant::max_children:
      return df::build_children_limited_table(n_needed, K, cap);
  }
  throw std::logic_error("unreachable");
}

df::WeightedTable obtain_weighted_table(const GenOptions& o, const df::BigRat& p, int n_needed) {
  int cap = o.allow_large ? std::max(n_needed, df::kDefaultTableCap) : df::kDefaultTableCap;
  if (n_needed > cap)
    throw CLI::ValidationError("--nodes", "n exceeds the table cap for weighted sampling");
  bool explicit_file = !o.tables_file.empty();
  std::string path = explicit_file ? o.tables_file : default_tables_path();
  if (!path.empty()) {
    bool exists = std::ifstream(path).good();
    if (exists || explicit_file) {
      df::LoadedTable loaded = df::load_table_file(path);
      if (loaded.weighted && loaded.weighted->p == p && loaded.weighted->n_max >= n_needed)
        return std::move(*loaded.weighted);
      if (explicit_file)
        throw df::TableIoError("table cache " + path +
                               " does not match the requested weighted table");
    }
  }
  return df::build_weighted_table(n_needed, p, cap);
}

int run_gen(const GenOptions& opts_in) {
  GenOptions o = opts_in;
  if (o.nodes < 1) throw CLI::ValidationError("--nodes", "must be >= 1");
  if (o.count < 0) throw CLI::ValidationError("--count", "must be >= 0");
  if (o.jobs < 1) throw CLI::ValidationError("--jobs", "must be >= 1");
  if (o.thin < 1) throw CLI::ValidationError("--thin", "must be >= 1");
  if (o.n_switch < 8) throw CLI::ValidationError("--n-switch", "must be >= 8");
  if (o.max_out_nonoutpoints && !o.max_in)
    throw CLI::ValidationError("--max-out-nonoutpoints", "requires --max-in");
  if (restriction_count(o) > 1)
    throw CLI::ValidationError("gen", "restrictions are mutually exclusive");

  if (o.method.empty()) {
    if (restriction_count(o) > 0 || o.connected)
      o.method = "exact";
    else
      o.method = o.nodes <= 100 ? "exact" : "hybrid";
  }
  if (o.method != "exact" && o.method != "hybrid" && o.method != "mcmc" &&
      o.method != "triangular")
    throw CLI::ValidationError("--method", "unknown method " + o.method);
  if (o.method != "exact" && restriction_count(o) > 0)
    throw CLI::ValidationError("--method", "restrictions need --method exact");
  if (o.method == "mcmc" && !o.burn_in)
    throw CLI::ValidationError(
        "--burn-in", "mcmc needs an explicit burn-in; O(n^4) steps is the usual guidance");
  if (o.method == "mcmc" && o.jobs > 1)
    throw CLI::ValidationError("--jobs", "a Markov chain is sequential; --jobs does not apply");

  df::OutputFormat format = df::parse_format(o.format);
  std::uint64_t seed = o.seed ? *o.seed : std::random_device{}();

  std::optional<df::CountTable> table;
  std::optional<df::WeightedTable> wtable;
  std::optional<df::LimitTables> limits;
  df::BigRat p_rat;
  if (o.method == "exact") {
    if (o.edge_prob) {
      p_rat = parse_prob(*o.edge_prob);
      wtable = obtain_weighted_table(o, p_rat, o.nodes);
    } else if (o.max_in && o.max_out_nonoutpoints) {
      table = obtain_count_table(o, df::TableVariant::max_in_out, o.nodes, *o.max_in,
                                 *o.max_out_nonoutpoints);
    } else if (o.max_in) {
      table = obtain_count_table(o, df::TableVariant::max_in, o.nodes, *o.max_in, 0);
    } else if (o.max_children || o.max_parents) {
      int K = o.max_children ? *o.max_children : *o.max_parents;
      table = obtain_count_table(o, df::TableVariant::max_children, o.nodes, K, 0);
    } else {
      table = obtain_count_table(o, df::TableVariant::unrestricted, o.nodes, 0, 0);
    }
  } else if (o.method == "hybrid") {
    limits = df::build_limit_tables(o.n_switch);
    table =
        obtain_count_table(o, df::TableVariant::unrestricted, std::min(o.nodes, o.n_switch), 0, 0);
  } else if (o.method == "triangular" && o.edge_prob) {
    p_rat = parse_prob(*o.edge_prob);
    if (!p_rat.get_den().fits_ulong_p())
      throw CLI::ValidationError("--edge-prob", "denominator too large for triangular");
  }

  // one sample per split stream: sample i is reproducible in isolation
  auto generate_one = [&](std::uint64_t index) {
    df::RandomSource rng = df::RandomSource::split(seed, index);
    for (;;) {
      df::Dag d;
      if (o.method == "exact") {
        if (wtable)
          d = df::sample_weighted_dag(o.nodes, p_rat, *wtable, rng);
        else if (o.max_in && o.max_out_nonoutpoints)
          d = df::sample_max_in_dag(
              o.nodes, df::RestrictionSpec::max_in_out(*o.max_in, *o.max_out_nonoutpoints),
              *table, rng);
        else if (o.max_in)
          d = df::sample_max_in_dag(o.nodes, df::RestrictionSpec::max_in(*o.max_in), *table, rng);
        else if (o.max_children || o.max_parents)
          d = df::sample_children_limited_dag(o.nodes, table->K, *table, rng);
        else
          d = df::sample_uniform_dag(o.nodes, *table, rng);
        if (o.max_parents) d = reverse_arcs(d);
      } else if (o.method == "hybrid") {
        d = df::sample_large_dag(o.nodes, *limits, *table, rng);
      } else {  // triangular
        if (o.edge_prob)
          d = df::sample_triangular(o.nodes, p_rat.get_num().get_ui(), p_rat.get_den().get_ui(),
                                    rng);
        else
          d = df::sample_triangular(o.nodes, 1, 2, rng);
      }
      if (o.connected && !df::is_weakly_connected(d)) continue;
      return d;
    }
  };

  std::ios::sync_with_stdio(false);

  if (o.method == "mcmc") {
    // a chain is one stream: burn-in once, thin between samples
    df::McmcConfig cfg;
    cfg.burn_in_steps = *o.burn_in;
    cfg.thinning_steps = o.thin;
    cfg.prune_self_pairs = o.prune_self_pairs;
    df::McmcChain chain(o.nodes, cfg, df::RandomSource(seed));
    for (long i = 0; i < o.count; ++i) {
      df::Dag d = chain.next_sample();
      while (o.connected && !df::is_weakly_connected(d)) d = chain.next_sample();
      df::write_dag(std::cout, d, format);
    }
    return kExitOk;
  }

  if (o.jobs == 1) {
    for (long i = 0; i < o.count; ++i) df::write_dag(std::cout, generate_one(i), format);
    return kExitOk;
  }

  // parallel generation, output strictly in index order
  std::vector<std::string> buffers(o.count);
  std::atomic<long> next{0};
  auto worker = [&]() {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= o.count) return;
      std::ostringstream os;
      df::write_dag(os, generate_one(i), format);
      buffers[i] = os.str();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < o.jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& buf : buffers) std::cout << buf;
  return kExitOk;
}

// ---- tables ----------------------------------------------------------

struct TablesOptions {
  int max_n = 0;
  std::string out;
  std::string variant = "unrestricted";
  std::optional<int> K;
  std::optional<int> K_n;
  std::optional<std::string> edge_prob;
  bool allow_large = false;
};

int run_tables(const TablesOptions& o) {
  if (o.max_n < 1) throw CLI::ValidationError("--max-n", "must be >= 1");
  int cap = o.allow_large ? o.max_n : df::kDefaultTableCap;
  std::string path = o.out.empty() ? default_tables_path() : o.out;
  if (path.empty())
    throw CLI::ValidationError("--out", "no output path (flag or DAGFORGE_TABLES)");

  if (o.variant == "weighted") {
    if (!o.edge_prob)
      throw CLI::ValidationError("--edge-prob", "weighted tables need a probability");
    df::WeightedTable t = df::build_weighted_table(o.max_n, parse_prob(*o.edge_prob), cap);
    df::save_table_file(path, t);
  } else {
    df::CountTable t;
    if (o.variant == "unrestricted") {
      t = df::build_count_table(o.max_n, cap);
    } else if (o.variant == "max-in") {
      if (!o.K) throw CLI::ValidationError("--K", "max-in needs K");
      t = df::build_restricted_table(o.max_n, *o.K, std::nullopt, cap);
    } else if (o.variant == "max-in-out") {
      if (!o.K || !o.K_n) throw CLI::ValidationError("--K", "max-in-out needs K and Kn");
      t = df::build_restricted_table(o.max_n, *o.K, *o.K_n, cap);
    } else if (o.variant == "max-children") {
      if (!o.K) throw CLI::ValidationError("--K", "max-children needs K");
      t = df::build_children_limited_table(o.max_n, *o.K, cap);
    } else {
      throw CLI::ValidationError("--variant", "unknown variant " + o.variant);
    }
    df::save_table_file(path, t);
  }
  df::load_table_file(path);  // the write only counts if it loads back clean
  std::cerr << "wrote " << path << "\n";
  return kExitOk;
}

// ---- stats -------------------------------------------------------------

struct StatsOptions {
  std::string input;  // empty = stdin
  std::string input_b;
  std::string format = "edgelist";
  int nodes = 0;
  bool json = false;
};

std::vector<df::Dag> read_stream(const std::string& path, df::OutputFormat format) {
  std::ifstream file;
  std::istream* is = &std::cin;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    is = &file;
  }
  df::DagReader reader(*is, format);
  std::vector<df::Dag> out;
  df::Dag d;
  while (reader.next(d)) out.push_back(d);
  return out;
}

void emit_report(const StatsOptions& o, const std::string& name, bool pass,
                 const nlohmann::json& detail, const std::string& text) {
  if (o.json) {
    nlohmann::json j = detail;
    j["test"] = name;
    j["pass"] = pass;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << name << " " << text << " " << (pass ? "PASS" : "FAIL") << "\n";
  }
}

int run_stats_uniformity(const StatsOptions& o) {
  if (o.nodes < 1 || o.nodes > 5)
    throw CLI::ValidationError("--nodes", "uniformity needs 1 <= n <= 5 (oracle enumeration)");
  auto dags = read_stream(o.input, df::parse_format(o.format));
  if (dags.empty()) throw std::runtime_error("empty input stream");
  std::map<std::uint64_t, double> expected;
  auto all = df::enumerate_all_dags(o.nodes);
  for (const auto& d : all) expected[df::dag_key(d)] = 1.0 / all.size();
  df::Histogram h;
  h.n = o.nodes;
  for (const auto& d : dags) {
    if (d.n() != o.nodes) throw std::runtime_error("stream contains a DAG of the wrong size");
    h.add(df::dag_key(d));
  }
  auto res = df::chi_square_uniformity(h, expected);
  bool pass = res.p_value > 0.001;
  if (res.low_expected) std::cerr << "warning: some expected cell counts are below 5\n";
  std::ostringstream text;
  text << "n=" << o.nodes << " trials=" << h.trials << " cells=" << res.cells
       << " chi2=" << res.statistic << " p=" << res.p_value;
  emit_report(o, "uniformity", pass,
              {{"n", o.nodes},
               {"trials", h.trials},
               {"cells", res.cells},
               {"statistic", res.statistic},
               {"p_value", res.p_value}},
              text.str());
  return pass ? kExitOk : kExitStatFail;
}

int run_stats_acyclic(const StatsOptions& o) {
  auto dags = read_stream(o.input, df::parse_format(o.format));
  if (dags.empty()) throw std::runtime_error("empty input stream");
  std::size_t bad = 0;
  for (const auto& d : dags)
    if (!df::is_acyclic(d)) ++bad;
  bool pass = bad == 0;
  std::ostringstream text;
  text << "checked=" << dags.size() << " cyclic=" << bad;
  emit_report(o, "acyclic", pass, {{"checked", dags.size()}, {"cyclic", bad}}, text.str());
  return pass ? kExitOk : kExitStatFail;
}

int run_stats_outpoints(const StatsOptions& o) {
  if (o.nodes < 1) throw CLI::ValidationError("--nodes", "required");
  auto dags = read_stream(o.input, df::parse_format(o.format));
  if (dags.empty()) throw std::runtime_error("empty input stream");
  std::vector<double> expected(o.nodes + 1, 0.0);
  if (o.nodes <= df::kDefaultTableCap) {
    df::CountTable t = df::build_count_table(o.nodes);
    for (int k = 1; k <= o.nodes; ++k)
      expected[k] = df::BigRat(t.a(o.nodes, k), t.total(o.nodes)).get_d();
  } else {
    df::LimitTables lt = df::build_limit_tables();
    for (int k = 1; k <= std::min(o.nodes, 7); ++k) expected[k] = lt.A[k];
  }
  std::vector<long> counts(o.nodes + 1, 0);
  for (const auto& d : dags) {
    if (d.n() != o.nodes) throw std::runtime_error("stream contains a DAG of the wrong size");
    ++counts[df::classify_outpoints(d)];
  }
  double trials = static_cast<double>(dags.size());
  bool pass = true;
  nlohmann::json bands = nlohmann::json::array();
  for (int k = 1; k <= o.nodes; ++k) {
    double exp_count = expected[k] * trials;
    if (exp_count < 5) continue;  // bands only where the cell is fat
    double sigma = std::sqrt(trials * expected[k] * (1 - expected[k]));
    bool ok = std::abs(counts[k] - exp_count) <= 3.5 * sigma;
    pass = pass && ok;
    bands.push_back({{"k", k}, {"observed", counts[k]}, {"expected", exp_count}, {"ok", ok}});
  }
  std::ostringstream text;
  text << "n=" << o.nodes << " trials=" << dags.size() << " bands=3.5sigma";
  emit_report(o, "outpoints", pass, {{"n", o.nodes}, {"trials", dags.size()}, {"bands", bands}},
              text.str());
  return pass ? kExitOk : kExitStatFail;
}

int run_stats_compare(const StatsOptions& o) {
  df::OutputFormat format = df::parse_format(o.format);
  auto sa = read_stream(o.input, format);
  auto sb = read_stream(o.input_b, format);
  if (sa.empty() || sb.empty()) throw std::runtime_error("empty input stream");
  df::Histogram out_a, out_b, edge_a, edge_b;
  for (const auto& d : sa) {
    out_a.add(df::classify_outpoints(d));
    edge_a.add(d.edge_count());
  }
  for (const auto& d : sb) {
    out_b.add(df::classify_outpoints(d));
    edge_b.add(d.edge_count());
  }
  auto r_out = df::two_sample_test(out_a, out_b);
  auto r_edge = df::two_sample_test(edge_a, edge_b);
  bool pass = r_out.p_value > 0.001 && r_edge.p_value > 0.001;
  bool keys_compared = false;
  double p_key = 1;
  if (sa[0].n() <= 8 && sb[0].n() <= 8) {
    df::Histogram ka, kb;
    for (const auto& d : sa) ka.add(df::dag_key(d));
    for (const auto& d : sb) kb.add(df::dag_key(d));
    p_key = df::two_sample_test(ka, kb).p_value;
    pass = pass && p_key > 0.001;
    keys_compared = true;
  }
  std::ostringstream text;
  text << "p_outpoints=" << r_out.p_value << " p_edges=" << r_edge.p_value;
  if (keys_compared) text << " p_keys=" << p_key;
  emit_report(o, "compare", pass,
              {{"p_outpoints", r_out.p_value},
               {"p_edges", r_edge.p_value},
               {"p_keys", keys_compared ? nlohmann::json(p_key) : nlohmann::json()}},
              text.str());
  return pass ? kExitOk : kExitStatFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uniform random DAG generation by recursive enumeration"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate random DAGs");
  cmd_gen->add_option("--nodes", gen.nodes, "number of vertices")->required();
  cmd_gen->add_option("--count", gen.count, "number of samples");
  cmd_gen->add_option("--seed", gen.seed, "64-bit seed; fixed seed gives byte-identical output");
  cmd_gen->add_option("--method", gen.method, "exact | hybrid | mcmc | triangular");
  cmd_gen->add_option("--format", gen.format, "edgelist | matrix | dot | json");
  cmd_gen->add_flag("--connected", gen.connected, "reject weakly disconnected samples");
  cmd_gen->add_option("--max-in", gen.max_in, "bound arcs into each old node per layer");
  cmd_gen->add_option("--max-out-nonoutpoints", gen.max_out_nonoutpoints,
                      "bound arcs each new node sends to old non-outpoints");
  cmd_gen->add_option("--max-children", gen.max_children, "bound out-degrees");
  cmd_gen->add_option("--max-parents", gen.max_parents, "bound in-degrees (arc reversal)");
  cmd_gen->add_option("--edge-prob", gen.edge_prob, "NUM/DEN weighting per arc");
  cmd_gen->add_option("--burn-in", gen.burn_in, "mcmc burn-in steps");
  cmd_gen->add_option("--thin", gen.thin, "mcmc steps between samples");
  cmd_gen->add_flag("--prune-self-pairs", gen.prune_self_pairs,
                    "exclude all but one self pair from the mcmc proposal");
  cmd_gen->add_option("--tables-file", gen.tables_file,
                      "load a table cache instead of rebuilding");
  cmd_gen->add_option("--n-switch", gen.n_switch, "hybrid switchover point (default 20)");
  cmd_gen->add_option("--jobs", gen.jobs, "parallel sample generation");
  cmd_gen->add_flag("--allow-large", gen.allow_large, "raise the table size cap");

  TablesOptions tab;
  CLI::App* cmd_tables = app.add_subcommand("tables", "precompute and store count tables");
  cmd_tables->add_option("--max-n", tab.max_n, "largest n the cache covers")->required();
  cmd_tables->add_option("--out", tab.out, "output path (default: DAGFORGE_TABLES)");
  cmd_tables->add_option("--variant", tab.variant,
                         "unrestricted | max-in | max-in-out | max-children | weighted");
  cmd_tables->add_option("--K", tab.K, "restriction bound");
  cmd_tables->add_option("--Kn", tab.K_n, "max-in-out secondary bound");
  cmd_tables->add_option("--edge-prob", tab.edge_prob, "NUM/DEN for weighted tables");
  cmd_tables->add_flag("--allow-large", tab.allow_large, "raise the table size cap");

  StatsOptions st;
  CLI::App* cmd_stats = app.add_subcommand("stats", "statistical checks on DAG streams");
  cmd_stats->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--input", st.input, "input path (default stdin)");
    c->add_option("--format", st.format, "input format");
    c->add_flag("--json", st.json, "JSON report");
  };
  CLI::App* st_unif = cmd_stats->add_subcommand("uniformity", "chi-square GOF vs the oracle");
  st_unif->add_option("--nodes", st.nodes, "graph size (<= 5)")->required();
  add_common(st_unif);
  CLI::App* st_acyc = cmd_stats->add_subcommand("acyclic", "verify every DAG is acyclic");
  add_common(st_acyc);
  CLI::App* st_outp = cmd_stats->add_subcommand("outpoints", "outpoint-count frequency bands");
  st_outp->add_option("--nodes", st.nodes, "graph size")->required();
  add_common(st_outp);
  CLI::App* st_cmp = cmd_stats->add_subcommand("compare", "two-sample homogeneity");
  st_cmp->add_option("--a", st.input, "first stream")->required();
  st_cmp->add_option("--b", st.input_b, "second stream")->required();
  st_cmp->add_option("--format", st.format, "input format");
  st_cmp->add_flag("--json", st.json, "JSON report");

  try {
    app.parse(argc, argv);
    if (*cmd_gen) return run_gen(gen);
    if (*cmd_tables) return run_tables(tab);
    if (*st_unif) return run_stats_uniformity(st);
    if (*st_acyc) return run_stats_acyclic(st);
    if (*st_outp) return run_stats_outpoints(st);
    if (*st_cmp) return run_stats_compare(st);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const df::TableIoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTableError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
