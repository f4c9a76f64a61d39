#include <memory>
#include <sstream>
#include <stdexcept>

#include "command_impl.hpp"
#include "uiseq/rng.hpp"
#include "uiseq_cli/schemes.hpp"

namespace uiseq::cli::detail {

nlohmann::json to_json(const DelayStats& s) {
  return {{"mean_individual", s.mean_individual},
          {"mean_group", s.mean_group},
          {"min_group", s.min_group},
          {"max_group", s.max_group},
          {"stddev_individual", s.stddev_individual},
          {"stddev_group", s.stddev_group},
          {"individual_count", s.individual_count},
          {"samples_used", s.samples_used},
          {"truncated_samples", s.truncated_samples},
          {"horizon", s.horizon}};
}

namespace {

DelayConvention parse_convention(const std::string& name) {
  if (name == "inclusive") return DelayConvention::inclusive;
  if (name == "exclusive") return DelayConvention::exclusive;
  throw std::invalid_argument("unknown delay convention '" + name + "'");
}

/// Flags shared by simulate and table.
struct RunOptions {
  std::uint64_t samples = 500'000;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> horizon;
  unsigned threads = 1;
  std::string convention = "inclusive";
};

void add_run_options(CLI::App* sub, RunOptions& o) {
  sub->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Master seed");
  sub->add_option("--horizon", o.horizon, "Truncate waits longer than this many slots");
  sub->add_option("--threads", o.threads, "Worker threads (results do not depend on this)")
      ->check(CLI::Range(1u, 256u));
  sub->add_option("--delay-convention", o.convention, "inclusive (success slot counts) or exclusive")
      ->check(CLI::IsMember({"inclusive", "exclusive"}));
}

struct SimulateOptions {
  std::string scheme;
  std::int64_t users = 0;
  double pa = 1.0;
  std::string ps = "optimal";
  std::string format = "json";
  RunOptions run;
};

SchemeRequest request_for(SchemeKind kind, std::int64_t users, double pa, const std::string& ps,
                          const RunOptions& run, std::uint64_t seed) {
  SchemeRequest req;
  req.kind = kind;
  req.users = users;
  req.activation_probability = pa;
  req.ps = ps;
  req.samples = run.samples;
  req.seed = seed;
  req.horizon = run.horizon;
  req.convention = parse_convention(run.convention);
  req.workers = run.threads;
  return req;
}

nlohmann::json config_json(const SimConfig& c, SchemeKind kind) {
  nlohmann::json doc = {{"scheme", to_string(kind)},
                        {"M", c.users},
                        {"p_a", c.activation_probability},
                        {"samples", c.samples},
                        {"seed", c.master_seed},
                        {"horizon", effective_horizon(c)},
                        {"delay_convention", to_string(c.convention)},
                        {"individual_averaging", to_string(c.averaging)}};
  if (const auto* r = std::get_if<RandomAccessScheme>(&c.scheme)) {
    doc["p_s"] = r->transmit_probability;
    doc["random_access_method"] = to_string(r->method);
  } else {
    const auto& set = std::get<ProtocolScheme>(c.scheme).sequences;
    doc["L"] = set.period();
    doc["weight"] = set[0].weight();
  }
  return doc;
}

CommandResult simulate(const SimulateOptions& o) {
  const auto kind = parse_scheme(o.scheme);
  const auto config = make_config(request_for(kind, o.users, o.pa, o.ps, o.run, o.run.seed));
  const auto stats = run_simulation(config);

  const auto cfg = config_json(config, kind);
  nlohmann::json doc = {{"config", cfg}, {"stats", to_json(stats)}};
  std::ostringstream csv;
  csv << "scheme,M,p_a,p_s,individual,group\n"
      << to_string(kind) << ',' << o.users << ',' << shortest(o.pa) << ','
      << (cfg.contains("p_s") ? shortest(cfg["p_s"].get<double>()) : std::string{}) << ','
      << one_decimal(stats.mean_individual) << ',' << one_decimal(stats.mean_group) << '\n';

  CommandResult r;
  r.manifest.command = "simulate";
  r.manifest.config = cfg;
  r.manifest.config["threads"] = o.run.threads;
  r.manifest.seed = o.run.seed;
  r.manifest.rng = std::string(rng_identity);
  r.documents = {{"json", doc.dump(2) + "\n"}, {"csv", csv.str()}};
  r.primary = o.format == "csv" ? 1 : 0;
  r.exit_code = stats.samples_used == 0 ? exit_exhausted : exit_ok;
  return r;
}

struct TableOptions {
  int table = 0;
  std::vector<std::int64_t> users;
  std::vector<double> pa;
  std::string format = "csv";
  RunOptions run;
};

struct Row {
  std::string name;
  SchemeKind kind;
  std::string ps;
  std::uint64_t id;  ///< fixed per row so cell seeds do not depend on which rows are printed
};

CommandResult table(const TableOptions& o) {
  std::vector<std::int64_t> users = o.users;
  std::vector<double> pa = o.pa;
  std::vector<Row> rows;
  const bool by_users = o.table == 2;
  if (by_users) {
    if (users.empty()) users = {8, 9, 10, 12, 14, 15, 16, 18, 20, 25, 30, 40};
    if (pa.empty()) pa = {1.0};
    if (pa.size() != 1) throw std::invalid_argument("table 2 takes a single --pa value");
    rows = {{"random_matched", SchemeKind::random, "matched", 0},
            {"random_optimal", SchemeKind::random, "optimal", 1},
            {"crt", SchemeKind::crt, "", 2},
            {"crtm", SchemeKind::crtm, "", 3}};
  } else {
    if (users.empty()) users = {o.table == 3 ? 10 : 30};
    if (users.size() != 1) throw std::invalid_argument("tables 3 and 4 take a single --m value");
    if (pa.empty()) pa = {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4};
    rows = {{"random_optimal", SchemeKind::random, "optimal", 1},
            {"crt", SchemeKind::crt, "", 2},
            {"crtm", SchemeKind::crtm, "", 3}};
  }
  const std::size_t columns = by_users ? users.size() : pa.size();

  std::vector<std::vector<DelayStats>> results(rows.size());
  auto cells = nlohmann::json::array();
  int exit_code = exit_ok;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      const auto m = by_users ? users[c] : users[0];
      const auto p = by_users ? pa[0] : pa[c];
      const auto seed = substream_seed(o.run.seed, (rows[r].id << 32) | c);
      const auto config = make_config(request_for(rows[r].kind, m, p, rows[r].ps, o.run, seed));
      const auto stats = run_simulation(config);
      if (stats.samples_used == 0) exit_code = exit_exhausted;
      results[r].push_back(stats);
      cells.push_back({{"row", rows[r].name}, {"config", config_json(config, rows[r].kind)}, {"stats", to_json(stats)}});
    }
  }

  std::ostringstream csv;
  csv << "metric,scheme";
  for (std::size_t c = 0; c < columns; ++c) csv << ',' << (by_users ? std::to_string(users[c]) : shortest(pa[c]));
  csv << '\n';
  for (const bool group : {false, true}) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      csv << (group ? "group" : "individual") << ',' << rows[r].name;
      for (const auto& s : results[r]) csv << ',' << one_decimal(group ? s.mean_group : s.mean_individual);
      csv << '\n';
    }
  }
  nlohmann::json doc = {{"table", o.table}, {"cells", cells}};

  CommandResult res;
  res.manifest.command = "table";
  res.manifest.config = {{"table", o.table},
                         {"M", users},
                         {"p_a", pa},
                         {"samples", o.run.samples},
                         {"horizon", o.run.horizon ? nlohmann::json(*o.run.horizon) : nlohmann::json(nullptr)},
                         {"delay_convention", o.run.convention},
                         {"threads", o.run.threads},
                         {"cell_seed", "substream_seed(seed, row_id << 32 | column)"}};
  res.manifest.seed = o.run.seed;
  res.manifest.rng = std::string(rng_identity);
  res.documents = {{"csv", csv.str()}, {"json", doc.dump(2) + "\n"}};
  res.primary = o.format == "json" ? 1 : 0;
  res.exit_code = exit_code;
  return res;
}

}  // namespace

void add_simulate(CLI::App& app, Action& action) {
  auto opts = std::make_shared<SimulateOptions>();
  auto* sub = app.add_subcommand("simulate", "Delay statistics of one scheme");
  sub->add_option("--scheme", opts->scheme, "crtm, crt or random")
      ->required()
      ->check(CLI::IsMember({"crtm", "crt", "random"}));
  sub->add_option("--m", opts->users, "Number of users M")->required();
  sub->add_option("--pa", opts->pa, "Activation probability");
  sub->add_option("--ps", opts->ps, "random: transmit probability, 'optimal' (1/(M p_a)) or 'matched' ((M+1)/L)");
  sub->add_option("--format", opts->format, "Printed form: json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_run_options(sub, opts->run);
  sub->callback([opts, &action] { action = [opts] { return simulate(*opts); }; });
}

void add_table(CLI::App& app, Action& action) {
  auto opts = std::make_shared<TableOptions>();
  auto* sub = app.add_subcommand("table", "Regenerate a delay table");
  sub->add_option("--paper-table", opts->table, "2 (all active, columns M) or 3/4 (M=10/30, columns p_a)")
      ->required()
      ->check(CLI::IsMember({2, 3, 4}));
  sub->add_option("--m", opts->users, "Comma-separated M values")->delimiter(',');
  sub->add_option("--pa", opts->pa, "Comma-separated activation probabilities")->delimiter(',');
  sub->add_option("--format", opts->format, "Printed form: csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_run_options(sub, opts->run);
  sub->callback([opts, &action] { action = [opts] { return table(*opts); }; });
}

}  // namespace uiseq::cli::detail
