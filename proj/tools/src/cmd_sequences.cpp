#include <algorithm>
#include <charconv>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "command_impl.hpp"
#include "uiseq/bounds.hpp"
#include "uiseq/construct.hpp"
#include "uiseq/correlate.hpp"
#include "uiseq/verify.hpp"
#include "uiseq_cli/sequence_io.hpp"

namespace uiseq::cli::detail {

namespace {

struct GenerateOptions {
  std::string construction;
  std::int64_t users = 0;
  std::vector<std::size_t> indices;
  std::string format = "json";
};

CommandResult generate(const GenerateOptions& o) {
  const auto family = build_family(parse_construction(o.construction), o.users);
  std::vector<std::size_t> indices = o.indices;
  if (indices.empty()) {
    for (std::size_t j = 0; j < family.size(); ++j) indices.push_back(j);
  }
  const auto set = select_users(family, indices);

  nlohmann::json doc = {
      {"construction", to_string(family.construction())},
      {"M", family.users()},
      {"p", family.prime()},
      {"q", family.cofactor()},
      {"L", family.period()},
      {"weight", family.weight()},
      {"indices", indices},
  };
  auto sequences = nlohmann::json::array();
  auto generators = nlohmann::json::array();
  for (const auto j : indices) {
    sequences.push_back(uiseq::to_text(family.sequence(j)));
    generators.push_back(family.generator(j));
  }
  doc["sequences"] = sequences;
  doc["generators"] = generators;

  CommandResult r;
  r.manifest.command = "generate";
  r.manifest.config = {{"construction", o.construction}, {"M", o.users}, {"indices", indices}, {"format", o.format}};
  r.documents = {{"json", doc.dump(2) + "\n"}, {"txt", to_text(set)}};
  r.primary = o.format == "text" ? 1 : 0;
  return r;
}

struct InputOptions {
  std::string input;
};

RunManifest input_manifest(const std::string& command, const std::string& input) {
  RunManifest m;
  m.command = command;
  m.config = {{"input", input}};
  m.inputs.push_back({input, sha256_file(input)});
  return m;
}

nlohmann::json optional_json(const std::optional<std::int64_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

CommandResult analyze(const InputOptions& o) {
  const auto set = load_sequence_set(o.input);
  const std::size_t m = set.size();
  nlohmann::json doc = {{"M", m}, {"L", set.period()}};

  auto sequences = nlohmann::json::array();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& s = set[i];
    nlohmann::json entry = {{"index", i}, {"set", uiseq::to_text(s)}, {"weight", s.weight()}};
    entry["generator"] = optional_json(equi_difference_generator(s));
    if (const auto prog = arithmetic_progression(s)) {
      entry["progression"] = {{"start", prog->start}, {"step", prog->step}};
    } else {
      entry["progression"] = nullptr;
    }
    if (s.weight() >= 2) {
      entry["difference_count"] = diff_set(s).size();
      entry["exceptional"] = is_exceptional(s);
    } else {
      entry["difference_count"] = 0;
      entry["exceptional"] = nullptr;
    }
    sequences.push_back(entry);
  }
  doc["sequences"] = sequences;

  if (m >= 2) {
    const CorrelationProfile profile(set);
    auto h = nlohmann::json::array();
    auto t = nlohmann::json::array();
    auto b = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
      auto h_row = nlohmann::json::array();
      auto t_row = nlohmann::json::array();
      for (std::size_t k = 0; k < m; ++k) {
        if (i == k) {
          h_row.push_back(nullptr);
          t_row.push_back(nullptr);
          continue;
        }
        h_row.push_back(profile.value(i, k));
        const auto shifts = profile.maximizing_shifts(i, k);
        t_row.push_back(std::vector<std::int64_t>(shifts.begin(), shifts.end()));
      }
      h.push_back(h_row);
      t.push_back(t_row);
      b.push_back(profile.best_interferers(i));
    }
    doc["H"] = h;
    doc["lambda_c"] = profile.lambda_c();
    doc["best_interferers"] = b;
    doc["maximizing_shifts"] = t;
  }

  CommandResult r;
  r.manifest = input_manifest("analyze", o.input);
  r.documents = {{"json", doc.dump(2) + "\n"}};
  return r;
}

struct VerifyOptions {
  std::string input;
  std::string method = "auto";
  std::uint64_t budget = default_pattern_budget;
  bool strict = false;
};

nlohmann::json witness_json(const Witness& w) {
  if (const auto* c = std::get_if<CoverWitness>(&w)) {
    return {{"kind", "cover"}, {"user", c->user}, {"shifts", c->shifts}};
  }
  const auto& l = std::get<Lemma2Witness>(w);
  nlohmann::json doc = {{"kind", "lemma2"},
                        {"clause", l.clause == Lemma2Clause::pairwise ? "pairwise" : "residual"},
                        {"i", l.i},
                        {"j", l.j},
                        {"correlation", l.correlation}};
  if (l.k) doc["k"] = *l.k;
  if (l.tau_k) doc["tau_k"] = *l.tau_k;
  return doc;
}

CommandResult verify(const VerifyOptions& o) {
  const auto set = load_sequence_set(o.input);
  const std::size_t m = set.size();
  CommandResult r;
  r.manifest = input_manifest("verify", o.input);
  r.manifest.config["method"] = o.method;
  r.manifest.config["budget"] = o.budget;
  r.manifest.config["strict"] = o.strict;

  nlohmann::json doc = {{"M", m}, {"L", set.period()}, {"patterns", pattern_count(set)}};
  std::string method = o.method;
  if (method == "auto") {
    if (pattern_count(set) <= o.budget) {
      method = "exhaustive";
    } else if (set.has_constant_weight(m + 1)) {
      method = "lemma2";
    } else {
      method = "cover";
    }
  }

  UiVerdict verdict;
  try {
    if (method == "exhaustive") {
      verdict = is_ui_exhaustive(set, o.budget);
    } else if (method == "lemma2") {
      verdict = is_ui_lemma2(set, Lemma2Options{o.strict});
    } else {
      verdict = is_ui_cover_search(set);
    }
  } catch (const BudgetExceeded& e) {
    doc["is_ui"] = nullptr;
    doc["method"] = method;
    doc["error"] = e.what();
    r.documents = {{"json", doc.dump(2) + "\n"}};
    r.exit_code = exit_exhausted;
    return r;
  }

  doc["is_ui"] = verdict.is_ui;
  doc["method"] = to_string(verdict.method);
  doc["witness"] = verdict.witness ? witness_json(*verdict.witness) : nlohmann::json(nullptr);
  if (verdict.difference_form_is_ui) doc["difference_form_is_ui"] = *verdict.difference_form_is_ui;
  if (verdict.witness) {
    if (const auto* l = std::get_if<Lemma2Witness>(&*verdict.witness)) {
      if (const auto cover = cover_from_lemma2_witness(set, *l)) doc["cover_witness"] = witness_json(*cover);
    }
  }
  r.documents = {{"json", doc.dump(2) + "\n"}};
  r.exit_code = verdict.is_ui ? exit_ok : exit_not_ui;
  return r;
}

struct BoundsOptions {
  std::string range;
  std::string pi_mode = "prime";
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("--m-range expects A..B, got '" + text + "'");
    }
    return v;
  };
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const std::string_view view(text);
  const auto lo = number(view.substr(0, dots));
  const auto hi = number(view.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("--m-range: empty range " + text);
  return {lo, hi};
}

CommandResult bounds(const BoundsOptions& o) {
  const auto [lo, hi] = parse_range(o.range);
  const auto mode = parse_pi_mode(o.pi_mode);
  std::ostringstream csv;
  csv << "M,p_M,L,lb_general,lb_equi_difference,ratio\n";
  for (std::int64_t m = lo; m <= hi; ++m) {
    const auto rep = bound_report(m, mode);
    csv << rep.users << ',' << rep.prime << ',' << rep.period << ',' << rep.lb_general << ','
        << rep.lb_equi_difference << ',' << rep.ratio.to_string() << '\n';
  }
  CommandResult r;
  r.manifest.command = "bounds";
  r.manifest.config = {{"m_range", {lo, hi}}, {"pi_mode", to_string(mode)}};
  r.documents = {{"csv", csv.str()}};
  return r;
}

}  // namespace

void add_generate(CLI::App& app, Action& action) {
  auto opts = std::make_shared<GenerateOptions>();
  auto* sub = app.add_subcommand("generate", "Build a CRTm or CRT sequence family");
  sub->add_option("--construction", opts->construction, "crtm or crt")
      ->required()
      ->check(CLI::IsMember({"crtm", "crt"}));
  sub->add_option("--m", opts->users, "Number of users M (>= 4)")->required();
  sub->add_option("--users", opts->indices, "Comma-separated family indices to keep (0-based)")->delimiter(',');
  sub->add_option("--format", opts->format, "Printed form: json or text")->check(CLI::IsMember({"json", "text"}));
  sub->callback([opts, &action] { action = [opts] { return generate(*opts); }; });
}

void add_analyze(CLI::App& app, Action& action) {
  auto opts = std::make_shared<InputOptions>();
  auto* sub = app.add_subcommand("analyze", "Correlation tables of a sequence set");
  sub->add_option("--input", opts->input, "Sequence file (text or JSON)")->required()->check(CLI::ExistingFile);
  sub->callback([opts, &action] { action = [opts] { return analyze(*opts); }; });
}

void add_verify(CLI::App& app, Action& action) {
  auto opts = std::make_shared<VerifyOptions>();
  auto* sub = app.add_subcommand("verify", "Decide whether a sequence set is user-irrepressible");
  sub->add_option("--input", opts->input, "Sequence file (text or JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("--method", opts->method, "auto, exhaustive, lemma2 or cover")
      ->check(CLI::IsMember({"auto", "exhaustive", "lemma2", "cover"}));
  sub->add_option("--budget", opts->budget, "Maximum shift patterns for exhaustive enumeration");
  sub->add_flag("--strict", opts->strict, "lemma2: also test every k with H == 2, not only best interferers");
  sub->callback([opts, &action] { action = [opts] { return verify(*opts); }; });
}

void add_bounds(CLI::App& app, Action& action) {
  auto opts = std::make_shared<BoundsOptions>();
  auto* sub = app.add_subcommand("bounds", "CRTm period against the lower bounds");
  sub->add_option("--m-range", opts->range, "A..B")->required();
  sub->add_option("--pi-mode", opts->pi_mode, "prime or packing")->check(CLI::IsMember({"prime", "packing"}));
  sub->callback([opts, &action] { action = [opts] { return bounds(*opts); }; });
}

}  // namespace uiseq::cli::detail
