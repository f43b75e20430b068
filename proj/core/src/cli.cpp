#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "internal.hpp"
#include "wittcv/error.hpp"
#include "wittcv/harness.hpp"

namespace wittcv::harness {

namespace {

using varieties::PairSpace;

constexpr std::size_t kSummaryFailures = 5;

struct TaskName {
  Task task;
  std::string_view name;
};

constexpr TaskName kTaskNames[] = {
    {Task::Centralizers, "centralizers"}, {Task::Cone, "cone"},       {Task::Covering, "covering"},
    {Task::Middle, "middle"},             {Task::Witnesses, "witnesses"}, {Task::Counts, "counts"},
    {Task::Census, "census"},             {Task::Rectify, "rectify"},  {Task::All, "all"},
};

FaultSpec parse_fault(const std::string& text) {
  FaultSpec spec;
  std::vector<std::int64_t> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "fault must be 'i,j' or 'i,j,value', got '" + text + "'");
    }
  }
  if (parts.size() != 2 && parts.size() != 3) {
    throw Error(ErrorCode::ParseError, "fault must be 'i,j' or 'i,j,value', got '" + text + "'");
  }
  spec.i = static_cast<int>(parts[0]);
  spec.j = static_cast<int>(parts[1]);
  if (parts.size() == 3) spec.value = parts[2];
  return spec;
}

bool parse_mode(const std::string& text) {
  if (text == "exhaustive") return false;
  if (text == "sampled") return true;
  throw Error(ErrorCode::ParseError, "mode must be exhaustive or sampled, got '" + text + "'");
}

void apply_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read config file " + path);
  try {
    const auto doc = nlohmann::json::parse(in);
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "p") {
        c.p = value.get<std::int64_t>();
      } else if (key == "ext") {
        c.m = value.get<int>();
      } else if (key == "task") {
        c.task = parse_task(value.get<std::string>());
      } else if (key == "space") {
        c.space = varieties::parse_pair_space(value.get<std::string>());
      } else if (key == "mode") {
        c.sampled = parse_mode(value.get<std::string>());
      } else if (key == "samples") {
        c.samples = value.get<std::uint64_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "workers") {
        c.workers = value.get<unsigned>();
      } else if (key == "out") {
        c.out = value.get<std::string>();
      } else if (key == "force") {
        c.force = value.get<bool>();
      } else if (key == "element") {
        c.element = value.get<std::string>();
      } else if (key == "inject-fault") {
        c.fault = parse_fault(value.get<std::string>());
      } else if (key == "timing") {
        c.timing = value.get<bool>();
      } else {
        throw Error(ErrorCode::ParseError, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config file: ") + e.what());
  }
}

void print_summary(const VerificationReport& r, std::ostream& err) {
  err << "task      " << r.task << "\n";
  err << "field     p = " << r.p << ", q = " << r.q << "\n";
  if (r.sampling) {
    err << "mode      sampled (seed " << r.sampling->seed << ", " << r.sampling->samples << " samples)\n";
  } else {
    err << "mode      exhaustive\n";
  }
  for (const auto& [key, value] : r.counts) err << "  " << key << std::string(key.size() < 40 ? 40 - key.size() : 1, ' ') << value << "\n";
  const auto failures = r.counts.count("failures") ? r.counts.at("failures") : 0;
  err << "verified  " << (r.verified() ? "yes" : "NO") << " (" << failures << " failures, " << r.duration_ms
      << " ms)\n";
  for (std::size_t k = 0; k < std::min(kSummaryFailures, r.failures.size()); ++k) {
    const auto& f = r.failures[k];
    err << "  " << f.label << ": " << f.x << (f.y.empty() ? "" : "  |  " + f.y) << "\n";
  }
}

}  // namespace

std::string_view to_string(Task task) {
  for (const auto& t : kTaskNames) {
    if (t.task == task) return t.name;
  }
  return "all";
}

Task parse_task(std::string_view text) {
  for (const auto& t : kTaskNames) {
    if (t.name == text) return t.task;
  }
  throw Error(ErrorCode::ParseError, "unknown task '" + std::string(text) + "'");
}

void validate(const RunConfig& c) {
  const auto f = ffield::FieldCtx::make(c.p, c.m);
  if (c.sampled && c.samples < 1) throw Error(ErrorCode::ParseError, "samples must be at least 1");
  if (c.workers < 1) throw Error(ErrorCode::ParseError, "workers must be at least 1");
  if (c.fault) {
    const int top = static_cast<int>(c.p) - 2;
    const auto [i, j, v] = *c.fault;
    if (i < -1 || j < -1 || i > top || j > top || i == j || i + j < -1 || i + j > top) {
      throw Error(ErrorCode::BadIndex, "fault indices must be distinct degrees with i + j in range");
    }
  }
  if (c.element) {
    const auto x = witt::parse_element(*c.element);
    if (!(x.field == f)) throw Error(ErrorCode::ContextMismatch, "element is not over the configured field");
  }
}

ExecOptions exec_options(const RunConfig& c) {
  ExecOptions opts;
  opts.workers = c.workers;
  opts.force = c.force;
  if (c.sampled) opts.sampling = SamplingInfo{c.seed, c.samples};
  return opts;
}

witt::WittAlgebra make_algebra(const RunConfig& c) {
  const auto f = ffield::FieldCtx::make(c.p, c.m);
  witt::WittAlgebra alg(f);
  if (c.fault) alg = alg.with_corrupted_constant(c.fault->i, c.fault->j, f.from_int(c.fault->value));
  return alg;
}

VerificationReport run_task(const RunConfig& c) {
  validate(c);
  const auto alg = make_algebra(c);
  const auto opts = exec_options(c);
  switch (c.task) {
    case Task::Centralizers:
      return centralizer_law(alg, opts);
    case Task::Cone:
      return varieties::cone_census(alg, opts);
    case Task::Covering:
      return varieties::verify_covering(alg, c.space, opts);
    case Task::Middle:
      return varieties::verify_middle_redundancy(alg, opts);
    case Task::Witnesses:
      return varieties::component_witnesses(alg, c.space);
    case Task::Counts:
      return varieties::component_counts(alg.field(), opts);
    case Task::Census:
      return varieties::commuting_census(alg, c.space, opts);
    case Task::Rectify:
      if (c.element) return rectify_element(witt::parse_element(*c.element));
      return rectification_totality(alg, opts);
    case Task::All:
      return run_all(c);
  }
  return run_all(c);
}

VerificationReport run_all(const RunConfig& c) {
  validate(c);
  const detail::Stopwatch clock;
  const auto alg = make_algebra(c);
  const auto opts = exec_options(c);
  VerificationReport total = detail::new_report("all", alg.field(), opts.sampling);

  auto add = [&](const std::string& name, auto&& run) {
    try {
      VerificationReport part = run();
      total.merge(with_prefix(std::move(part), name));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeOverflow || !c.sampled) {
        throw Error(e.code(), name + ": " + e.what());
      }
      total.details[name + "/skipped"] = "exhaustive only; exceeds the enumeration bound";
    }
  };
  add("centralizers", [&] { return centralizer_law(alg, opts); });
  add("cone", [&] { return varieties::cone_census(alg, opts); });
  add("covering/full", [&] { return varieties::verify_covering(alg, PairSpace::Full, opts); });
  add("covering/borel", [&] { return varieties::verify_covering(alg, PairSpace::Borel, opts); });
  add("covering/borel-minus", [&] { return varieties::verify_covering(alg, PairSpace::BorelMinus, opts); });
  add("middle", [&] { return varieties::verify_middle_redundancy(alg, opts); });
  add("witnesses/full", [&] { return varieties::component_witnesses(alg, PairSpace::Full); });
  add("witnesses/borel", [&] { return varieties::component_witnesses(alg, PairSpace::Borel); });
  add("counts", [&] { return varieties::component_counts(alg.field(), opts); });
  add("census/full", [&] { return varieties::commuting_census(alg, PairSpace::Full, opts); });
  add("census/borel", [&] { return varieties::commuting_census(alg, PairSpace::Borel, opts); });
  add("rectify", [&] { return rectification_totality(alg, opts); });
  total.duration_ms = clock.elapsed_ms();
  return total;
}

int cli_run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification harness for the nilpotent commuting variety of the Witt algebra W1 over F_q"};
  app.set_version_flag("--version", std::string(version()));

  std::int64_t p = 5;
  int ext = 1;
  std::string task = "all", space = "full", mode = "exhaustive", out_path, config_path, element, fault;
  std::uint64_t samples = 100'000, seed = 0;
  unsigned workers = 1;
  bool force = false, no_timing = false;

  auto* o_p = app.add_option("--p", p, "Characteristic, a prime >= 5");
  auto* o_ext = app.add_option("--ext", ext, "Extension degree m (q = p^m), 1..3");
  auto* o_task = app.add_option("--task", task, "centralizers|cone|covering|middle|witnesses|counts|census|rectify|all");
  auto* o_space = app.add_option("--space", space, "full|borel|borel-minus");
  auto* o_mode = app.add_option("--mode", mode, "exhaustive|sampled");
  auto* o_samples = app.add_option("--samples", samples, "Sample count in sampled mode");
  auto* o_seed = app.add_option("--seed", seed, "RNG seed in sampled mode");
  auto* o_workers = app.add_option("--workers", workers, "Worker threads");
  auto* o_out = app.add_option("--out", out_path, "Report path (default stdout)");
  auto* o_force = app.add_flag("--force", force, "Run exhaustive tasks beyond the enumeration bound");
  app.add_option("--config", config_path, "JSON file with the same keys; flags override it");
  auto* o_element = app.add_option("--element", element, "Element 'p;m;[...]' for --task rectify");
  auto* o_fault = app.add_option("--inject-fault", fault, "Corrupt [e_i, e_j]: 'i,j' or 'i,j,value'");
  auto* o_timing = app.add_flag("--no-timing", no_timing, "Write duration_ms as 0");

  std::vector<std::string> argv(args.begin(), args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig c;
  VerificationReport report;
  try {
    if (!config_path.empty()) apply_config_file(config_path, c);
    if (o_p->count()) c.p = p;
    if (o_ext->count()) c.m = ext;
    if (o_task->count()) c.task = parse_task(task);
    if (o_space->count()) c.space = varieties::parse_pair_space(space);
    if (o_mode->count()) c.sampled = parse_mode(mode);
    if (o_samples->count()) c.samples = samples;
    if (o_seed->count()) c.seed = seed;
    if (o_workers->count()) c.workers = workers;
    if (o_out->count()) c.out = out_path;
    if (o_force->count()) c.force = force;
    if (o_element->count()) c.element = element;
    if (o_fault->count()) c.fault = parse_fault(fault);
    if (o_timing->count()) c.timing = !no_timing;
    if (c.element && c.task != Task::Rectify) {
      throw Error(ErrorCode::ParseError, "--element applies to --task rectify only");
    }
    report = run_task(c);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SizeOverflow ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = serialize(report, c.timing);
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << c.out << "\n";
      return 2;
    }
  }
  print_summary(report, err);
  return report.verified() ? 0 : 1;
}

}  // namespace wittcv::harness
