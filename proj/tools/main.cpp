#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edgeideals/enumerate.hpp"
#include "edgeideals/generator.hpp"
#include "edgeideals/instance_io.hpp"
#include "edgeideals/verify.hpp"

namespace ei = edgeideals;

namespace {

struct CommonFlags {
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // 0 = default/env
  std::string field = "q";
  int max_n = ei::kMaxVertices;
  std::string emit = "records";
  bool witnesses = false;
  bool timings = false;
  bool strict = false;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "random seed (64-bit)");
  cmd->add_option("--budget", flags.budget,
                  "search node budget (overrides EDGEIDEALS_BUDGET; 0 keeps the default)");
  cmd->add_option("--field", flags.field, "homology coefficients: q or p:<prime>");
  cmd->add_option("--max-n", flags.max_n, "reject instances with more vertices");
  cmd->add_option("--emit", flags.emit, "records | csv | both")
      ->check(CLI::IsMember({"records", "csv", "both"}));
  cmd->add_flag("--witnesses", flags.witnesses, "include sdepth witness partitions in records");
  cmd->add_flag("--timings", flags.timings,
                "include per-instance timings in records (breaks byte determinism)");
  cmd->add_flag("--strict", flags.strict, "treat non-antichain edge lists as errors");
  cmd->add_option("--jobs", flags.jobs, "worker threads (output order is unaffected)");
}

ei::SuiteOptions suite_options(const CommonFlags& flags) {
  ei::SuiteOptions options;
  options.report.field = flags.field == "q"
                             ? ei::FieldSpec::q()
                             : ei::FieldSpec::mod(static_cast<std::uint32_t>(
                                   std::stoul(flags.field.substr(flags.field.find(':') + 1))));
  options.report.limits = ei::default_limits();
  if (flags.budget > 0) options.report.limits.node_budget = flags.budget;
  options.report.witnesses = flags.witnesses;
  options.record.witnesses = flags.witnesses;
  options.record.timings = flags.timings;
  options.jobs = flags.jobs;
  options.emit_records = flags.emit != "csv";
  options.emit_csv = flags.emit != "records";
  return options;
}

std::vector<ei::ParsedInstance> load_instances(const std::vector<std::string>& files,
                                               const CommonFlags& flags) {
  ei::ParseOptions popts;
  popts.strict_antichain = flags.strict;
  std::vector<ei::ParsedInstance> instances;
  if (files.empty()) {
    instances = ei::read_instances(std::cin, popts);
  } else {
    for (const std::string& file : files) {
      auto part = ei::read_instance_file(file, popts);
      instances.insert(instances.end(), part.begin(), part.end());
    }
  }
  for (const auto& instance : instances) {
    if (instance.clutter.n() > flags.max_n) {
      throw std::runtime_error("instance " + instance.id + " exceeds --max-n " +
                               std::to_string(flags.max_n));
    }
    if (instance.minimalized) {
      std::cerr << "warning: instance " << instance.id << " was minimalized to an antichain\n";
    }
  }
  return instances;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and proved bounds for edge ideals of clutters"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "emit seeded random instances");
  CommonFlags gen_flags;
  add_common(generate, gen_flags);
  int gen_count = 10;
  int gen_n = 6;
  std::string gen_mode = "uniform";
  int gen_d = 2;
  double gen_p = 0.35;
  int gen_edges = 4;
  std::string gen_size_probs;
  std::string gen_out;
  generate->add_option("--count", gen_count, "number of instances");
  generate->add_option("--n", gen_n, "vertex count");
  generate->add_option("--mode", gen_mode, "uniform | uniform-count | mixed")
      ->check(CLI::IsMember({"uniform", "uniform-count", "mixed"}));
  generate->add_option("--d", gen_d, "edge size for the uniform modes");
  generate->add_option("--p", gen_p, "edge probability for the uniform mode");
  generate->add_option("--edges", gen_edges, "edge count for uniform-count mode");
  generate->add_option("--size-probs", gen_size_probs,
                       "mixed mode: comma list of probabilities by edge size");
  generate->add_option("--out", gen_out, "output file (default stdout)");

  // invariants / bounds / dual / verify share instance inputs
  std::vector<std::string> files;
  auto add_inputs = [&files](CLI::App* cmd) {
    cmd->add_option("files", files, "instance files (default: stdin)");
  };

  auto* invariants = app.add_subcommand("invariants", "compute invariants per instance");
  CommonFlags inv_flags;
  add_common(invariants, inv_flags);
  add_inputs(invariants);

  auto* bounds = app.add_subcommand("bounds", "compute bounds and verdicts per instance");
  CommonFlags bounds_flags;
  add_common(bounds, bounds_flags);
  add_inputs(bounds);
  std::string bounds_csv_out;
  bounds->add_option("--csv-out", bounds_csv_out, "write the CSV summary to a file");

  auto* dual = app.add_subcommand("dual", "emit the Alexander dual of each instance");
  CommonFlags dual_flags;
  add_common(dual, dual_flags);
  add_inputs(dual);

  auto* verify = app.add_subcommand("verify", "run the proved-inequality suite");
  CommonFlags verify_flags;
  verify_flags.max_n = 10;  // desk-scale default for full suites
  add_common(verify, verify_flags);
  add_inputs(verify);
  int verify_exhaustive = -1;
  int verify_count = 0;
  int verify_n = 6;
  std::string verify_mode = "mixed";
  int verify_d = 2;
  double verify_p = 0.35;
  std::string verify_csv_out;
  verify->add_option("--exhaustive", verify_exhaustive,
                     "verify every clutter on this many vertices");
  verify->add_option("--count", verify_count, "generate this many seeded instances instead");
  verify->add_option("--n", verify_n, "vertex count for generated instances");
  verify->add_option("--mode", verify_mode, "generator mode: uniform | uniform-count | mixed");
  verify->add_option("--d", verify_d, "edge size for the uniform modes");
  verify->add_option("--p", verify_p, "edge probability");
  verify->add_option("--csv-out", verify_csv_out, "write the CSV summary to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      ei::GenConfig config;
      config.n = gen_n;
      config.d = gen_d;
      config.p = gen_p;
      config.edge_target = gen_edges;
      if (gen_mode == "uniform") {
        config.mode = ei::GenConfig::Mode::UniformProb;
      } else if (gen_mode == "uniform-count") {
        config.mode = ei::GenConfig::Mode::UniformCount;
      } else {
        config.mode = ei::GenConfig::Mode::MixedProb;
        if (gen_size_probs.empty()) {
          config.size_probs.assign(static_cast<std::size_t>(gen_n), 0.0);
          if (gen_n >= 2) config.size_probs[1] = gen_p;
          if (gen_n >= 3) config.size_probs[2] = gen_p / 2;
        } else {
          std::stringstream ss(gen_size_probs);
          std::string item;
          while (std::getline(ss, item, ',')) config.size_probs.push_back(std::stod(item));
        }
      }
      ei::Rng rng(gen_flags.seed);
      std::ofstream file_out;
      std::ostream* out = &std::cout;
      if (!gen_out.empty()) {
        file_out = open_out(gen_out);
        out = &file_out;
      }
      for (int i = 0; i < gen_count; ++i) {
        const ei::Clutter c = ei::random_clutter(config, rng);
        const std::string id = "g" + std::to_string(gen_flags.seed) + "-" + std::to_string(i);
        *out << ei::serialize_instance(id, c) << '\n';
      }
      return 0;
    }

    if (dual->parsed()) {
      for (const auto& instance : load_instances(files, dual_flags)) {
        const ei::SquarefreeIdeal ideal = ei::edge_ideal(instance.clutter);
        if (ideal.is_zero()) {
          std::cerr << "warning: skipping " << instance.id << " (zero ideal has no dual)\n";
          continue;
        }
        const ei::Clutter dual_clutter = ei::clutter_of(ei::alexander_dual(ideal));
        std::cout << ei::serialize_instance(instance.id + ".dual", dual_clutter) << '\n';
      }
      return 0;
    }

    if (invariants->parsed() || bounds->parsed() || verify->parsed()) {
      const CommonFlags& flags = invariants->parsed()  ? inv_flags
                                 : bounds->parsed()    ? bounds_flags
                                                       : verify_flags;
      ei::SuiteOptions options = suite_options(flags);
      if (invariants->parsed()) {
        options.report.graph_checks = false;
        options.report.clique_deletion = false;
      }

      std::vector<ei::ParsedInstance> instances;
      if (verify->parsed() && verify_exhaustive >= 0) {
        int counter = 0;
        ei::for_each_clutter(verify_exhaustive, /*include_edgeless=*/true,
                             [&](const ei::Clutter& c) {
                               instances.push_back(ei::ParsedInstance{
                                   "x" + std::to_string(verify_exhaustive) + "-" +
                                       std::to_string(counter++),
                                   c, false});
                             });
      } else if (verify->parsed() && verify_count > 0) {
        ei::GenConfig config;
        config.n = verify_n;
        config.d = verify_d;
        config.p = verify_p;
        if (verify_mode == "uniform") {
          config.mode = ei::GenConfig::Mode::UniformProb;
        } else if (verify_mode == "uniform-count") {
          config.mode = ei::GenConfig::Mode::UniformCount;
        } else {
          config.mode = ei::GenConfig::Mode::MixedProb;
          config.size_probs.assign(static_cast<std::size_t>(verify_n), 0.0);
          if (verify_n >= 2) config.size_probs[1] = verify_p;
          if (verify_n >= 3) config.size_probs[2] = verify_p / 2;
        }
        ei::Rng rng(flags.seed);
        for (int i = 0; i < verify_count; ++i) {
          instances.push_back(ei::ParsedInstance{
              "g" + std::to_string(flags.seed) + "-" + std::to_string(i),
              ei::random_clutter(config, rng), false});
        }
        for (const auto& instance : instances) {
          if (instance.clutter.n() > flags.max_n) {
            throw std::runtime_error("generated instance exceeds --max-n");
          }
        }
      } else {
        instances = load_instances(files, flags);
      }

      const std::string& csv_path = verify->parsed() ? verify_csv_out : bounds_csv_out;
      std::ofstream csv_file;
      std::ostream* csv_stream = nullptr;
      if (options.emit_csv) {
        if (!csv_path.empty()) {
          csv_file = open_out(csv_path);
          csv_stream = &csv_file;
        } else {
          csv_stream = &std::cout;
          options.emit_records = false;  // records and csv cannot share stdout
        }
      }

      const ei::SuiteTotals totals =
          ei::run_suite(instances, options, &std::cout, csv_stream);
      std::cerr << ei::summarize(totals);
      if (totals.skipped > 0) std::cerr << "warning: some verdicts were skipped\n";
      return verify->parsed() ? totals.exit_code() : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
