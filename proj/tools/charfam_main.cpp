#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charfam/catalog.hpp"
#include "charfam/character_table.hpp"
#include "charfam/errors.hpp"
#include "charfam/pipeline.hpp"

namespace {

struct CommonArgs {
  std::string group_spec;
  std::string output;
  std::string format = "json";
  unsigned jobs = 1;
  int max_order = charfam::Group::kOrderCap;
  bool timings = false;
  long rank1_n = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_group = true) {
  if (needs_group)
    cmd->add_option("--group", args.group_spec, "group spec, e.g. heisenberg:3")->required();
  cmd->add_option("--output", args.output, "write the report to this path instead of stdout");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--jobs", args.jobs, "worker threads for the per-subgroup loops");
  cmd->add_option("--max-order", args.max_order, "reject groups above this order");
  cmd->add_flag("--timings", args.timings, "include wall times in the report (not byte-stable)");
}

charfam::GroupPtr load(const CommonArgs& args) {
  charfam::GroupPtr g = charfam::build_group(args.group_spec);
  if (g->order() > args.max_order)
    throw charfam::OrderCapError("group order " + std::to_string(g->order()) +
                                 " exceeds --max-order " + std::to_string(args.max_order));
  return g;
}

void emit(const CommonArgs& args, const std::string& payload) {
  if (args.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw charfam::ParseError("cannot open output file '" + args.output + "'");
  out << payload;
}

int emit_report(const CommonArgs& args, const charfam::VerificationReport& report) {
  if (args.format == "text")
    emit(args, report.to_text());
  else
    emit(args, report.to_json().dump(2) + "\n");
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite p-group verification toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  charfam::RunOptions opts;

  auto* cat = app.add_subcommand("catalog", "list the built-in groups");

  auto* table = app.add_subcommand("table", "print the exact character table");
  add_common(table, args);

  auto* chi = app.add_subcommand("check-chi", "class function pipeline for cyclic-center groups");
  add_common(chi, args);

  auto* rank1 = app.add_subcommand("check-rank1", "rank-one isotropy star diagram pipeline");
  add_common(rank1, args);
  rank1->add_option("--rank1-n", args.rank1_n,
                    "degree of the diagram representations (multiple of lcm(m_d))");

  auto* biset = app.add_subcommand("check-biset", "fixed-coset composition sweep");
  add_common(biset, args);

  auto* all = app.add_subcommand("check-all", "run every applicable check");
  add_common(all, args);
  all->add_option("--rank1-n", args.rank1_n,
                  "degree of the diagram representations (multiple of lcm(m_d))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  opts.jobs = args.jobs == 0 ? 1 : args.jobs;
  opts.timings = args.timings;
  opts.rank1_n = args.rank1_n;

  try {
    if (cat->parsed()) {
      std::string payload;
      for (const auto& spec : charfam::catalog_specs()) payload += spec + "\n";
      emit(args, payload);
      return 0;
    }
    if (table->parsed()) {
      charfam::GroupPtr g = load(args);
      charfam::CharacterTable t = charfam::character_table(g);
      if (args.format == "text") {
        std::ostringstream os;
        os << "table " << g->label() << " irreducibles " << t.irreducibles.size() << "\n";
        for (const auto& chi_row : t.irreducibles) {
          charfam::write_class_function(os, chi_row);
          os << "\n";
        }
        emit(args, os.str());
      } else {
        nlohmann::ordered_json j;
        j["schema"] = charfam::kReportSchema;
        j["group"] = {{"label", g->label()}, {"order", g->order()}};
        j["conductor"] = g->exponent();
        j["classes"] = nlohmann::ordered_json::array();
        const auto& part = g->conjugacy();
        for (std::size_t k = 0; k < part.classes.size(); ++k)
          j["classes"].push_back({{"representative", part.representatives[k]},
                                  {"size", part.classes[k].size()}});
        j["irreducibles"] = nlohmann::ordered_json::array();
        for (const auto& chi_row : t.irreducibles) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (int k = 0; k < chi_row.num_classes(); ++k)
            row.push_back(chi_row.value_on_class(k).str());
          j["irreducibles"].push_back(std::move(row));
        }
        emit(args, j.dump(2) + "\n");
      }
      return 0;
    }
    if (chi->parsed()) return emit_report(args, charfam::run_check_chi(load(args), opts));
    if (rank1->parsed()) return emit_report(args, charfam::run_check_rank1(load(args), opts));
    if (biset->parsed()) return emit_report(args, charfam::run_check_biset(load(args), opts));
    if (all->parsed()) return emit_report(args, charfam::run_check_all(load(args), opts));
  } catch (const charfam::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const charfam::OrderCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const charfam::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
