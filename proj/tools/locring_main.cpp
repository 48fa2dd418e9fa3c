#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "locring/error.hpp"
#include "locring/problem.hpp"

namespace {

using locring::Errc;

int errc_exit_code(Errc c) {
  return c == Errc::internal ? 3 : 2;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "locring: cannot open output file '" << out_path << "'\n";
    std::exit(2);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locring: linear systems over localized polynomial rings"};
  app.footer(
      "Tasks: syz | lift | locsolve | member | dom | iszero | bench\n"
      "Exit codes: 0 solved/completed, 1 no-solution, 2 input error, 3 internal error.");

  std::string task;
  std::string in_path;
  std::string out_path;
  std::string ordering;
  uint64_t seed = 0;
  std::size_t count = 0;
  bool have_seed = false, have_count = false;

  app.add_option("task", task, "task to run")
      ->required()
      ->check(CLI::IsMember({"syz", "lift", "locsolve", "member", "dom", "iszero", "bench"}));
  app.add_option("--in", in_path, "problem file (JSON)")->required();
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--seed", seed, "override the benchmark seed")
      ->each([&](const std::string&) { have_seed = true; });
  app.add_option("--count", count, "override the benchmark instance count")
      ->each([&](const std::string&) { have_count = true; });
  app.add_option("--ordering", ordering, "override the monomial ordering")
      ->check(CLI::IsMember({"lex", "degrevlex"}));

  CLI11_PARSE(app, argc, argv);

  nlohmann::ordered_json error_doc;
  error_doc["task"] = task;
  error_doc["verdict"] = "error";

  std::ifstream in(in_path);
  if (!in) {
    error_doc["error"] = {{"kind", "input"}, {"message", "cannot open file '" + in_path + "'"}};
    emit(error_doc.dump(2), out_path);
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    nlohmann::json doc = nlohmann::json::parse(buf.str());
    locring::CliOverrides overrides;
    if (have_seed) overrides.seed = seed;
    if (have_count) overrides.count = count;
    if (!ordering.empty()) overrides.ordering = ordering;

    locring::ProblemFile problem = locring::parse_problem(doc, task, overrides);
    locring::ResultRecord rec = locring::run_task(problem);
    if (task == "bench") {
      emit(rec.csv, out_path);
      std::cerr << "preprocessing (Groebner cache of the ideal): "
                << rec.doc["timings"]["gb_ms"] << " ms\n"
                << "note: the set ideal is assumed maximal; verdicts are undefined "
                   "otherwise\n";
    } else {
      emit(rec.doc.dump(2), out_path);
    }
    return rec.exit_code;
  } catch (const nlohmann::json::exception& e) {
    error_doc["error"] = {{"kind", "json"}, {"message", e.what()}};
    emit(error_doc.dump(2), out_path);
    return 2;
  } catch (const locring::Error& e) {
    nlohmann::ordered_json err;
    err["kind"] = locring::errc_name(e.code());
    err["message"] = e.what();
    if (e.offset() != locring::Error::npos) err["offset"] = e.offset();
    error_doc["error"] = std::move(err);
    emit(error_doc.dump(2), out_path);
    return errc_exit_code(e.code());
  } catch (const std::exception& e) {
    error_doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
    emit(error_doc.dump(2), out_path);
    return 3;
  }
}
