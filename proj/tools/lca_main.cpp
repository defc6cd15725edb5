#include "lca/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in enveloping algebras of generic Lie color algebras"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> degree_bound;
  std::optional<int> field_order;

  CLI::App* run = app.add_subcommand("run", "Run the queries of a session file");
  run->add_option("file", file, "Session file")->required()->check(CLI::ExistingFile);
  run->add_flag("--json", json, "Emit a JSON report");
  run->add_option("--seed", seed, "Seed for randomized checks");
  run->add_option("--degree-bound", degree_bound, "Default bound for hilbert queries");
  run->add_option("--field-order", field_order, "Work over Q(zeta_N) for this N")->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::ifstream in(file);
  std::stringstream buffer;
  buffer << in.rdbuf();

  lca::Session session;
  try {
    session = lca::parse_session(buffer.str(), {field_order});
  } catch (const lca::SessionError& e) {
    if (json) {
      lca::Json doc;
      doc["schema"] = 1;
      doc["error"] = {{"kind", e.kind()}, {"line", e.where().line}, {"column", e.where().column}, {"message", e.detail()}};
      doc["ok"] = false;
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cerr << file << ":" << e.where().line << ":" << e.where().column << ": " << e.kind() << ": " << e.detail()
                << '\n';
    }
    return 2;
  }

  const auto results = lca::run(session, {seed, degree_bound});
  if (json)
    std::cout << lca::report_json(session, results).dump(2) << '\n';
  else
    std::cout << lca::report_text(results);

  for (const auto& r : results)
    if (!r.ok)
      return 1;
  return 0;
}
