// quivkit run FILE --command CMD [--out PATH] [--emit-dot PATH]
// quivkit check FILE
// quivkit fmt FILE
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include "quivkit/cli.hpp"
#include "quivkit/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kInputError = 2;

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot read file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{path + ": cannot write file"};
  out << text;
}

quivkit::dsl::Document load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return quivkit::dsl::parse(text);
  } catch (const quivkit::dsl::DslError& err) {
    throw InputError{path + ":" + quivkit::dsl::to_string(err.pos()) + ": error: " + err.message()};
  }
}

template <class F>
auto with_positions(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const quivkit::dsl::DslError& err) {
    throw InputError{path + ":" + quivkit::dsl::to_string(err.pos()) + ": error: " + err.message()};
  }
}

int run_command(const std::string& file, const std::string& command, const std::string& out_path,
                const std::string& dot_path) {
  const quivkit::dsl::Document doc = load(file);
  const quivkit::cli::Outcome outcome =
      with_positions(file, [&] { return quivkit::cli::run(doc, command, quivkit::cli::seed_from_env()); });
  const std::string json = outcome.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << json;
  } else {
    write_file(out_path, json);
  }
  if (!dot_path.empty()) write_file(dot_path, outcome.dot);
  return outcome.passed ? 0 : 1;
}

int check_command(const std::string& file) {
  const quivkit::dsl::Document doc = load(file);
  const quivkit::cli::Outcome outcome =
      with_positions(file, [&] { return quivkit::cli::run(doc, "check-suite", quivkit::cli::seed_from_env()); });
  int failed = 0;
  for (const auto& r : outcome.report.at("results")) {
    const bool passed = r.at("passed").get<bool>();
    failed += passed ? 0 : 1;
    std::cout << (passed ? "PASS " : "FAIL ") << r.at("check").get<std::string>() << " ["
              << r.at("subject").get<std::string>() << "]";
    if (r.contains("error")) std::cout << " " << r.at("error").at("message").get<std::string>();
    std::cout << "\n";
  }
  std::cout << outcome.report.at("results").size() - static_cast<std::size_t>(failed) << " passed, " << failed
            << " failed\n";
  return failed == 0 ? 0 : 1;
}

int fmt_command(const std::string& file) {
  const quivkit::dsl::Document doc = load(file);
  std::cout << quivkit::dsl::print(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quivkit: pointed algebras, Gabriel quivers and path algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string command;
  std::string out_path;
  std::string dot_path;

  CLI::App* run = app.add_subcommand("run", "Run a command and write a JSON report");
  run->add_option("FILE", file, "Input document")->required();
  run->add_option("--command", command, "Command")->required()->check(CLI::IsMember(quivkit::cli::commands()));
  run->add_option("--out", out_path, "Report path (stdout when omitted)");
  run->add_option("--emit-dot", dot_path, "Write the quivers as Graphviz text");

  CLI::App* check = app.add_subcommand("check", "Run the check suite and print one line per check");
  check->add_option("FILE", file, "Input document")->required();

  CLI::App* fmt = app.add_subcommand("fmt", "Print the document in canonical form");
  fmt->add_option("FILE", file, "Input document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (run->parsed()) return run_command(file, command, out_path, dot_path);
    if (check->parsed()) return check_command(file);
    return fmt_command(file);
  } catch (const InputError& err) {
    std::cerr << err.message << "\n";
    return kInputError;
  } catch (const quivkit::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  }
}
