// cohomlen: batch front end over the C API.
//
//   cohomlen <query> --input FILE [--output FILE] [--param key=value]... [--format json|text]
//
// Exit status: 0 success (including negative verdicts), 64 usage/parse
// error, 65 data-validation error, 66 bounded-search failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohomlen/cohomlen.h"

namespace {

constexpr int usage_status = COHOMLEN_E_USAGE;

const std::vector<std::string> commands = {"length",       "euler",        "validate",
                                           "borsuk-ulam",  "map-exists",   "canonical-target",
                                           "bourgin-yang", "bounds",       "verify",
                                           "lint"};

int report_usage(const std::string& message) {
  std::cerr << "cohomlen: E_USAGE: " << message << "\n";
  return usage_status;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact length, Euler class and Borsuk-Ulam calculator for p-torus and torus actions"};
  app.set_version_flag("--version", std::string(cohomlen_version()));

  std::string query;
  std::string input;
  std::string output;
  std::string format = "json";
  std::vector<std::string> params;

  app.add_option("query", query, "Query to run")->required()->check(CLI::IsMember(commands));
  app.add_option("-i,--input", input, "Input JSON document ('-' for stdin)")->required();
  app.add_option("-o,--output", output, "Write the report here instead of stdout");
  app.add_option("-p,--param", params, "Parameter override key=value (repeatable)");
  app.add_option("-f,--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_usage(e.what());
  }

  std::vector<std::string> keys;
  std::vector<std::string> values;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) return report_usage("--param expects key=value, got '" + p + "'");
    keys.push_back(p.substr(0, eq));
    values.push_back(p.substr(eq + 1));
  }
  std::vector<const char*> key_ptrs, value_ptrs;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    key_ptrs.push_back(keys[i].c_str());
    value_ptrs.push_back(values[i].c_str());
  }

  std::string document;
  if (!read_input(input, document)) return report_usage("cannot read input file '" + input + "'");

  cohomlen_report* report = nullptr;
  const cohomlen_status status =
      query == "lint" ? cohomlen_lint(document.c_str(), &report)
                      : cohomlen_run(document.c_str(), query.c_str(), key_ptrs.data(), value_ptrs.data(),
                                     keys.size(), &report);
  if (!report) {
    std::cerr << "cohomlen: " << cohomlen_last_error() << "\n";
    return status == COHOMLEN_OK ? COHOMLEN_E_DATA : status;
  }

  const char* rendered =
      cohomlen_report_render(report, format == "text" ? COHOMLEN_FORMAT_TEXT : COHOMLEN_FORMAT_JSON);
  if (*cohomlen_report_error_code(report) != '\0') {
    std::cerr << "cohomlen: " << cohomlen_last_error() << "\n";
  }

  int exit_status = status;
  if (output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    out << rendered;
    if (!out) exit_status = report_usage("cannot write output file '" + output + "'");
  }
  cohomlen_report_free(report);
  return exit_status;
}
