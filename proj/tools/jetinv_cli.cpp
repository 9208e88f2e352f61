#include "jetinv/jetinv.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Options {
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  bool json = false;
  std::string out;
};

const std::vector<std::pair<std::string, std::string>> kValueOptions = {
    {"p", "source dimension"},
    {"k", "jet order"},
    {"n", "target dimension"},
    {"N", "number of test-curve components"},
    {"sigma", "one-parameter subgroup index"},
    {"kind", "lambda, mu or tilde"},
    {"M", "twist multiplier"},
    {"trials", "random trials for --verify"},
    {"seed", "64-bit seed for all sampling"},
    {"coeff-bound", "bound on random numerators and denominators (default 20)"},
    {"params", "comma-separated reparametrization coefficients"},
    {"jet", "jet as inline JSON or @file"},
    {"weights", "torus weights, e.g. \"1,0;-1,0\""},
    {"dir", "fixture directory"},
};

const std::vector<std::pair<std::string, std::string>> kFlagOptions = {
    {"symbolic", "use fully symbolic parameters"},
    {"verify", "run the invariance check"},
    {"force", "override the resource ceiling"},
    {"closed-form", "compare against closed-form entries"},
};

CLI::App* add_command(CLI::App& parent, const std::string& name, const std::string& help, Options& opts,
                      std::string& selected, const std::string& command) {
  CLI::App* sub = parent.add_subcommand(name, help);
  for (const auto& [key, desc] : kValueOptions) sub->add_option("--" + key, opts.values[key], desc);
  for (const auto& [key, desc] : kFlagOptions) sub->add_flag("--" + key, opts.flags[key], desc);
  sub->add_flag("--json", opts.json, "print JSON instead of the table");
  sub->add_option("--out", opts.out, "write JSON to this file");
  sub->callback([&selected, command] { selected = command; });
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for invariant jet differentials"};
  app.set_version_flag("--version", std::string(jetinv_version()));
  app.require_subcommand(1);

  Options opts;
  std::string selected;
  add_command(app, "group-matrix", "reparametrization group matrix", opts, selected, "group-matrix");
  add_command(app, "phi", "flag embedding matrix of a jet", opts, selected, "phi");
  add_command(app, "generators", "Plucker-minor generators", opts, selected, "generators");
  add_command(app, "test-curve", "test-curve equation system", opts, selected, "test-curve");

  CLI::App* orbit = app.add_subcommand("orbit", "orbit limits and stabilizers");
  orbit->require_subcommand(1);
  for (const std::string name : {"limit", "closed-form", "stabilizer", "codim-report", "probe-p", "limit-stabilizer", "torus"}) {
    add_command(*orbit, name, "orbit " + name, opts, selected, "orbit-" + name);
  }
  CLI::App* fixtures = app.add_subcommand("fixtures", "golden fixtures");
  fixtures->require_subcommand(1);
  add_command(*fixtures, "regenerate", "rewrite stored fixtures", opts, selected, "fixtures-regenerate");
  add_command(*fixtures, "check", "compare current output with stored fixtures", opts, selected, "fixtures-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<jetinv_params, decltype(&jetinv_params_destroy)> params(jetinv_params_create(), jetinv_params_destroy);
  for (const auto& [key, value] : opts.values) {
    if (!value.empty()) jetinv_params_set(params.get(), key.c_str(), value.c_str());
  }
  for (const auto& [key, on] : opts.flags) {
    if (on) jetinv_params_set(params.get(), key.c_str(), "1");
  }

  jetinv_result* raw = nullptr;
  const jetinv_status status = jetinv_run(selected.c_str(), params.get(), &raw);
  std::unique_ptr<jetinv_result, decltype(&jetinv_result_destroy)> result(raw, jetinv_result_destroy);
  if (result == nullptr) {
    std::cerr << "error: " << jetinv_last_error() << "\n";
    return status == JETINV_INTERNAL ? 4 : static_cast<int>(status);
  }
  if (!opts.out.empty()) {
    std::ofstream out(opts.out);
    if (!out) {
      std::cerr << "error: cannot write " << opts.out << "\n";
      return 2;
    }
    out << jetinv_result_json(result.get()) << "\n";
  }
  if (opts.json) {
    std::cout << jetinv_result_json(result.get()) << "\n";
  } else {
    std::cout << jetinv_result_text(result.get());
  }
  return static_cast<int>(status);
}
