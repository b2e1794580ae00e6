// deltaring command-line interface.
//
// Exit codes: 0 true / pass, 1 false / fail, 2 usage, parse or build error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "deltaring/dsl.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/harness.hpp"
#include "deltaring/predicates.hpp"
#include "deltaring/report_json.hpp"

namespace dr = deltaring;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  std::optional<std::size_t> max_order;
  unsigned threads = 1;
  bool timing = false;
};

void emit(const dr::Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_info(const Options& opt, const std::string& expr, bool dump) {
  const dr::RingPtr ring = dr::build_ring(expr);
  if (dump) {
    std::cout << dr::dump_ring(*ring) << "\n";
    return kTrue;
  }
  const dr::RingProfile profile(ring);
  if (opt.json) {
    emit(dr::info_json(profile));
  } else {
    std::cout << dr::info_text(profile);
  }
  return kTrue;
}

int cmd_check(const Options& opt, const std::string& cls, const std::string& expr) {
  const dr::RingClassInfo& info = dr::find_class(cls);
  const dr::RingProfile profile(dr::build_ring(expr));
  const dr::CheckReport report = info.evaluate(profile);
  if (opt.json) {
    emit(dr::check_json(report));
  } else {
    std::cout << dr::check_text(report);
  }
  return report.verdict ? kTrue : kFalse;
}

int cmd_verify(const Options& opt, const std::vector<std::string>& selectors) {
  dr::HarnessConfig config;
  if (opt.max_order) config.max_order = *opt.max_order;
  config.threads = opt.threads;
  config.timing = opt.timing;

  std::vector<dr::CheckOutcome> outcomes;
  const bool all = selectors.empty() || (selectors.size() == 1 && selectors[0] == "all");
  if (all) {
    outcomes = dr::run_all(config).outcomes;
  } else {
    for (const auto& id : selectors) dr::find_check(id);  // reject unknown ids before running anything
    for (const auto& id : selectors) outcomes.push_back(dr::run_check_on_catalog(id, config));
  }
  if (opt.json) {
    emit(dr::verify_json(outcomes));
  } else {
    std::cout << dr::verify_text(outcomes);
  }
  for (const auto& o : outcomes)
    if (!o.verdict) return kFalse;
  return kTrue;
}

int cmd_search(const Options& opt, const std::vector<std::string>& include, const std::vector<std::string>& exclude,
               bool extended) {
  const std::size_t max_order = opt.max_order.value_or(1024);
  const auto rings = dr::search_classes(include, exclude, max_order, extended);
  if (opt.json) {
    emit(dr::search_json(include, exclude, max_order, rings));
  } else {
    std::cout << dr::search_text(rings);
  }
  return kTrue;
}

int cmd_classes(const Options& opt) {
  if (opt.json) {
    emit(dr::classes_json());
  } else {
    std::cout << dr::classes_text();
  }
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring explorer for Delta(R), DeltaU and 2-DeltaU rings"};
  app.require_subcommand(1);
  Options opt;

  app.add_flag("--json", opt.json, "Emit the JSON report");
  app.add_option("--max-order", opt.max_order, "Order guard and catalog scope limit")
      ->envname("DELTA_RING_MAX_ORDER")
      ->check(CLI::Range(std::size_t{2}, std::size_t{65535}));
  app.add_option("--threads", opt.threads, "Worker threads for verify")
      ->envname("DELTA_RING_THREADS")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", opt.timing, "Fill runtime_ms in verify reports");

  std::string expr;
  std::string cls;
  bool dump = false;
  std::vector<std::string> selectors;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  bool extended = false;

  auto* info = app.add_subcommand("info", "Element sets and class verdicts of a ring");
  info->add_option("ring", expr, "Ring expression")->required();
  info->add_flag("--dump", dump, "Print the ring's table dump instead");

  auto* check = app.add_subcommand("check", "Evaluate one class on a ring");
  check->add_option("class", cls, "Class name (see 'classes')")->required();
  check->add_option("ring", expr, "Ring expression")->required();

  auto* verify = app.add_subcommand("verify", "Run theorem checks over the catalog");
  verify->add_option("checks", selectors, "'all' or check ids");

  auto* search = app.add_subcommand("search", "Catalog rings in every --include class and no --exclude class");
  search->add_option("--include", include, "Required classes")->delimiter(',');
  search->add_option("--exclude", exclude, "Forbidden classes")->delimiter(',');
  search->add_flag("--extended", extended, "Also scan every Zm and Za x Zb up to --max-order");

  auto* classes = app.add_subcommand("classes", "List class names with definitions");

  auto* dump_cmd = app.add_subcommand("dump", "Print the table dump of a ring");
  dump_cmd->add_option("ring", expr, "Ring expression")->required();

  // Global flags may also follow the subcommand.
  for (auto* sub : {info, check, verify, search, classes, dump_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (opt.max_order) dr::set_order_guard(*opt.max_order);
    if (*info) return cmd_info(opt, expr, dump);
    if (*check) return cmd_check(opt, cls, expr);
    if (*verify) return cmd_verify(opt, selectors);
    if (*search) return cmd_search(opt, include, exclude, extended);
    if (*classes) return cmd_classes(opt);
    if (*dump_cmd) return cmd_info(opt, expr, true);
  } catch (const dr::RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
