#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <boost/program_options.hpp>

#include "quotcount/boxcounting.hpp"
#include "quotcount/invariants.hpp"
#include "quotcount/power_series.hpp"
#include "quotcount/render.hpp"

namespace po = boost::program_options;
using namespace quotcount;

namespace {

void usage(std::ostream& out) {
  out << "usage: quotcount <command> [options]\n"
         "\n"
         "commands:\n"
         "  macmahon     coefficients of the MacMahon function M(q)\n"
         "  boxes        count or enumerate box configurations (count|enumerate)\n"
         "  local-model  signed series q M(-q)/(1+q) of the punctual local model\n"
         "  quot         Euler characteristics of the punctual Quot schemes of a curve\n"
         "  pt           local stable-pairs series bps (1+q)^(2g-2)\n"
         "  dt           local Donaldson-Thomas series M(-q)^chi(Y) PT(q)\n"
         "  wallcross    verify the DT/PT wall-crossing identity coefficientwise\n"
         "\n"
         "run 'quotcount <command> --help' for the options of a command.\n";
}

std::vector<long long> rows_upto(int order) {
  std::vector<long long> rows(static_cast<std::size_t>(order) + 1);
  std::iota(rows.begin(), rows.end(), 0);
  return rows;
}

po::options_description with_format(const char* what) {
  po::options_description desc(what);
  desc.add_options()
      ("help,h", "show this help")
      ("format", po::value<std::string>()->default_value("table"),
       "output format: table, json or csv");
  return desc;
}

// Parses the remaining tokens against desc; returns true when --help was
// requested (help text already printed).
bool parse_into(const std::vector<std::string>& args,
                const po::options_description& desc, po::variables_map& vm) {
  po::store(po::command_line_parser(args).options(desc).run(), vm);
  if (vm.count("help")) {
    std::cout << desc;
    return true;
  }
  po::notify(vm);
  return false;
}

int emit(const SeriesDoc& doc, const std::string& format) {
  std::cout << render(doc, parse_format(format));
  if (doc.verdict && !*doc.verdict) return 1;
  return 0;
}

int run_macmahon(const std::vector<std::string>& args) {
  auto desc = with_format("macmahon options");
  desc.add_options()("order", po::value<int>()->required(), "truncation order N");
  po::variables_map vm;
  if (parse_into(args, desc, vm)) return 0;
  const int order = vm["order"].as<int>();
  if (order < 0) throw std::invalid_argument("--order must be non-negative");
  SeriesDoc doc{"macmahon",
                {{"order", static_cast<long long>(order)}},
                {"macmahon"},
                {macmahon(order).coefficients()},
                rows_upto(order),
                std::nullopt};
  return emit(doc, vm["format"].as<std::string>());
}

int run_local_model(const std::vector<std::string>& args) {
  auto desc = with_format("local-model options");
  desc.add_options()("order", po::value<int>()->required(), "truncation order N >= 1");
  po::variables_map vm;
  if (parse_into(args, desc, vm)) return 0;
  const int order = vm["order"].as<int>();
  if (order < 1) throw std::invalid_argument("--order must be at least 1");
  SeriesDoc doc{"local-model",
                {{"order", static_cast<long long>(order)}},
                {"local_model"},
                {local_model_series(order).coefficients()},
                rows_upto(order),
                std::nullopt};
  return emit(doc, vm["format"].as<std::string>());
}

int run_boxes(const std::vector<std::string>& args) {
  if (args.empty() || (args[0] != "count" && args[0] != "enumerate")) {
    if (!args.empty() && (args[0] == "--help" || args[0] == "-h")) {
      std::cout << "usage: quotcount boxes count|enumerate --n K [--leg|--plain] "
                   "[--format F]\n";
      return 0;
    }
    std::cerr << "boxes requires a mode: count or enumerate\n";
    return 2;
  }
  const bool counting = args[0] == "count";
  auto desc = with_format(counting ? "boxes count options" : "boxes enumerate options");
  desc.add_options()
      ("n", po::value<int>()->required(), "volume (number of boxes)")
      ("leg", po::bool_switch(), "one-leg model (default)")
      ("plain", po::bool_switch(), "plain plane partitions");
  po::variables_map vm;
  if (parse_into({args.begin() + 1, args.end()}, desc, vm)) return 0;
  const int n = vm["n"].as<int>();
  if (n < 0) throw std::invalid_argument("--n must be non-negative");
  if (vm["leg"].as<bool>() && vm["plain"].as<bool>())
    throw std::invalid_argument("--leg and --plain are mutually exclusive");
  const bool leg = !vm["plain"].as<bool>();
  if (!counting) {
    if (vm["format"].as<std::string>() != "table")
      throw std::invalid_argument("boxes enumerate emits only the text stream");
    bool first = true;
    const auto print = [&](const HeightConfig& config) {
      if (!first) std::cout << '\n';
      std::cout << config.to_text();
      first = false;
    };
    if (leg)
      for_each_one_leg(n, print);
    else
      for_each_plane_partition(n, print);
    return 0;
  }
  const long long count = leg ? count_one_leg(n) : count_plane_partitions(n);
  SeriesDoc doc{"boxes-count",
                {{"n", static_cast<long long>(n)},
                 {"model", std::string(leg ? "leg" : "plain")}},
                {"count"},
                {{to_mpz(count)}},
                {n},
                std::nullopt};
  return emit(doc, vm["format"].as<std::string>());
}

int run_quot(const std::vector<std::string>& args) {
  auto desc = with_format("quot options");
  desc.add_options()
      ("chi-y", po::value<long long>()->required(), "Euler characteristic of Y")
      ("genus", po::value<int>()->required(), "genus of the curve")
      ("order", po::value<int>()->required(), "truncation order N")
      ("stratified", po::bool_switch(), "compute by the stratified sum")
      ("series", po::bool_switch(), "compute by the closed-form series (default)")
      ("weighted", po::bool_switch(), "compute the signed (weighted) series");
  po::variables_map vm;
  if (parse_into(args, desc, vm)) return 0;
  const CurveSetup setup(vm["chi-y"].as<long long>(), vm["genus"].as<int>(),
                         vm["order"].as<int>());
  bool stratified = vm["stratified"].as<bool>();
  bool series = vm["series"].as<bool>();
  const bool weighted = vm["weighted"].as<bool>();
  if (!stratified && !series && !weighted) series = true;

  SeriesDoc doc{"quot",
                {{"chi-y", setup.chi_y},
                 {"genus", static_cast<long long>(setup.genus)},
                 {"order", static_cast<long long>(setup.order)}},
                {},
                {},
                rows_upto(setup.order),
                std::nullopt};
  if (stratified) {
    std::vector<mpz_class> column;
    for (int n = 0; n <= setup.order; ++n)
      column.push_back(chi_quot_stratified(setup, n));
    doc.labels.push_back("chi_quot_stratified");
    doc.columns.push_back(std::move(column));
  }
  if (series) {
    doc.labels.push_back("chi_quot");
    doc.columns.push_back(chi_quot_series(setup).coefficients());
  }
  if (weighted) {
    doc.labels.push_back("weighted_chi_quot");
    doc.columns.push_back(weighted_chi_quot_series(setup).coefficients());
  }
  if (stratified && series) doc.verdict = doc.columns[0] == doc.columns[1];
  return emit(doc, vm["format"].as<std::string>());
}

// Shared by pt, dt and wallcross, which take the same curve flags.
CurveSetup curve_flags(const std::vector<std::string>& args,
                       po::options_description& desc, po::variables_map& vm,
                       bool* help) {
  desc.add_options()
      ("chi-y", po::value<long long>()->default_value(0),
       "Euler characteristic of Y")
      ("genus", po::value<int>()->required(), "genus of the curve")
      ("bps", po::value<long long>()->default_value(1), "BPS number of the curve")
      ("order", po::value<int>()->required(), "truncation order N");
  *help = parse_into(args, desc, vm);
  if (*help) return CurveSetup(0, 0, 0);
  return CurveSetup(vm["chi-y"].as<long long>(), vm["genus"].as<int>(),
                    vm["order"].as<int>(), vm["bps"].as<long long>());
}

int run_pt(const std::vector<std::string>& args) {
  auto desc = with_format("pt options");
  po::variables_map vm;
  bool help = false;
  const CurveSetup setup = curve_flags(args, desc, vm, &help);
  if (help) return 0;
  SeriesDoc doc{"pt",
                {{"genus", static_cast<long long>(setup.genus)},
                 {"bps", setup.bps},
                 {"order", static_cast<long long>(setup.order)}},
                {"pt"},
                {pt_series(setup).coefficients()},
                rows_upto(setup.order),
                std::nullopt};
  return emit(doc, vm["format"].as<std::string>());
}

int run_dt(const std::vector<std::string>& args) {
  auto desc = with_format("dt options");
  po::variables_map vm;
  bool help = false;
  const CurveSetup setup = curve_flags(args, desc, vm, &help);
  if (help) return 0;
  SeriesDoc doc{"dt",
                {{"chi-y", setup.chi_y},
                 {"genus", static_cast<long long>(setup.genus)},
                 {"bps", setup.bps},
                 {"order", static_cast<long long>(setup.order)}},
                {"dt"},
                {dt_series_conjectural(setup).coefficients()},
                rows_upto(setup.order),
                std::nullopt};
  return emit(doc, vm["format"].as<std::string>());
}

int run_wallcross(const std::vector<std::string>& args) {
  auto desc = with_format("wallcross options");
  po::variables_map vm;
  bool help = false;
  const CurveSetup setup = curve_flags(args, desc, vm, &help);
  if (help) return 0;
  const InvariantReport report = check_wallcross(setup);
  SeriesDoc doc{"wallcross",
                {{"chi-y", setup.chi_y},
                 {"genus", static_cast<long long>(setup.genus)},
                 {"bps", setup.bps},
                 {"order", static_cast<long long>(setup.order)}},
                {"dt", "bps_weighted"},
                {report.coefficients, report.cross_check->coefficients},
                rows_upto(setup.order),
                report.cross_check->verdict};
  return emit(doc, vm["format"].as<std::string>());
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    usage(std::cerr);
    return 2;
  }
  const std::string command = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (command == "--help" || command == "-h" || command == "help") {
      usage(std::cout);
      return 0;
    }
    if (command == "macmahon") return run_macmahon(rest);
    if (command == "boxes") return run_boxes(rest);
    if (command == "local-model") return run_local_model(rest);
    if (command == "quot") return run_quot(rest);
    if (command == "pt") return run_pt(rest);
    if (command == "dt") return run_dt(rest);
    if (command == "wallcross") return run_wallcross(rest);
    std::cerr << "unknown command: " << command << '\n';
    usage(std::cerr);
    return 2;
  } catch (const po::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
