// aztec: count, enumerate, sample, verify, histogram and render domino tilings
// of Aztec diamonds and rectangles.
//
// Exit codes: 0 success, 1 failed check or bad input file, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "aztec/battery.hpp"
#include "aztec/bijection.hpp"
#include "aztec/histogram.hpp"
#include "aztec/json_io.hpp"
#include "aztec/render.hpp"
#include "aztec/sampler.hpp"
#include "aztec/tiling.hpp"

namespace {

using namespace aztec;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::pair<int, int> parse_rect(const std::string& spec) {
  static const std::regex re(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw UsageError("--rect expects WxH, got '" + spec + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

struct CountArgs {
  int aztec = -1;
  std::string rect;
  std::string method = "dp";
  bool force = false;
};

int run_count(const CountArgs& a) {
  if ((a.aztec >= 0) == !a.rect.empty()) throw UsageError("count needs exactly one of --aztec or --rect");
  if (a.aztec >= 0) {
    const int n = a.aztec;
    if (a.method == "formula") {
      std::cout << aztec_closed_form(n) << "\n";
    } else if (a.method == "dp") {
      if (n > kDpGuard && !a.force) throw UsageError("dp limited to N <= 16 (use --force)");
      std::cout << count_tilings(Region::aztec(n), a.force ? 0 : kDpStateBudget) << "\n";
    } else if (a.method == "enumerate") {
      if (n > kEnumerateGuard && !a.force) throw UsageError("enumeration limited to N <= 5 (use --force)");
      std::uint64_t k = 0;
      for_each_tiling(Region::aztec(n), [&](const Tiling&) { ++k; });
      std::cout << k << "\n";
    } else {
      throw UsageError("--aztec methods: dp, formula, enumerate");
    }
    return 0;
  }
  const auto [w, h] = parse_rect(a.rect);
  const Region r = Region::rectangle(w, h);
  if (a.method == "dp") {
    std::cout << count_tilings(r, a.force ? 0 : kDpStateBudget) << "\n";
  } else if (a.method == "enumerate") {
    if (w * h > 48 && !a.force) throw UsageError("enumeration limited to 48 cells (use --force)");
    std::uint64_t k = 0;
    for_each_tiling(r, [&](const Tiling&) { ++k; });
    std::cout << k << "\n";
  } else if (a.method == "kasteleyn") {
    if (w != h || w % 2 != 0) throw UsageError("kasteleyn needs an even square, e.g. --rect 8x8");
    const double product = kasteleyn_square(w);
    const BigCount dp = count_tilings(r, a.force ? 0 : kDpStateBudget);
    const double rel = std::abs(product - dp.convert_to<double>()) / dp.convert_to<double>();
    char buf[160];
    std::snprintf(buf, sizeof buf, "kasteleyn %.6f\n", product);
    std::cout << buf << "dp " << dp << "\n";
    std::snprintf(buf, sizeof buf, "relative_error %.3e\n", rel);
    std::cout << buf;
  } else {
    throw UsageError("--rect methods: dp, enumerate, kasteleyn");
  }
  return 0;
}

int run_enumerate(int n, const std::string& out) {
  if (n < 0) throw UsageError("--aztec must be >= 0");
  if (n > kEnumerateGuard) throw UsageError("enumerate limited to N <= 5");
  Json all = Json::array();
  for_each_tiling(Region::aztec(n), [&](const Tiling& t) { all.push_back(tiling_to_json(t)); });
  write_file(out, all.dump() + "\n");
  std::cout << "wrote " << all.size() << " tilings to " << out << "\n";
  return 0;
}

struct SampleArgs {
  int aztec = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::uint64_t count = 1;
  bool stats = false;
};

int run_sample(const SampleArgs& a) {
  if (a.aztec < 0) throw UsageError("sample needs --aztec N");
  if (a.stats || a.count > 1) {
    if (!a.stats) throw UsageError("--count needs --stats");
    if (!a.out.empty() && !ends_with(a.out, ".json")) throw UsageError("statistics are written as .json");
    const SampleSummary s = sample_statistics(a.aztec, a.count, a.seed);
    std::cout << "order " << s.order << " count " << s.count << " seed " << a.seed << "\n";
    for (const auto& [k, c] : s.hist) std::cout << "k " << k << " " << c << "\n";
    if (!a.out.empty()) write_file(a.out, summary_to_json(s).dump() + "\n");
    return 0;
  }
  SampleTrace trace;
  const Tiling t = sample_uniform({a.aztec, a.seed}, &trace);
  if (!a.out.empty()) {
    if (ends_with(a.out, ".svg")) {
      RenderOptions opts;
      opts.color_classes = true;
      write_file(a.out, render_tiling(t, opts));
    } else if (ends_with(a.out, ".json")) {
      write_file(a.out, tiling_to_json(t).dump() + "\n");
    } else {
      throw UsageError("--out must end in .svg or .json");
    }
  }
  std::cout << "order " << a.aztec << " seed " << a.seed << " horizontal " << t.horizontal_count() << " bits "
            << trace.bits_consumed << "\n";
  return 0;
}

int run_verify(int max_order, const std::string& json_out) {
  if (max_order < 0) throw UsageError("--max-order must be >= 0");
  const auto checks = run_battery(max_order);
  bool ok = true;
  for (const CheckResult& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    ok = ok && c.pass;
  }
  if (!json_out.empty()) {
    RecursionReport all{max_order, checks};
    write_file(json_out, report_to_json(all).dump(2) + "\n");
  }
  if (!ok) {
    for (const CheckResult& c : checks)
      if (!c.pass) std::cerr << "failed: " << c.name << "\n";
    return 1;
  }
  std::cout << "all " << checks.size() << " checks passed\n";
  return 0;
}

int run_hist(int n, bool exact, std::uint64_t samples, std::uint64_t seed) {
  if (n < 0) throw UsageError("hist needs --aztec N");
  if (exact && samples > 0) throw UsageError("--exact and --samples are exclusive");
  const auto hist = samples > 0 ? horizontal_histogram(n, Sample{samples, seed}) : horizontal_histogram(n, Enumerate{});
  const unsigned m = static_cast<unsigned>(n * (n + 1) / 2);
  std::cout << "k count binomial\n";
  for (unsigned k = 0; k <= m; ++k) {
    auto it = hist.find(static_cast<int>(k));
    std::cout << k << " " << (it == hist.end() ? BigCount(0) : it->second) << " " << binomial(m, k) << "\n";
  }
  return 0;
}

struct RenderArgs {
  std::string in;
  std::string out;
  std::string field;
  bool arrows = false;
  bool nodes = false;
  bool bold = false;
  bool colors = false;
  int cell_px = 24;
};

int run_render(const RenderArgs& a) {
  if (a.out.empty()) throw UsageError("render needs --out FILE.svg");
  RenderOptions opts;
  opts.cell_px = a.cell_px;
  opts.show_arrows = a.arrows;
  opts.show_nodes = a.nodes;
  opts.show_bold_edges = a.bold;
  opts.color_classes = a.colors;
  if (!a.field.empty()) {
    if (!a.in.empty() || a.arrows) throw UsageError("--field cannot be combined with --in or --arrows");
    write_file(a.out, render_field(field_from_json(read_json(a.field)), opts));
  } else {
    if (a.in.empty()) throw UsageError("render needs --in tiling.json or --field field.json");
    write_file(a.out, render_tiling(tiling_from_json(read_json(a.in)), opts));
  }
  std::cout << "wrote " << a.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aztec diamond domino tilings: counting, sampling, verification"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "print the exact number of tilings");
  c->add_option("--aztec", count.aztec, "Aztec diamond order")->check(CLI::NonNegativeNumber);
  c->add_option("--rect", count.rect, "rectangle WxH");
  c->add_option("--method", count.method, "dp | formula | enumerate | kasteleyn");
  c->add_flag("--force", count.force, "lift the size guards");

  int enum_order = -1;
  std::string enum_out;
  auto* e = app.add_subcommand("enumerate", "write every tiling as a JSON array");
  e->add_option("--aztec", enum_order, "Aztec diamond order (<= 5)")->required();
  e->add_option("--out", enum_out, "output JSON file")->required();

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "draw uniform random tilings");
  s->add_option("--aztec", sample.aztec, "Aztec diamond order")->required()->check(CLI::NonNegativeNumber);
  s->add_option("--seed", sample.seed, "64-bit seed");
  s->add_option("--out", sample.out, "FILE.svg or FILE.json");
  s->add_option("--count", sample.count, "number of samples (with --stats)")->check(CLI::PositiveNumber);
  s->add_flag("--stats", sample.stats, "print the horizontal histogram of --count samples");

  int max_order = 3;
  std::string verify_json;
  auto* v = app.add_subcommand("verify", "run the invariant battery");
  v->add_option("--max-order", max_order, "largest order for each check");
  v->add_option("--json", verify_json, "also write the results as JSON");

  int hist_order = -1;
  bool hist_exact = false;
  std::uint64_t hist_samples = 0;
  std::uint64_t hist_seed = kDefaultSeed;
  auto* h = app.add_subcommand("hist", "histogram of horizontal dominoes");
  h->add_option("--aztec", hist_order, "Aztec diamond order")->required();
  h->add_flag("--exact", hist_exact, "enumerate all tilings (default)");
  h->add_option("--samples", hist_samples, "use this many random samples instead");
  h->add_option("--seed", hist_seed, "seed for --samples");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "draw a tiling or arrow field as SVG");
  r->add_option("--in", render.in, "tiling JSON");
  r->add_option("--out", render.out, "output SVG")->required();
  r->add_flag("--arrows", render.arrows, "overlay the tiling's arrow field");
  r->add_option("--field", render.field, "draw this arrow field JSON instead");
  r->add_flag("--nodes", render.nodes, "mark nodes");
  r->add_flag("--bold", render.bold, "overlay bold edges");
  r->add_flag("--colors", render.colors, "four-colour dominoes");
  r->add_option("--cell-px", render.cell_px, "pixels per lattice unit")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }

  try {
    if (*c) return run_count(count);
    if (*e) return run_enumerate(enum_order, enum_out);
    if (*s) return run_sample(sample);
    if (*v) return run_verify(max_order, verify_json);
    if (*h) return run_hist(hist_order, hist_exact, hist_samples, hist_seed);
    if (*r) return run_render(render);
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const GuardExceeded& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
