#include "floorgw/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "floorgw/enumerate.hpp"
#include "floorgw/errors.hpp"
#include "floorgw/gw.hpp"
#include "floorgw/oracle.hpp"
#include "floorgw/serialize.hpp"

namespace floorgw::cli {

namespace {

using json::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SurfaceArgs {
  std::string surface;
  std::optional<int> degree;
  std::optional<int> k;
  std::optional<int> h;
  std::optional<int> d;

  void attach(CLI::App& app) {
    // --h names the height, so help is --help only.
    app.set_help_flag("--help", "print this help message and exit");
    app.add_option("--surface", surface, "p2 or fk (Hirzebruch F_k)")->required()->check(CLI::IsMember({"p2", "fk"}));
    app.add_option("--degree", degree, "degree of the plane curve class (p2)");
    app.add_option("--k", k, "Hirzebruch index k (fk)");
    app.add_option("--h", h, "height: number of floors (fk)");
    app.add_option("--d", d, "number of top contacts (fk)");
  }

  HTransverseDegree build() const {
    if (surface == "p2") {
      if (!degree) throw UsageError("--surface p2 requires --degree");
      if (k || h || d) throw UsageError("--k/--h/--d apply to --surface fk only");
      return HTransverseDegree::p2(*degree);
    }
    if (!k || !h || !d) throw UsageError("--surface fk requires --k, --h and --d");
    if (degree) throw UsageError("--degree applies to --surface p2 only");
    return HTransverseDegree::hirzebruch(*k, *h, *d);
  }
};

struct PointArgs {
  std::optional<int> points;
  std::optional<int> genus;

  void attach(CLI::App& app) {
    auto* p = app.add_option("--points", points, "number of point conditions n");
    auto* g = app.add_option("--genus", genus, "minimal genus g_{Delta,n}; n = g - 1 + |Delta|");
    p->excludes(g);
  }

  // `size` is |Delta| for the class at hand.
  int resolve(int size) const {
    if (points.has_value() == genus.has_value()) throw UsageError("exactly one of --points and --genus is required");
    if (points) return *points;
    if (*genus < 0) throw DomainError("genus must be nonnegative");
    return *genus - 1 + size;
  }
};

enum class Format { Text, Json, Csv };

struct Common {
  std::string format = "text";
  int order = 16;

  void attach_format(CLI::App& app) {
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  }
  void attach_order(CLI::App& app) { app.add_option("--order", order, "u-truncation order (exclusive)"); }

  Format fmt() const { return format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Text); }
  int checked_order() const {
    if (order < 1) throw DomainError("--order must be >= 1");
    return order;
  }
};

EnumerationOptions options_from_env() {
  EnumerationOptions options;
  if (const char* raw = std::getenv(kWorkersEnv)) {
    std::string text(raw);
    if (text.empty()) return options;
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || value < 0) throw UsageError(std::string(kWorkersEnv) + " must be a nonnegative integer");
    options.workers = static_cast<unsigned>(value);
  }
  return options;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad partition part: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad partition part: '" + item + "'");
    parts.push_back(value);
  }
  return parts;
}

void print_table(const GwSeries& s, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Json:
      out << json::to_json(s).dump() << "\n";
      return;
    case Format::Csv:
      out << "g,value\n";
      for (const auto& [g, v] : invariant_table(s)) out << g << "," << v << "\n";
      return;
    case Format::Text:
      out << "# " << to_string(s.kind) << " series: " << s.series << "\n";
      out << "g\tN_g\n";
      for (const auto& [g, v] : invariant_table(s)) out << g << "\t" << v << "\n";
      return;
  }
}

int print_verdict(bool equal, std::ostream& out) {
  out << "equal: " << (equal ? "true" : "false") << "\n";
  return equal ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Floor diagram counts and Gromov-Witten generating series for P2 and Hirzebruch surfaces", "floorgw"};
  app.require_subcommand(1);

  Common common;
  SurfaceArgs surface;
  PointArgs points;
  bool refined = false;
  std::string mu_text;
  std::string nu_text;
  int ab_a = -1;
  int ab_b = -1;

  auto* enumerate = app.add_subcommand("enumerate", "list marked floor diagrams");
  auto* count = app.add_subcommand("count", "classical (and refined) floor diagram counts");
  auto* gw = app.add_subcommand("gw", "relative Gromov-Witten invariants by genus");
  auto* log_gw = app.add_subcommand("log-gw", "log Gromov-Witten invariants by genus");
  for (auto* sub : {enumerate, count, gw, log_gw}) {
    surface.attach(*sub);
    points.attach(*sub);
    common.attach_format(*sub);
  }
  count->add_flag("--refined", refined, "also print the q-refined count");
  common.attach_order(*gw);
  common.attach_order(*log_gw);

  auto* vertex = app.add_subcommand("vertex", "vertex contribution series for partitions mu, nu");
  vertex->add_option("--mu", mu_text, "outgoing partition, comma separated (empty allowed)");
  vertex->add_option("--nu", nu_text, "incoming partition, comma separated (empty allowed)");
  common.attach_order(*vertex);
  common.attach_format(*vertex);

  auto* verify = app.add_subcommand("verify", "check an identity; exit 0 iff it holds");
  verify->require_subcommand(1);
  auto* v_deg = verify->add_subcommand("degeneration", "diagram sum vs refined count series");
  auto* v_ab = verify->add_subcommand("ab", "F0 vs F2 comparison, polynomial and series level");
  auto* v_oracle = verify->add_subcommand("oracle", "sweep enumeration vs brute force");
  for (auto* sub : {v_deg, v_oracle}) {
    surface.attach(*sub);
    points.attach(*sub);
  }
  v_ab->add_option("--a", ab_a, "F0 class (a, b)")->required();
  v_ab->add_option("--b", ab_b, "F0 class (a, b)")->required();
  points.attach(*v_ab);
  for (auto* sub : {v_deg, v_ab, v_oracle}) common.attach_format(*sub);
  common.attach_order(*v_deg);
  common.attach_order(*v_ab);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("floorgw");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "floorgw: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const EnumerationOptions options = options_from_env();
    const Format fmt = common.fmt();

    if (*enumerate) {
      const auto delta = surface.build();
      const int n = points.resolve(delta.size());
      const auto diagrams = enumerate_marked(delta, n, options);
      if (fmt == Format::Json) {
        Json list = Json::array();
        for (const auto& d : diagrams) list.push_back(json::to_json(d));
        out << Json{{"delta", json::to_json(delta)}, {"n", n}, {"count", diagrams.size()}, {"diagrams", list}}.dump()
            << "\n";
      } else if (fmt == Format::Csv) {
        out << "index,multiplicity,refined_multiplicity,diagram\n";
        for (std::size_t i = 0; i < diagrams.size(); ++i)
          out << i << "," << multiplicity(diagrams[i]) << ",\"" << refined_multiplicity(diagrams[i]) << "\",\""
              << describe(diagrams[i]) << "\"\n";
      } else {
        for (const auto& d : diagrams) out << describe(d) << "  m=" << multiplicity(d) << "\n";
        out << diagrams.size() << " diagrams\n";
      }
      return kExitOk;
    }

    if (*count) {
      const auto delta = surface.build();
      const int n = points.resolve(delta.size());
      const LaurentPoly poly = refined_count(delta, n, options);
      const Integer classical = eval_at_one(poly);
      if (fmt == Format::Json) {
        Json j{{"classical", json::integer_to_json(classical)}};
        if (refined) j["refined"] = json::to_json(poly);
        out << j.dump() << "\n";
      } else if (fmt == Format::Csv) {
        out << (refined ? "classical,refined\n" : "classical\n") << classical;
        if (refined) out << ",\"" << poly << "\"";
        out << "\n";
      } else {
        out << "classical: " << classical << "\n";
        if (refined) out << "refined: " << poly << "\n";
      }
      return kExitOk;
    }

    if (*gw || *log_gw) {
      const auto delta = surface.build();
      const int n = points.resolve(delta.size());
      const int order = common.checked_order();
      print_table(*gw ? gw_relative_series(delta, n, order, options) : log_series(delta, n, order, options), fmt, out);
      return kExitOk;
    }

    if (*vertex) {
      const Partition mu(parse_parts(mu_text));
      const Partition nu(parse_parts(nu_text));
      print_table(vertex_series(mu, nu, common.checked_order()), fmt, out);
      return kExitOk;
    }

    if (*v_deg) {
      const auto delta = surface.build();
      const int n = points.resolve(delta.size());
      const int order = common.checked_order();
      const auto report = degeneration_check(delta, n, order, options);
      if (fmt == Format::Json) {
        out << Json{{"check", "degeneration"},
                    {"delta", json::to_json(delta)},
                    {"n", n},
                    {"order", order},
                    {"diagram_route", json::to_json(report.diagram_route)},
                    {"polynomial_route", json::to_json(report.polynomial_route)},
                    {"log_route", json::to_json(report.log_route)},
                    {"equal", report.equal}}
                   .dump()
            << "\n";
        return report.equal ? kExitOk : kExitDomain;
      }
      out << "diagram route:    " << report.diagram_route << "\n";
      out << "polynomial route: " << report.polynomial_route << "\n";
      out << "log route:        " << report.log_route << "\n";
      return print_verdict(report.equal, out);
    }

    if (*v_ab) {
      if (ab_a < 0 || ab_b < 0) throw DomainError("--a and --b must be nonnegative");
      const int n = points.resolve(4 * ab_a + 2 * ab_b);
      const int order = common.checked_order();
      const auto report = ab_identity_check(ab_a, ab_b, n, order, options);
      if (fmt == Format::Json) {
        out << Json{{"check", "ab"},
                    {"a", ab_a},
                    {"b", ab_b},
                    {"n", n},
                    {"order", order},
                    {"lhs_polynomial", json::to_json(report.lhs_polynomial)},
                    {"rhs_polynomial", json::to_json(report.rhs_polynomial)},
                    {"lhs_series", json::to_json(report.lhs_series)},
                    {"rhs_series", json::to_json(report.rhs_series)},
                    {"polynomial_equal", report.polynomial_equal},
                    {"series_equal", report.series_equal},
                    {"equal", report.equal()}}
                   .dump()
            << "\n";
        return report.equal() ? kExitOk : kExitDomain;
      }
      out << "lhs polynomial: " << report.lhs_polynomial << "\n";
      out << "rhs polynomial: " << report.rhs_polynomial << "\n";
      out << "lhs series:     " << report.lhs_series << "\n";
      out << "rhs series:     " << report.rhs_series << "\n";
      out << "polynomial level: " << (report.polynomial_equal ? "equal" : "DIFFERENT") << "\n";
      out << "series level:     " << (report.series_equal ? "equal" : "DIFFERENT") << "\n";
      return print_verdict(report.equal(), out);
    }

    if (*v_oracle) {
      const auto delta = surface.build();
      const int n = points.resolve(delta.size());
      auto sweep = enumerate_marked(delta, n, options);
      std::sort(sweep.begin(), sweep.end());
      const auto brute = oracle::brute_force_enumerate(delta, n);
      const LaurentPoly sweep_refined = refined_count(delta, n, options);
      const LaurentPoly brute_refined = oracle::brute_force_refined_count(delta, n);
      const bool equal = sweep == brute && sweep_refined == brute_refined;
      if (fmt == Format::Json) {
        out << Json{{"check", "oracle"},
                    {"delta", json::to_json(delta)},
                    {"n", n},
                    {"sweep_count", sweep.size()},
                    {"oracle_count", brute.size()},
                    {"sweep_refined", json::to_json(sweep_refined)},
                    {"oracle_refined", json::to_json(brute_refined)},
                    {"equal", equal}}
                   .dump()
            << "\n";
        return equal ? kExitOk : kExitDomain;
      }
      out << "sweep:  " << sweep.size() << " diagrams, refined " << sweep_refined << "\n";
      out << "oracle: " << brute.size() << " diagrams, refined " << brute_refined << "\n";
      return print_verdict(equal, out);
    }
  } catch (const UsageError& e) {
    err << "floorgw: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "floorgw: " << e.what() << "\n";
    return kExitDomain;
  }
  err << "floorgw: no command given\n";
  return kExitUsage;
}

}  // namespace floorgw::cli
