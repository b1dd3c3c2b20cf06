#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "pcat/catalog.hpp"
#include "pcat/category_io.hpp"
#include "pcat/error.hpp"
#include "pcat/euler.hpp"
#include "pcat/nerve.hpp"
#include "pcat/report.hpp"
#include "pcat/spectral.hpp"
#include "pcat/subgroup_categories.hpp"
#include "pcat/suite.hpp"

using namespace pcat;
using nlohmann::json;

namespace {

struct CategoryArgs {
  std::string group = "s3";
  int prime = 0;
  std::string flavor = "s";
  std::string filter = "star";
  std::string category_file;

  void attach(CLI::App* app) {
    app->add_option("--group,-g", group, "catalog name or group file");
    app->add_option("--prime,-p", prime, "prime (default: least prime dividing |G|)");
    app->add_option("--flavor,-f", flavor, "s|t|l|f|o|ftilde");
    app->add_option("--filter", filter, "all|star|star-eab|sfc|sfc-rad|rad|star-rad|interval:A..B");
    app->add_option("--category", category_file, "read an exported category instead of building one");
  }

  std::string label() const {
    if (!category_file.empty()) return category_file;
    return flavor + "[" + filter + "] of " + group + " at p=" + std::to_string(prime);
  }

  std::shared_ptr<const FiniteCategory> load() {
    if (!category_file.empty()) {
      std::ifstream in(category_file);
      if (!in) throw Error(ErrorCode::ConfigError, "cannot open '" + category_file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      return std::make_shared<const FiniteCategory>(read_category(ss.str()));
    }
    const PermGroup g = resolve_group(group).enumerate();
    if (prime == 0) {
      const auto primes = prime_divisors(g.order());
      if (primes.empty()) throw Error(ErrorCode::ConfigError, "the trivial group has no prime divisor");
      prime = primes.front();
    }
    if (!is_prime(prime)) throw Error(ErrorCode::ConfigError, std::to_string(prime) + " is not a prime");
    return build(make_context(g, prime), parse_flavor(flavor), parse_filter(filter)).category;
  }
};

std::vector<int> parse_fields(const std::string& text, int prime) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "q" || item == "Q") out.push_back(0);
    else if (item == "fp") out.push_back(prime);
    else if (item.size() > 1 && (item[0] == 'f' || item[0] == 'F')) {
      const int q = std::stoi(item.substr(1));
      if (!is_prime(q)) throw Error(ErrorCode::ConfigError, "'" + item + "' is not a prime field");
      out.push_back(q);
    } else {
      throw Error(ErrorCode::ConfigError, "unknown field '" + item + "'");
    }
  }
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write '" + path + "'");
  out << text;
}

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i)
      os << r[i] << (i + 1 < r.size() ? std::string(width[i] - r[i].size() + 2, ' ') : "");
    os << '\n';
  }
  return os.str();
}

int run_euler(CategoryArgs& args, const std::string& method, const std::string& format, const std::string& output) {
  const auto c = args.load();
  const Weighting w = method == "slices" ? weighting_via_slices(*c) : weighting(*c);
  const Weighting cw = method == "slices" ? coweighting_via_slices(*c) : coweighting(*c);
  const EulerReport e = euler_characteristic(*c);
  json j = euler_report_json(*c, w, cw, e);
  j["category"] = args.label();
  if (method == "both") {
    const bool agree = weighting_via_slices(*c).values == w.values && coweighting_via_slices(*c).values == cw.values;
    j["slices_agree"] = agree;
  }
  if (format == "json") {
    write_out(output, j.dump(1));
  } else if (format == "text") {
    const IntMatrix z = class_matrix(*c, w.classes);
    std::vector<std::vector<std::string>> rows{{"class", "zeta row", "weighting", "coweighting"}};
    for (std::size_t k = 0; k < w.classes.num_classes(); ++k) {
      std::string zr;
      for (Eigen::Index b = 0; b < z.cols(); ++b) zr += (b ? " " : "") + std::to_string(z(static_cast<Eigen::Index>(k), b));
      rows.push_back({c->object(w.classes.representative(k)).label, zr, w.values[k].str(), cw.values[k].str()});
    }
    write_out(output, args.label() + "\n" + text_table(rows) + "chi = " + e.chi.str() + "\n");
  } else {
    throw Error(ErrorCode::UnknownFormat, "unknown format '" + format + "'");
  }
  return 0;
}

int run_homology(CategoryArgs& args, int dmax, const std::string& fields, const std::string& format,
                 const std::string& output, bool no_skeleton) {
  const auto c = args.load();
  json out = {{"category", args.label()}, {"objects", c->num_objects()}, {"morphisms", c->num_morphisms()},
              {"tables", json::array()}};
  std::vector<std::vector<std::string>> rows{{"field", "degree", "betti"}};
  std::string csv = "category,field,degree,betti\n";
  for (int q : parse_fields(fields, args.prime)) {
    NerveOptions opt;
    opt.dmax = dmax;
    opt.prime = q;
    opt.use_skeleton = !no_skeleton;
    const auto b = betti(*c, opt);
    out["tables"].push_back(betti_json(b));
    for (int d = 0; d <= dmax; ++d) {
      const auto v = std::to_string(b.betti[static_cast<std::size_t>(d)]);
      rows.push_back({field_name(q), std::to_string(d), v});
      csv += "\"" + args.label() + "\"," + field_name(q) + "," + std::to_string(d) + "," + v + "\n";
    }
  }
  if (format == "json") write_out(output, out.dump(1));
  else if (format == "text") write_out(output, args.label() + "\n" + text_table(rows));
  else if (format == "csv") write_out(output, csv);
  else throw Error(ErrorCode::UnknownFormat, "unknown format '" + format + "'");
  return 0;
}

int run_spectral(int rank, int prime, int tmax, int nmax, bool scan, const std::string& format,
                 const std::string& output) {
  if (!is_prime(prime)) throw Error(ErrorCode::ConfigError, std::to_string(prime) + " is not a prime");
  const auto budget = default_chain_budget();
  const auto pages = e1_e2_pages(rank, prime, tmax, budget);
  json j = pages_json(pages);
  if (rank == 2) {
    json rows = json::array();
    for (const auto& r : abutment_check(pages, std::min(nmax, tmax)))
      rows.push_back({{"n", r.n}, {"e2_total", r.e2_total}, {"betti", r.betti}, {"equal", r.equal}});
    j["abutment"] = rows;
  }
  std::vector<ConjectureRow> conj;
  if (scan) conj = conjecture_rows(pages);
  if (format == "json") {
    if (scan) {
      j["conjecture"] = json::array();
      for (const auto& r : conj)
        j["conjecture"].push_back({{"s", r.s}, {"t", r.t}, {"e2", r.e2}, {"vanishes", r.vanishes}, {"status", "reported"}});
    }
    write_out(output, j.dump(1));
  } else if (format == "csv") {
    write_out(output, scan ? conjecture_csv(conj) : pages_csv(pages));
  } else {
    throw Error(ErrorCode::UnknownFormat, "unknown format '" + format + "'");
  }
  return 0;
}

int run_catalog(const std::string& format) {
  if (format == "json") {
    json out = json::array();
    for (const auto& e : catalog()) {
      const PermGroup g = e.spec.enumerate();
      json gens = json::array();
      for (const auto& p : e.spec.generators) gens.push_back(p.to_cycle_string());
      out.push_back({{"name", e.name}, {"description", e.description}, {"degree", e.spec.degree},
                     {"order", g.order()}, {"generators", gens}});
    }
    std::cout << out.dump(1) << '\n';
    return 0;
  }
  if (format != "text") throw Error(ErrorCode::UnknownFormat, "unknown format '" + format + "'");
  std::vector<std::vector<std::string>> rows{{"name", "order", "degree", "generators", "description"}};
  for (const auto& e : catalog()) {
    std::string gens;
    for (const auto& p : e.spec.generators) gens += (gens.empty() ? "" : " ") + p.to_cycle_string();
    rows.push_back({e.name, std::to_string(e.spec.enumerate().order()), std::to_string(e.spec.degree), gens,
                    e.description});
  }
  std::cout << text_table(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcat-lab: p-subgroup categories, Euler characteristics and nerve homology"};
  app.require_subcommand(1);

  auto* suite = app.add_subcommand("suite", "run verification suites from a JSON configuration");
  std::string config_path, suite_format = "text", suite_output;
  bool no_timings = false;
  suite->add_option("--config,-c", config_path, "configuration file")->required();
  suite->add_option("--format", suite_format, "json|text|csv");
  suite->add_option("--output,-o", suite_output, "report file (default stdout)");
  suite->add_flag("--no-timings", no_timings, "omit wall times so reports compare byte for byte");

  auto* euler = app.add_subcommand("euler", "weighting, coweighting and Euler characteristic");
  CategoryArgs euler_args;
  std::string method = "solve", euler_format = "text", euler_output;
  euler_args.attach(euler);
  euler->add_option("--method", method, "solve|slices|both")->check(CLI::IsMember({"solve", "slices", "both"}));
  euler->add_option("--format", euler_format, "json|text");
  euler->add_option("--output,-o", euler_output);

  auto* homology = app.add_subcommand("homology", "Betti numbers of the nerve");
  CategoryArgs hom_args;
  int dmax = 3;
  std::string fields = "q,fp", hom_format = "text", hom_output;
  bool no_skeleton = false;
  hom_args.attach(homology);
  homology->add_option("--dmax", dmax, "top degree")->check(CLI::Range(0, 8));
  homology->add_option("--fields", fields, "comma separated: q, fp, f2, f3, ...");
  homology->add_option("--format", hom_format, "json|text|csv");
  homology->add_option("--output,-o", hom_output);
  homology->add_flag("--no-skeleton", no_skeleton, "work on the full category");

  auto* spectral = app.add_subcommand("spectral", "E1 and E2 pages for an elementary abelian group");
  int rank = 2, sprime = 2, tmax = 4, nmax = 4;
  bool scan = false;
  std::string spec_format = "json", spec_output;
  spectral->add_option("--rank", rank)->check(CLI::Range(1, 3));
  spectral->add_option("--prime", sprime);
  spectral->add_option("--tmax", tmax)->check(CLI::Range(0, 8));
  spectral->add_option("--nmax", nmax, "abutment comparison up to this degree (rank 2)");
  spectral->add_flag("--scan", scan, "emit the conjecture scan table");
  spectral->add_option("--format", spec_format, "json|csv");
  spectral->add_option("--output,-o", spec_output);

  auto* cat = app.add_subcommand("catalog", "list built-in groups");
  std::string cat_format = "text";
  cat->add_option("--format", cat_format, "json|text");

  auto* exp = app.add_subcommand("export", "write a built category as JSON");
  CategoryArgs exp_args;
  std::string exp_output;
  exp_args.attach(exp);
  exp->add_option("--output,-o", exp_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*suite) {
      const auto cfg = SuiteConfig::from_file(config_path);
      const auto fmt = parse_format(suite_format);
      const auto report = run_suite(cfg);
      write_out(suite_output, emit(report, fmt, !no_timings));
      return report.exit_code();
    }
    if (*euler) return run_euler(euler_args, method, euler_format, euler_output);
    if (*homology) return run_homology(hom_args, dmax, fields, hom_format, hom_output, no_skeleton);
    if (*spectral) return run_spectral(rank, sprime, tmax, nmax, scan, spec_format, spec_output);
    if (*cat) return run_catalog(cat_format);
    if (*exp) {
      write_out(exp_output, write_category(*exp_args.load()));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "pcat-lab: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ConfigError:
      case ErrorCode::ParseError:
      case ErrorCode::UnknownFormat:
      case ErrorCode::FilterUnsupported:
      case ErrorCode::InvalidPermutation: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "pcat-lab: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
