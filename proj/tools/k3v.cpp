// Command-line front end: verify, root-search, enumerate, identities.

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "k3v/run.hpp"

namespace {

struct Options {
  std::string family = "circle";
  std::optional<std::int64_t> n, p, q;
  std::vector<std::string> s, r;
  std::int64_t bound = 5;
  std::int64_t norm_bound = 2;
  std::string format = "text";
  int jobs = 0;
  bool timing = false;
  std::string control;
  std::string lattice = "e8";
  std::int64_t norm = 2;
  bool list = false;
};

std::vector<k3v::BigRational> parse_samples(const std::vector<std::string>& texts, const char* flag) {
  std::vector<k3v::BigRational> out;
  for (const auto& t : texts) {
    try {
      out.push_back(k3v::parse_rational(t));
    } catch (const std::invalid_argument& e) {
      throw k3v::UsageError(std::string(flag) + ": " + e.what());
    }
  }
  return out;
}

k3v::RunConfig to_config(const Options& o) {
  static const std::map<std::string, k3v::FamilyName> families = {
      {"circle", k3v::FamilyName::Circle},
      {"torus-std", k3v::FamilyName::TorusStandard},
      {"torus", k3v::FamilyName::TorusNpq}};
  k3v::RunConfig c;
  c.family = families.at(o.family);
  c.n = o.n;
  c.p = o.p;
  c.q = o.q;
  c.s_values = parse_samples(o.s, "--s");
  c.r_values = parse_samples(o.r, "--r");
  c.box_bound = o.bound;
  c.norm_bound = o.norm_bound;
  c.jobs = o.jobs;
  c.timing = o.timing;
  if (o.control == "non-k0") c.control = k3v::ControlKind::NonK0;
  if (o.control == "hyperbolic") c.control = k3v::ControlKind::Hyperbolic;
  return c;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", o.jobs, "OpenMP threads (0: default)");
  cmd->add_flag("--timing", o.timing, "Include wall time in the report");
}

void add_family(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "Family")->check(CLI::IsMember({"circle", "torus-std", "torus"}));
  cmd->add_option("--n", o.n, "Torus parameter n");
  cmd->add_option("--p", o.p, "Torus parameter p");
  cmd->add_option("--q", o.q, "Torus parameter q");
  cmd->add_option("--s", o.s, "Sample value of s (repeatable, p/q)");
  cmd->add_option("--r", o.r, "Sample value of r (repeatable, p/q)");
  cmd->add_option("--bound", o.bound, "Box bound N on |A..F|");
  cmd->add_option("--norm-bound", o.norm_bound, "Bound m on n1, n2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-level checks for K3 period families"};
  app.require_subcommand(1);
  Options o;
  auto* verify = app.add_subcommand("verify", "Run every check for one family");
  add_family(verify, o);
  add_common(verify, o);
  auto* search = app.add_subcommand("root-search", "Search for orthogonal roots at sample points");
  add_family(search, o);
  add_common(search, o);
  search->add_option("--control", o.control, "Control triple")->check(CLI::IsMember({"non-k0", "hyperbolic"}));
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate E8 vectors of one norm");
  enumerate->add_option("--lattice", o.lattice, "Lattice")->check(CLI::IsMember({"e8", "minus-e8"}));
  enumerate->add_option("--norm", o.norm, "|(v,v)|");
  enumerate->add_flag("--list", o.list, "Include the vectors");
  add_common(enumerate, o);
  auto* identities = app.add_subcommand("identities", "Check the rewriting identities");
  add_common(identities, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const k3v::RunConfig config = to_config(o);
    k3v::Report report;
    if (*verify) {
      report = k3v::run_verify(config);
    } else if (*search) {
      report = k3v::run_root_search(config);
    } else if (*enumerate) {
      report = k3v::run_enumerate(o.lattice == "e8" ? k3v::SpaceKind::E8 : k3v::SpaceKind::MinusE8, o.norm,
                                  o.list, config);
    } else {
      report = k3v::run_identities(config);
    }
    std::cout << (o.format == "json" ? k3v::serialize(report) : k3v::to_text(report));
    return k3v::exit_code(report);
  } catch (const k3v::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
