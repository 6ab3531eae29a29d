#include <CLI11.hpp>
#include <iostream>

#include "burnside/io.hpp"
#include "burnside/verify.hpp"

using namespace burnside;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerify = 3;

struct Cli {
  std::vector<std::string> group_args;
  std::string ring = "slice";
  std::string format = "text";
  std::string suite = "all";
  std::string fixture;
  bool timing = false;
  uint64_t seed = 1;
  int cap = kDefaultOrderCap;
  int prime = 0;
};

RingTag parse_ring(const std::string& r) {
  if (r == "slice") return RingTag::slice;
  if (r == "section") return RingTag::section;
  if (r == "burnside") return RingTag::burnside;
  throw SpecError("unknown ring: " + r);
}

Group load_group(const Cli& cli) {
  if (cli.group_args.empty()) throw SpecError("no group given");
  if (cli.group_args.front() == "family" || cli.group_args.front() == "perm" ||
      cli.group_args.front() == "table" || cli.group_args.front() == "product")
    return parse_group_args(cli.group_args, cli.cap);
  if (cli.group_args.size() != 1)
    throw SpecError("expected a single group file path or an inline spec");
  return load_group_file(cli.group_args.front(), cli.cap);
}

std::string header(const Cli& cli, const std::string& command,
                   const Group& g) {
  std::ostringstream ss;
  ss << "# burnside " << command << " group=" << g.name()
     << " order=" << g.order() << " seed=" << cli.seed;
  return ss.str();
}

void add_group_options(CLI::App* cmd, Cli& cli) {
  cmd->add_option("group", cli.group_args,
                  "group file path or inline spec (family <name> <args>)")
      ->required();
  cmd->add_option("--seed", cli.seed, "seed for randomized suites");
  cmd->add_option("--cap-order", cli.cap, "maximum group order");
  cmd->add_option("--format", cli.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--ring", cli.ring, "ring to work in")
      ->check(CLI::IsMember({"slice", "section", "burnside"}));
}

int cmd_info(const Cli& cli) {
  RingContext ctx(load_group(cli), ContextOptions{cli.cap, true});
  const SliceTable& st = ctx.slices();
  int sections = 0;
  for (int i = 0; i < st.num_slices(); ++i)
    if (st.is_section_slice(i)) ++sections;
  if (cli.format == "json") {
    Json j{{"group", ctx.group().name()},
           {"order", ctx.group().order()},
           {"abelian", ctx.group().is_abelian()},
           {"solvable", is_solvable(ctx.lattice())},
           {"subgroups", ctx.lattice().size()},
           {"subgroup_classes", ctx.lattice().num_classes()},
           {"slices", st.num_slices()},
           {"slice_classes", st.num_classes()},
           {"sections", sections},
           {"section_classes", st.num_section_classes()},
           {"seed", cli.seed}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << header(cli, "info", ctx.group()) << "\n";
  std::cout << "order            " << ctx.group().order() << "\n";
  std::cout << "abelian          " << (ctx.group().is_abelian() ? "yes" : "no")
            << "\n";
  std::cout << "solvable         " << (is_solvable(ctx.lattice()) ? "yes" : "no")
            << "\n";
  std::cout << "subgroups        " << ctx.lattice().size() << " in "
            << ctx.lattice().num_classes() << " classes\n";
  std::cout << "slices           " << st.num_slices() << " in "
            << st.num_classes() << " classes\n";
  std::cout << "sections         " << sections << " in "
            << st.num_section_classes() << " classes\n";
  return kExitOk;
}

int cmd_marks(const Cli& cli) {
  RingContext ctx(load_group(cli), ContextOptions{cli.cap, true});
  RingTag tag = parse_ring(cli.ring);
  if (cli.format == "json") {
    Json rows = Json::array();
    std::istringstream csv(marks_csv(ctx, tag));
    std::string line;
    while (std::getline(csv, line)) rows.push_back(line);
    std::cout << Json{{"group", ctx.group().name()},
                      {"ring", cli.ring},
                      {"csv", rows},
                      {"seed", cli.seed}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << header(cli, "marks", ctx.group()) << " ring=" << cli.ring
            << "\n";
  std::cout << marks_csv(ctx, tag);
  return kExitOk;
}

int cmd_idempotents(const Cli& cli) {
  RingContext ctx(load_group(cli), ContextOptions{cli.cap, true});
  RingTag tag = parse_ring(cli.ring);
  std::vector<std::pair<std::string, QRingElement>> idems;
  if (tag == RingTag::slice) {
    for (int c = 0; c < ctx.slices().num_classes(); ++c) {
      const Slice& sl = ctx.slices().class_rep(c);
      idems.emplace_back("xi_" + std::to_string(c),
                         idempotent_xi(ctx, sl.t, sl.s));
    }
  } else if (tag == RingTag::section) {
    const auto& secs = ctx.slices().section_classes();
    for (size_t i = 0; i < secs.size(); ++i) {
      const Slice& sl = ctx.slices().class_rep(secs[i]);
      idems.emplace_back("gamma_" + std::to_string(i),
                         idempotent_gamma(ctx, sl.t, sl.s));
    }
  } else {
    for (int c = 0; c < ctx.lattice().num_classes(); ++c)
      idems.emplace_back(
          "e_" + std::to_string(c),
          burnside_idempotent(ctx, ctx.lattice().class_rep(c)));
  }
  if (cli.format == "json") {
    Json list = Json::array();
    for (auto& [name, e] : idems)
      list.push_back(Json{{"name", name}, {"element", element_to_json(ctx, e)}});
    std::cout << Json{{"group", ctx.group().name()},
                      {"ring", cli.ring},
                      {"idempotents", list},
                      {"seed", cli.seed}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << header(cli, "idempotents", ctx.group()) << " ring=" << cli.ring
            << "\n";
  for (auto& [name, e] : idems)
    std::cout << name << " = " << element_to_string(ctx, e) << "\n";
  return kExitOk;
}

int cmd_units(const Cli& cli) {
  RingContext ctx(load_group(cli), ContextOptions{cli.cap, true});
  RingTag tag = parse_ring(cli.ring);
  if (tag == RingTag::burnside)
    throw SpecError("units: slice or section ring expected");
  UnitGroupBasis ub = unit_group(ctx, tag);
  if (cli.format == "json") {
    Json j = unit_basis_to_json(ctx, ub);
    j["group"] = ctx.group().name();
    j["seed"] = cli.seed;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << header(cli, "units", ctx.group()) << " ring=" << cli.ring
            << "\n";
  std::cout << "dimension " << ub.dimension << " (elementary abelian 2-group)"
            << "\n";
  for (int i = 0; i < ub.dimension; ++i)
    std::cout << "u" << i << " = " << element_to_string(ctx, ub.basis[i])
              << "\n";
  return kExitOk;
}

int cmd_spectrum(const Cli& cli) {
  RingContext ctx(load_group(cli), ContextOptions{cli.cap, true});
  RingTag tag = parse_ring(cli.ring);
  if (tag == RingTag::burnside)
    throw SpecError("spectrum: slice or section ring expected");
  auto comps = spectrum_components(ctx, tag, cli.prime);
  if (cli.format == "json") {
    Json j = components_to_json(ctx, tag, cli.prime, comps);
    j["group"] = ctx.group().name();
    j["seed"] = cli.seed;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << header(cli, "spectrum", ctx.group()) << " ring=" << cli.ring
            << " localization="
            << (cli.prime ? "Z_(" + std::to_string(cli.prime) + ")" : "Z")
            << "\n";
  std::cout << comps.size() << " component(s)\n";
  for (size_t i = 0; i < comps.size(); ++i) {
    std::cout << "component " << i << ": " << comps[i].classes.size()
              << " classes";
    if (comps[i].label_subgroup_class >= 0)
      std::cout << ", perfect label order "
                << ctx.lattice().order_of(
                       ctx.lattice().class_rep(comps[i].label_subgroup_class));
    std::cout << "\n  idempotent = "
              << element_to_string(ctx, comps[i].idempotent) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Cli& cli) {
  RingContext ctx(load_group(cli), ContextOptions{cli.cap, true});
  VerifyOptions opt;
  opt.seed = cli.seed;
  opt.cap = cli.cap;
  opt.timing = cli.timing;
  std::vector<CheckResult> results = verify_suite(ctx, cli.suite, opt);
  if (!cli.fixture.empty()) {
    std::vector<CheckResult> extra = verify_fixture_file(ctx, cli.fixture);
    results.insert(results.end(), extra.begin(), extra.end());
  }
  bool all_pass = true;
  if (cli.format == "json") {
    Json list = Json::array();
    for (const CheckResult& r : results) {
      list.push_back(Json{{"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    std::cout << Json{{"group", ctx.group().name()},
                      {"suite", cli.suite},
                      {"seed", cli.seed},
                      {"checks", list},
                      {"pass", all_pass}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << header(cli, "verify", ctx.group()) << " suite=" << cli.suite
              << "\n";
    for (const CheckResult& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_pass ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice and section Burnside ring calculator"};
  app.require_subcommand(1);
  Cli cli;

  CLI::App* info = app.add_subcommand("info", "group and table sizes");
  CLI::App* marks = app.add_subcommand("marks", "table of marks as CSV");
  CLI::App* idem = app.add_subcommand("idempotents",
                                      "exact rational primitive idempotents");
  CLI::App* units = app.add_subcommand("units", "unit group basis");
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "prime spectrum components");
  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  for (CLI::App* cmd : {info, marks, idem, units, spectrum, verify})
    add_group_options(cmd, cli);
  spectrum->add_option("--p", cli.prime,
                       "localize at a single prime (0 = all primes)");
  verify->add_flag("--timing", cli.timing, "annotate slow checks with wall time");
  verify->add_option("--fixture", cli.fixture,
                     "JSON morphism fixtures to check against the oracles");
  verify->add_option("--suite", cli.suite, "which suite to run")
      ->check(CLI::IsMember({"all", "ring", "galois", "biset", "spectrum",
                             "units"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(cli);
    if (marks->parsed()) return cmd_marks(cli);
    if (idem->parsed()) return cmd_idempotents(cli);
    if (units->parsed()) return cmd_units(cli);
    if (spectrum->parsed()) return cmd_spectrum(cli);
    if (verify->parsed()) return cmd_verify(cli);
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
