#include "avgamma/cli.hpp"

#include <cctype>
#include <ostream>

#include <CLI11.hpp>

#include "avgamma/config.hpp"
#include "avgamma/gamma.hpp"
#include "avgamma/groups.hpp"
#include "avgamma/report.hpp"
#include "avgamma/verify.hpp"

namespace avgamma {

namespace {

GroupFamily family_from_name(const std::string& name) {
  if (name == "Sp") return GroupFamily::Sp;
  if (name == "GSp") return GroupFamily::GSp;
  if (name == "SL") return GroupFamily::SL;
  throw ParseError("unknown group family \"" + name + "\" (expected Sp, GSp, or SL)");
}

// Chain syntax: comma-separated steps "P(r,s)@m", e.g. "P(1,1)@1,P(1,0)@2".
std::vector<ChainConstraint> parse_chain(const std::string& text, int g) {
  std::vector<ChainConstraint> out;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad chain \"" + text + "\" at position " + std::to_string(pos) + ": " + why);
  };
  auto literal = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto number = [&]() {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(value);
  };
  if (text.empty()) fail("empty chain");
  while (true) {
    literal('P');
    literal('(');
    int r = number();
    literal(',');
    int s = number();
    literal(')');
    literal('@');
    int level = number();
    try {
      out.push_back({PrsSpec(r, s, g), level});
    } catch (const Error& e) {
      fail(e.what());
    }
    if (pos == text.size()) break;
    literal(',');
  }
  return out;
}

// Writes q = p^f for a prime p, or throws.
std::pair<long long, int> prime_power_split(long long q) {
  if (q < 2) throw ParseError("field size must be at least 2, got " + std::to_string(q));
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;
  int f = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1)
    throw ParseError("field size must be a prime power, got " + std::to_string(q));
  return {p, f};
}

Ring field_ring(long long q) {
  auto [p, f] = prime_power_split(q);
  return f == 1 ? Ring::zmod(p, 1) : Ring::gf(p, f);
}

Json factor_json(const IsotypicFactor& f) {
  Json j = Json::object();
  j["type"] = f.type == AlbertType::I ? "I" : "II";
  j["e"] = f.e;
  j["h"] = f.h;
  j["multiplicity"] = f.multiplicity;
  return j;
}

Json table_json(const GammaReport& report) {
  Json table = Json::array();
  for (const auto& [subset, value] : report.table) {
    Json row = Json::object();
    row["subset"] = subset;
    row["value"] = json_rational(value);
    table.push_back(std::move(row));
  }
  return table;
}

struct Output {
  std::ostream* out;
  bool tsv = false;
  void emit(const Report& report) const {
    *out << (tsv ? render_tsv(report) : render_json(report));
  }
};

int cmd_gamma(const std::string& path, const Output& output) {
  VarietyConfig cfg = parse_config(read_file(path));
  GammaReport gamma = gamma_product(cfg.data);

  Report report;
  report.command = "gamma";
  Json factors = Json::array();
  for (const IsotypicFactor& f : cfg.data.factors) factors.push_back(factor_json(f));
  report.inputs["factors"] = std::move(factors);

  report.results["gamma"] = json_rational(gamma.gamma);
  report.results["achieving_subset"] = gamma.achieving_subset;
  report.results["mt_dimension"] = gamma.mt_dim;
  report.results["masser_bound"] = json_bigint(masser_bound(cfg.data));
  report.results["table"] = table_json(gamma);

  if (cfg.profile) {
    Json places = Json::array();
    for (const auto& row : cfg.profile->by_factor) {
      Json factor_places = Json::array();
      for (const PlacePair& p : row) factor_places.push_back({p.first, p.second});
      places.push_back(std::move(factor_places));
    }
    report.inputs["profile"] = std::move(places);
    auto [value, assign] = psi_bruteforce(cfg.data, *cfg.profile);
    Json argmax = Json::array();
    for (const auto& row : assign.rs) {
      Json factor_rs = Json::array();
      for (const auto& rs : row) factor_rs.push_back({rs.first, rs.second});
      argmax.push_back(std::move(factor_rs));
    }
    Json psi = Json::object();
    psi["value"] = json_rational(value);
    psi["argmax"] = std::move(argmax);
    report.results["psi"] = std::move(psi);
  }

  if (cfg.toric_place) {
    report.inputs["toric_place"] = *cfg.toric_place;
    Json hyp = Json::array();
    for (size_t i = 0; i < cfg.data.factors.size(); ++i)
      hyp.push_back(mt_hypothesis_check(cfg.data.factors[i], (*cfg.toric_place)[i]));
    report.results["hypotheses"] = std::move(hyp);
  }

  output.emit(report);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const Output& output) {
  std::vector<SuiteResult> results = run_verify(suite, seed);

  Report report;
  report.command = "verify";
  report.inputs["suite"] = suite;
  report.inputs["seed"] = seed;
  Json suites = Json::array();
  bool all_ok = true;
  for (const SuiteResult& s : results) {
    Json props = Json::array();
    for (const PropertyResult& p : s.properties) {
      Json row = Json::object();
      row["name"] = p.name;
      row["trials"] = p.trials;
      row["failures"] = p.failures;
      props.push_back(std::move(row));
    }
    Json entry = Json::object();
    entry["suite"] = s.suite;
    entry["passed"] = s.ok();
    entry["properties"] = std::move(props);
    suites.push_back(std::move(entry));
    all_ok = all_ok && s.ok();
  }
  report.results["suites"] = std::move(suites);
  report.results["passed"] = all_ok;
  output.emit(report);
  return all_ok ? 0 : 1;
}

int cmd_sigma(long long max, const Output& output) {
  std::vector<long long> members = sigma_members(max);
  Report report;
  report.command = "sigma";
  report.inputs["max"] = max;
  report.results["members"] = members;
  output.emit(report);
  return 0;
}

int cmd_groups_order(const std::string& family_name, int g, long long q, long long ell, int n,
                     const Output& output) {
  GroupFamily family = family_from_name(family_name);
  Report report;
  report.command = "groups order";
  report.inputs["family"] = family_name;
  report.inputs["g"] = g;
  BigInt order;
  if (q != 0) {
    report.inputs["q"] = q;
    if (family == GroupFamily::Sp)
      order = sp_order(g, q);
    else if (family == GroupFamily::SL)
      order = sl_order(g, q);
    else
      order = group_order(GroupSpec(family, g, field_ring(q)));
  } else {
    report.inputs["ell"] = ell;
    report.inputs["n"] = n;
    if (!is_prime(ell))
      throw ParseError("--ell must be prime, got " + std::to_string(ell));
    order = group_order(GroupSpec(family, g, Ring::zmod(ell, n)));
  }
  report.results["order"] = json_bigint(order);
  output.emit(report);
  return 0;
}

int cmd_groups_codim(int r, int s, int g, const Output& output) {
  Report report;
  report.command = "groups codim";
  report.inputs["r"] = r;
  report.inputs["s"] = s;
  report.inputs["g"] = g;
  report.results["codimension"] = prs_codim(PrsSpec(r, s, g));
  output.emit(report);
  return 0;
}

int cmd_groups_index(const std::string& chain_text, int g, long long ell, const Output& output) {
  if (!is_prime(ell)) throw ParseError("--ell must be prime, got " + std::to_string(ell));
  std::vector<ChainConstraint> constraints = parse_chain(chain_text, g);
  int depth = constraints.back().level;
  CongruenceChain chain(GroupSpec(GroupFamily::Sp, g, Ring::zmod(ell, depth)), constraints);
  IndexResult result = congruence_index(chain);

  Report report;
  report.command = "groups index";
  report.inputs["chain"] = chain_text;
  report.inputs["g"] = g;
  report.inputs["ell"] = ell;
  report.results["index"] = json_bigint(result.index);
  report.results["predicted"] =
      std::to_string(ell) + "^" + std::to_string(result.predicted_exponent);
  BigInt denom = 1;
  for (long long i = 0; i < result.predicted_exponent; ++i) denom *= ell;
  report.results["ratio"] = json_rational(make_rational(result.index, denom));
  output.emit(report);
  return 0;
}

int cmd_groups_lift(const std::string& family_name, int g, long long ell, int n,
                    const std::string& gens_mode, const Output& output) {
  GroupFamily family = family_from_name(family_name);
  if (!is_prime(ell)) throw ParseError("--ell must be prime, got " + std::to_string(ell));
  GroupSpec mod_spec(family, g, Ring::zmod(ell, 1));
  std::vector<Matrix> gens;
  for (const Matrix& m : enumerate_group(mod_spec)) {
    if (gens_mode == "borel") {
      bool upper = true;
      for (int i = 0; i < m.rows() && upper; ++i)
        for (int j = 0; j < i; ++j) upper = upper && m.at(i, j) == 0;
      if (!upper) continue;
    }
    gens.push_back(m);
  }
  LiftResult result = lift_check(GroupSpec(family, g, Ring::zmod(ell, n)), gens);

  Report report;
  report.command = "groups lift";
  report.inputs["family"] = family_name;
  report.inputs["g"] = g;
  report.inputs["ell"] = ell;
  report.inputs["n"] = n;
  report.inputs["gens"] = gens_mode;
  report.results["generates_full"] = result.generates_full;
  report.results["lemma_applies"] = result.lemma_applies;
  report.results["closure_size"] = json_bigint(result.closure_size);
  report.results["full_order"] = json_bigint(result.full_order);
  output.emit(report);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariants of torsion growth for abelian varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output{&out, false};
  bool json_flag = false;
  app.add_flag("--json", json_flag, "emit JSON (default)");
  app.add_flag("--tsv", output.tsv, "emit flat key<TAB>value lines instead of JSON");

  int exit_code = 0;

  auto* gamma_cmd = app.add_subcommand("gamma", "optimal exponent for a variety config");
  auto config_path = std::make_shared<std::string>();
  gamma_cmd->add_option("config", *config_path, "JSON config file")->required();
  gamma_cmd->callback([&, config_path] { exit_code = cmd_gamma(*config_path, output); });

  auto* verify_cmd = app.add_subcommand("verify", "run a property-test suite");
  auto suite = std::make_shared<std::string>();
  auto seed = std::make_shared<std::uint64_t>(12345);
  verify_cmd->add_option("suite", *suite, "suite name, or \"all\"")->required();
  verify_cmd->add_option("--seed", *seed, "random seed");
  verify_cmd->callback([&, suite, seed] { exit_code = cmd_verify(*suite, *seed, output); });

  auto* sigma_cmd = app.add_subcommand("sigma", "exceptional dimensions up to a bound");
  auto sigma_max = std::make_shared<long long>();
  sigma_cmd->add_option("--max", *sigma_max, "upper bound")->required();
  sigma_cmd->callback([&, sigma_max] { exit_code = cmd_sigma(*sigma_max, output); });

  auto* groups_cmd = app.add_subcommand("groups", "finite classical group computations");
  groups_cmd->require_subcommand(1);
  groups_cmd->fallthrough();

  auto family = std::make_shared<std::string>("Sp");
  auto rank = std::make_shared<int>(1);
  auto q = std::make_shared<long long>(0);
  auto ell = std::make_shared<long long>(0);
  auto n = std::make_shared<int>(1);

  auto* order_cmd = groups_cmd->add_subcommand("order", "group order");
  order_cmd->add_option("--family", *family, "Sp, GSp, or SL");
  order_cmd->add_option("--g", *rank, "rank (matrix size for SL)")->required();
  auto* q_opt = order_cmd->add_option("--q", *q, "field size (prime power)");
  auto* ell_opt = order_cmd->add_option("--ell", *ell, "prime modulus");
  order_cmd->add_option("--n", *n, "modulus exponent");
  q_opt->excludes(ell_opt);
  order_cmd->callback([&, family, rank, q, ell, n] {
    if (*q == 0 && *ell == 0)
      throw ParseError("groups order needs either --q or --ell/--n");
    exit_code = cmd_groups_order(*family, *rank, *q, *ell, *n, output);
  });

  auto* codim_cmd = groups_cmd->add_subcommand("codim", "stabilizer codimension");
  auto pr = std::make_shared<int>();
  auto ps = std::make_shared<int>();
  auto pg = std::make_shared<int>();
  codim_cmd->add_option("--r", *pr, "rank of the r-block")->required();
  codim_cmd->add_option("--s", *ps, "rank of the s-block")->required();
  codim_cmd->add_option("--g", *pg, "genus")->required();
  codim_cmd->callback([&, pr, ps, pg] { exit_code = cmd_groups_codim(*pr, *ps, *pg, output); });

  auto* index_cmd = groups_cmd->add_subcommand("index", "congruence-chain index");
  auto chain_text = std::make_shared<std::string>();
  index_cmd->add_option("--chain", *chain_text, "steps \"P(r,s)@m,...\"")->required();
  index_cmd->add_option("--g", *rank, "genus")->required();
  index_cmd->add_option("--ell", *ell, "prime modulus")->required();
  index_cmd->callback(
      [&, chain_text, rank, ell] { exit_code = cmd_groups_index(*chain_text, *rank, *ell, output); });

  auto* lift_cmd = groups_cmd->add_subcommand("lift", "mod-ell generation lifting check");
  auto gens_mode = std::make_shared<std::string>("full");
  lift_cmd->add_option("--family", *family, "Sp or SL");
  lift_cmd->add_option("--g", *rank, "rank (matrix size for SL)")->required();
  lift_cmd->add_option("--ell", *ell, "prime modulus")->required();
  lift_cmd->add_option("--n", *n, "modulus exponent")->required();
  lift_cmd->add_option("--gens", *gens_mode, "full or borel")
      ->check(CLI::IsMember({"full", "borel"}));
  lift_cmd->callback([&, family, rank, ell, n, gens_mode] {
    exit_code = cmd_groups_lift(*family, *rank, *ell, *n, *gens_mode, output);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace avgamma
