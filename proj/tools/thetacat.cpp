#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>

#include "thetacat/boxcalc.hpp"
#include "thetacat/io.hpp"

using namespace thetacat;

namespace {

struct Options {
  int n = 2;
  int max_dim = 2;
  int max_width = 2;
  int depth = 1;
  bool no_timings = false;
  std::string output;
  std::string table, from, to, cat, map, simplicial;
  std::string generators = "boundary";
  int k = 2;
  int k_max = 2;
  int samples = 50;
  unsigned seed = 20261016;
  int max_m = 2;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Table parse_table(const std::string& text) {
  try {
    Table t = Table::parse(text);
    if (!t.valid()) throw UsageError("invalid table \"" + text + "\"");
    return t;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("cannot parse table \"" + text + "\": " + e.what());
  }
}

NCatPtr named_category(const std::string& name) {
  std::smatch m;
  if (name == "J") return build_interval(1).j;
  if (name == "terminal") return terminal_ncat(0);
  if (std::regex_match(name, m, std::regex("J(\\d+)"))) return build_interval(std::stoi(m[1])).j;
  if (std::regex_match(name, m, std::regex("Dt(\\d+)"))) return simply_connected_groupoid(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex("D(\\d+)"))) {
    int d = std::stoi(m[1]);
    return free_ncat(Table::globe(d), d).cat;
  }
  if (name.rfind("free:", 0) == 0) {
    Table t = parse_table(name.substr(5));
    return free_ncat(t, t.dimension()).cat;
  }
  std::ifstream in(name);
  if (!in) throw UsageError("unknown category \"" + name + "\"");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("cannot read " + name + ": " + e.what());
  }
  try {
    return std::make_shared<const FiniteNCat>(ncat_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SimplicialSetFinite named_simplicial(const std::string& name) {
  std::smatch m;
  if (std::regex_match(name, m, std::regex("simplex(\\d+)"))) return standard_simplex(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex("boundary(\\d+)"))) return simplex_boundary(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex("horn(\\d+),(\\d+)"))) return horn(std::stoi(m[1]), std::stoi(m[2]));
  std::ifstream in(name);
  if (!in) throw UsageError("unknown simplicial set \"" + name + "\"");
  Json j;
  try {
    in >> j;
    return simplicial_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError("cannot read " + name + ": " + e.what());
  }
}

// "C" is N(C) -> 1; "collapse:k", "section0:k", "section1:k" are nerves of
// the interval structure maps.
PresheafMap named_map(const std::string& text, const ThetaSitePtr& site) {
  std::smatch m;
  if (std::regex_match(text, m, std::regex("(collapse|section0|section1):(\\d+)"))) {
    int k = std::stoi(m[2]);
    if (k < 1 || k > site->level()) throw UsageError("interval level out of range in \"" + text + "\"");
    Interval it = build_interval(k);
    NervePtr j = nerve(site, it.j, "J_" + std::to_string(k));
    NervePtr d = nerve(site, it.globe, "D_" + std::to_string(k - 1));
    if (m[1] == "collapse") return nerve_map(j, d, it.collapse);
    return nerve_map(d, j, m[1] == "section0" ? it.section0 : it.section1);
  }
  NCatPtr c = named_category(text);
  if (c->level > site->level()) throw UsageError("category level exceeds --n");
  return to_terminal(nerve(site, c, text), terminal_presheaf(site));
}

ThetaSitePtr site_of(const Options& o) {
  if (o.n < 1 || o.max_dim < 0 || o.max_width < 1) throw UsageError("bounds must be positive");
  return make_theta_site(o.n, std::min(o.max_dim, o.n), o.max_width);
}

struct Result {
  Json report;
  int code = 0;
};

Json rlp_report(const RlpReport& r, const Site& s) {
  Json j = to_json(r);
  j["bounds"] = bounds_json(s);
  return j;
}

Result run_verb(const std::string& verb, const Options& o) {
  Result r;
  Json& j = r.report;
  if (verb == "objects") {
    auto site = site_of(o);
    j["bounds"] = bounds_json(*site);
    j["count"] = site->tables().size();
    Json list = Json::array();
    for (const Table& t : site->tables()) list.push_back(t.str());
    j["objects"] = list;
  } else if (verb == "hom") {
    Table s = parse_table(o.from), t = parse_table(o.to);
    if (std::max(s.dimension(), t.dimension()) > o.n) throw UsageError("table dimension exceeds --n");
    const auto& h = hom(s, t, o.n);
    j["from"] = s.str();
    j["to"] = t.str();
    j["n"] = o.n;
    j["count"] = h.size();
    Json list = Json::array();
    for (const ThetaMorphism& f : h)
      list.push_back({{"objects", f.functor.map[0]}, {"mono", is_mono(f)}, {"key", functor_key(f.functor)}});
    j["morphisms"] = list;
  } else if (verb == "free") {
    Table t = parse_table(o.table);
    if (t.dimension() > o.n) throw UsageError("table dimension exceeds --n");
    const FreeNCat& f = free_ncat(t, o.n);
    j["table"] = to_json(t);
    j["counts"] = f.cat->counts;
    j["category"] = to_json(*f.cat);
  } else if (verb == "nerve") {
    auto site = site_of(o);
    NCatPtr c = named_category(o.cat);
    if (c->level > o.n) throw UsageError("category level exceeds --n");
    j = presheaf_dump(*nerve(site, c, o.cat));
  } else if (verb == "boundary" || verb == "spine") {
    auto site = site_of(o);
    Table t = parse_table(o.table);
    FinitelyGenerated g = verb == "boundary" ? boundary(site, t) : spine(site, t);
    j = presheaf_dump(*g.presheaf);
    Json gens = Json::array();
    for (auto [a, x] : g.generators) gens.push_back({{"table", site->label(a)}, {"element", g.presheaf->encode(a, x)}});
    j["generators"] = gens;
  } else if (verb == "lift") {
    auto site = site_of(o);
    Table t = parse_table(o.table);
    PresheafMap f = named_map(o.map, site);
    FinitelyGenerated g = o.generators == "spine" ? spine(site, t) : boundary(site, t);
    if (o.generators != "spine" && o.generators != "boundary") throw UsageError("--generators is boundary or spine");
    RlpReport rep = has_rlp(f, {{o.generators + "(" + t.str() + ")", g.inclusion}});
    j = rlp_report(rep, *site);
    r.code = rep.holds ? 0 : 1;
  } else if (verb == "trivfib") {
    auto site = site_of(o);
    RlpReport rep = check_trivial_fibration(named_map(o.map, site), site);
    j = rlp_report(rep, *site);
    j["scope"] = rep.holds ? "up to bounds" : "unconditional";
    r.code = rep.holds ? 0 : 1;
  } else if (verb == "anodyne") {
    auto site = site_of(o);
    GeneratorSet gens = anodyne_generators(spine_generators(site), nerve_interval(site), o.depth, site);
    RlpReport rep = has_rlp(named_map(o.map, site), gens);
    j = rlp_report(rep, *site);
    j["depth"] = o.depth;
    j["generators"] = gens.size();
    r.code = rep.holds ? 0 : 1;
  } else if (verb == "verify-counterexample") {
    CounterexampleReport rep = verify_counterexample(o.n, o.k, o.max_width);
    j["verdict"] = rep.ok() ? "verified" : "failed";
    j["bounds"] = {{"n", o.n}, {"max_dim", o.k - 1}, {"max_width", 2}};
    j["table"] = to_json(rep.table);
    j["not_trivial_fibration"] = to_json(rep.rlp);
    j["named_square_no_lift"] = rep.named_square_no_lift;
    j["larger_bounds"] = rep.larger_bounds;
    j["larger_bounds_no_lift"] = rep.larger_bounds_no_lift;
    j["truncation_iso_fibration"] = rep.iso_fibration;
    j["anodyne"] = to_json(rep.anodyne);
    j["anodyne_generators"] = rep.anodyne_generators;
    if (rep.rlp.witness) j["witness"] = j["not_trivial_fibration"]["witness"];
    r.code = rep.ok() ? 0 : 1;
  } else if (verb == "verify-not-2qcat") {
    NotQcatReport rep = check_not_2qcat();
    bool ok = !rep.rlp.holds && rep.rlp.witness && rep.left_is_mono;
    j["verdict"] = ok ? "verified" : "failed";
    j["bounds"] = {{"n", 2}, {"max_dim", 2}, {"max_width", 2}};
    j["left_is_mono"] = rep.left_is_mono;
    j["points"] = {rep.domain_points, rep.codomain_points};
    j["lifting"] = to_json(rep.rlp);
    if (rep.rlp.witness) j["witness"] = j["lifting"]["witness"];
    r.code = ok ? 0 : 1;
  } else if (verb == "verify-segal") {
    auto site = site_of(o);
    NCatPtr c = named_category(o.cat);
    if (c->level > o.n) throw UsageError("category level exceeds --n");
    std::vector<Table> tables;
    if (o.table.empty())
      tables = site->tables();
    else
      tables.push_back(parse_table(o.table));
    bool all = true;
    Json rows = Json::array();
    for (const Table& t : tables) {
      SegalReport s = segal_check(site, c, t);
      all = all && s.holds;
      rows.push_back({{"table", t.str()}, {"holds", s.holds}, {"elements", s.elements}, {"spine_maps", s.spine_maps}});
    }
    j["verdict"] = all ? "segal" : "not-segal";
    j["bounds"] = bounds_json(*site);
    j["tables"] = rows;
    r.code = all ? 0 : 1;
  } else if (verb == "verify-resolution") {
    auto site = site_of(o);
    ResolutionReport rep = resolution_check(site, o.k_max);
    j["verdict"] = rep.ok() ? "verified" : "failed";
    j["bounds"] = bounds_json(*site);
    j["endpoints_mono"] = rep.endpoints_mono;
    Json levels = Json::array();
    for (std::size_t k = 0; k < rep.trivial_fibration.size(); ++k)
      levels.push_back({{"k", k},
                        {"trivial_fibration", to_json(rep.trivial_fibration[k])},
                        {"codiscrete_sizes_match", static_cast<bool>(rep.codiscrete_match[k])}});
    j["levels"] = levels;
    r.code = rep.ok() ? 0 : 1;
  } else if (verb == "verify-orthogonality") {
    OrthogonalityPools pools = orthogonality_pools(o.n, std::min(o.n, 1), o.max_width, o.max_m);
    auto runs = sample_orthogonality(pools, o.samples, o.seed);
    bool all = true;
    Json rows = Json::array();
    for (const auto& s : runs) {
      all = all && s.report.agree();
      rows.push_back({{"u", s.u},
                      {"v", s.v},
                      {"f", s.f},
                      {"box", s.report.box.holds},
                      {"over", s.report.over.holds},
                      {"under", s.report.under.holds}});
    }
    j["verdict"] = all ? "agree" : "disagree";
    j["bounds"] = {{"theta", bounds_json(*pools.site->left())}, {"delta_max", o.max_m}};
    j["seed"] = o.seed;
    j["triples"] = rows;
    r.code = all ? 0 : 1;
  } else if (verb == "export") {
    if (!o.cat.empty()) {
      j = to_json(*named_category(o.cat));
    } else if (!o.simplicial.empty()) {
      j = to_json(named_simplicial(o.simplicial));
    } else if (!o.table.empty()) {
      j = presheaf_dump(*representable(site_of(o), parse_table(o.table)));
    } else {
      throw UsageError("export needs --cat, --simplicial or --table");
    }
  } else {
    throw UsageError("unknown verb " + verb);
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite computations with strict n-categories and presheaves on Theta_n"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--n", o.n, "Categorical level")->capture_default_str();
  app.add_option("--max-dim", o.max_dim, "Largest table dimension")->capture_default_str();
  app.add_option("--max-width", o.max_width, "Largest table width")->capture_default_str();
  app.add_flag("--no-timings", o.no_timings, "Omit wall-clock timings");
  app.add_option("-o,--output", o.output, "Write the report to a file");

  auto verb = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };
  verb("objects", "Tables within the bounds");
  auto hom_cmd = verb("hom", "Morphisms between two tables");
  hom_cmd->add_option("--from", o.from)->required();
  hom_cmd->add_option("--to", o.to)->required();
  verb("free", "Free n-category on a table")->add_option("--table", o.table)->required();
  verb("nerve", "Nerve of a category")->add_option("--cat", o.cat)->required();
  verb("boundary", "Boundary of a representable")->add_option("--table", o.table)->required();
  verb("spine", "Spine of a representable")->add_option("--table", o.table)->required();
  auto lift_cmd = verb("lift", "Lifting against one boundary or spine inclusion");
  lift_cmd->add_option("--table", o.table)->required();
  lift_cmd->add_option("--map", o.map)->required();
  lift_cmd->add_option("--generators", o.generators)->capture_default_str();
  verb("trivfib", "Trivial fibration check")->add_option("--map", o.map)->required();
  auto anodyne_cmd = verb("anodyne", "Lifting against anodyne maps built from spines");
  anodyne_cmd->add_option("--map", o.map)->required();
  anodyne_cmd->add_option("--depth", o.depth)->capture_default_str();
  auto counter_cmd = verb("verify-counterexample", "Nerve of j_k is not a trivial fibration");
  counter_cmd->add_option("--k", o.k)->capture_default_str();
  verb("verify-not-2qcat", "N(J_2) fails lifting against an interval pushout-product");
  auto segal_cmd = verb("verify-segal", "Segal condition of a nerve");
  segal_cmd->add_option("--cat", o.cat)->required();
  segal_cmd->add_option("--table", o.table);
  verb("verify-resolution", "Nerves of chaotic categories")->add_option("--k-max", o.k_max)->capture_default_str();
  auto orth_cmd = verb("verify-orthogonality", "Three-way orthogonality agreement");
  orth_cmd->add_option("--samples", o.samples)->capture_default_str();
  orth_cmd->add_option("--seed", o.seed)->capture_default_str();
  orth_cmd->add_option("--max-m", o.max_m)->capture_default_str();
  auto export_cmd = verb("export", "Dump a category, simplicial set or representable");
  export_cmd->add_option("--cat", o.cat);
  export_cmd->add_option("--simplicial", o.simplicial);
  export_cmd->add_option("--table", o.table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  Result r;
  auto start = std::chrono::steady_clock::now();
  try {
    r = run_verb(name, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExhausted& e) {
    std::cerr << "bound exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!o.no_timings) {
    std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    r.report["timings"] = {{"seconds", took.count()}};
  }
  std::string text = r.report.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) {
      std::cerr << "error: cannot write " << o.output << "\n";
      return 2;
    }
    out << text;
  }
  return r.code;
}
