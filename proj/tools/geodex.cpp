#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "geodex/geodex.hpp"

namespace {

using namespace geodex;

constexpr int kExitError = 3;

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(Errc::BadParameter, "expected k=v, got '" + item + "'");
    const auto value = item.substr(eq + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw Error(Errc::BadParameter, "parameter value is not an integer: '" + item + "'");
    p[item.substr(0, eq)] = v;
  }
  return p;
}

// A path to an edge list, or failing that the name of a registered construction.
Graph load_graph(const std::string& source) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) throw Error(Errc::ParseError, "cannot open " + source);
    return read_edge_list(in);
  }
  const auto& reg = registry();
  if (std::any_of(reg.begin(), reg.end(), [&](const auto& c) { return c.name == source; })) return construct(source);
  throw Error(Errc::ParseError, "no such file or construction: " + source);
}

void write_json(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(Errc::ParseError, "cannot write " + out);
  f << j.dump(2) << "\n";
}

void print_summary(const CensusResult& r) {
  for (const auto& item : r.items)
    for (const auto& c : item.claims) {
      std::cerr << to_string(c.verdict) << "  " << item.name << "  " << c.id;
      if (c.verdict == Verdict::Skipped) std::cerr << "  (" << c.reason << ")";
      std::cerr << "\n";
    }
  std::cerr << r.count(Verdict::Pass) << " pass, " << r.count(Verdict::Fail) << " fail, " << r.count(Verdict::Skipped)
            << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodex: distance-transitive graph and cover census"};
  app.require_subcommand(1);

  std::string name, out, file, group_src = "auto", mode = "geodesic";
  std::vector<std::string> params, rgd_files;
  bool as_json = false, deterministic = false, list = false;
  unsigned jobs = 0, s = 1;

  auto* cons = app.add_subcommand("construct", "write a named graph as an edge list (and <out>.labels)");
  cons->add_option("name", name, "construction name");
  cons->add_option("--param", params, "parameter k=v (repeatable)");
  cons->add_option("--out", out, "output edge-list file");
  cons->add_flag("--list", list, "list constructions and their parameters");

  auto* ana = app.add_subcommand("analyze", "basic invariants of an edge-list file (or a construction name)");
  ana->add_option("file", file)->required();
  ana->add_flag("--json", as_json, "print JSON (default is a short text summary)");

  auto* thm = app.add_subcommand("verify-theorem2", "check the 2-arc-transitive strongly regular graphs");
  auto* tab = app.add_subcommand("verify-table1", "check the quotient/cover table");
  for (auto* sub : {thm, tab}) {
    sub->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
    sub->add_flag("--deterministic", deterministic, "omit timestamps and wall times");
    sub->add_option("--out", out, "report file (default stdout)");
  }
  tab->add_option("--rgd", rgd_files, "extra RGD design (JSON) to check, repeatable")->check(CLI::ExistingFile);

  auto* tr = app.add_subcommand("transitivity", "arc/geodesic/distance transitivity levels");
  tr->add_option("file", file)->required();
  tr->add_option("--group", group_src, "generators JSON file, or 'auto' for Aut(Γ)");
  tr->add_option("--mode", mode, "arc | geodesic | distance");
  tr->add_option("--s", s, "highest level to check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitError : 0;
  }

  try {
    const Budget budget = budget_from_env();
    if (*cons) {
      if (list) {
        for (const auto& c : registry()) {
          std::cout << c.name;
          for (const auto& p : c.params) std::cout << " " << p.name << "=" << p.default_value;
          std::cout << "  " << c.description << "\n";
        }
        return 0;
      }
      if (name.empty() || out.empty()) throw Error(Errc::BadParameter, "construct needs a name and --out");
      const Graph g = construct(name, parse_params(params));
      std::ofstream f(out), lf(out + ".labels");
      if (!f || !lf) throw Error(Errc::ParseError, "cannot write " + out);
      write_edge_list(f, g);
      write_labels(lf, g);
      std::cerr << name << ": " << g.order() << " vertices, " << g.edge_count() << " edges -> " << out << "\n";
      return 0;
    }
    if (*ana) {
      const json j = analyze_graph(load_graph(file));
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "n=" << j["n"] << " edges=" << j["edges"] << " girth=" << j["girth"] << " diameter=" << j["diameter"]
                  << " bipartite=" << j["bipartite"] << " srg=" << j["srg"].dump()
                  << " array=" << (j["intersection_array_text"].is_null() ? "null" : j["intersection_array_text"].get<std::string>())
                  << "\n";
      }
      return 0;
    }
    if (*thm || *tab) {
      CensusOptions opt{budget, jobs, deterministic};
      CensusResult r;
      if (*thm) {
        r = verify_theorem2(opt);
      } else {
        std::vector<std::pair<std::string, RgdDesign>> supplied;
        for (const auto& path : rgd_files) {
          std::ifstream in(path);
          json j;
          try {
            in >> j;
          } catch (const json::exception& e) {
            throw Error(Errc::ParseError, path + ": " + e.what());
          }
          supplied.emplace_back(std::filesystem::path(path).stem().string(), rgd_from_json(j));
        }
        r = verify_table1(opt, supplied);
      }
      write_json(to_json(r), out);
      print_summary(r);
      return r.exit_code();
    }
    if (*tr) {
      const Graph g = load_graph(file);
      PermGroup group(g.order(), {});
      json j;
      if (group_src == "auto") {
        SearchOptions so;
        so.node_budget = budget.nodes;
        group = automorphism_group(g, so);
        j["group"] = "Aut(Γ)";
        j["group_label"] = kGroupLabel;
      } else {
        std::ifstream in(group_src);
        if (!in) throw Error(Errc::ParseError, "cannot open " + group_src);
        group = read_group(in);
        j["group"] = group_src;
      }
      j["group_order"] = group_order(group);
      j["report"] = to_json(transitivity(g, group, parse_mode(mode), s, budget.tuples));
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::BudgetExceeded || e.code() == Errc::TupleBudgetExceeded ? 2 : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
