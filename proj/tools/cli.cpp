#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "vtutte/enumeration.hpp"
#include "vtutte/rooted_tree.hpp"
#include "vtutte/vposet.hpp"

namespace vtutte::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open input file '" + path + "'");
  }
  buf << file.rdbuf();
  return buf.str();
}

bool looks_like_tree(const std::string& text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return c == '(';
    }
  }
  return false;
}

Integer parse_integer(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw UsageError("not an integer: '" + s + "'");
  }
  return v;
}

struct PolyOutput {
  std::vector<std::string> eval;  // empty, or {X, Y}
  bool json = false;
};

void print_polynomial(const BivariatePoly& p, const PolyOutput& opts, std::ostream& out) {
  std::optional<Integer> value;
  if (!opts.eval.empty()) {
    value = p.eval(parse_integer(opts.eval[0]), parse_integer(opts.eval[1]));
  }
  if (opts.json) {
    out << "{\"polynomial\":" << p.to_json();
    if (value) {
      out << ",\"eval\":{\"x\":" << parse_integer(opts.eval[0]).get_str()
          << ",\"y\":" << parse_integer(opts.eval[1]).get_str() << ",\"value\":" << value->get_str()
          << '}';
    }
    out << "}\n";
    return;
  }
  out << p.to_string() << '\n';
  if (value) {
    out << "P(" << opts.eval[0] << "," << opts.eval[1] << ") = " << value->get_str() << '\n';
  }
}

// One row of the evaluation table: polynomial value next to the oracle.
struct CountRow {
  std::string point;
  std::string from_poly;
  std::optional<std::string> from_oracle;
  std::string meaning;
};

int print_count_rows(const std::vector<CountRow>& rows, std::ostream& out) {
  bool mismatch = false;
  out << "evaluation\tpolynomial\tbrute_force\tmeaning\n";
  for (const auto& row : rows) {
    out << row.point << '\t' << row.from_poly << '\t' << row.from_oracle.value_or("-") << '\t'
        << row.meaning << '\n';
    if (row.from_oracle && *row.from_oracle != row.from_poly) {
      mismatch = true;
    }
  }
  if (mismatch) {
    out << "MISMATCH\n";
    return exit_mismatch;
  }
  return exit_ok;
}

int counts_for_tree(const RootedTree& t, std::ostream& out) {
  const BivariatePoly p = tree_poly(t);
  const bool oracle = t.size() <= default_oracle_bound;
  auto opt = [&](auto&& f) -> std::optional<std::string> {
    if (!oracle) {
      return std::nullopt;
    }
    return f();
  };
  const std::string two_n = Integer(Integer(1) << static_cast<mp_bitcnt_t>(t.size())).get_str();
  std::vector<CountRow> rows{
      {"P(1,1)", p.eval(1, 1).get_str(),
       opt([&] { return count_maximal_antichains_tree(t).get_str(); }), "maximal antichains"},
      {"P(x,0)", p.at_y(0).to_string(),
       BivariatePoly::monomial(1, static_cast<unsigned>(t.leaf_count()), 0).to_string(),
       "x^(number of leaves)"},
      {"P(0,1)", p.eval(0, 1).get_str(),
       opt([&] { return count_maximal_antichains_no_leaf_tree(t).get_str(); }),
       "maximal antichains without leaves"},
      {"P(2,1)", p.eval(2, 1).get_str(), opt([&] { return count_antichains_tree(t).get_str(); }),
       "antichains (including the empty set)"},
      {"P(1,2)", p.eval(1, 2).get_str(), opt([&] { return count_cutsets_tree(t).get_str(); }),
       "cutsets"},
      {"P(2,2)", p.eval(2, 2).get_str(), two_n, "2^|T|"},
  };
  return print_count_rows(rows, out);
}

int counts_for_poset(const Poset& p, std::ostream& out) {
  const BivariatePoly poly = poset_poly(p);
  const bool oracle = p.size() <= default_oracle_bound;
  auto opt = [&](auto&& f) -> std::optional<std::string> {
    if (!oracle) {
      return std::nullopt;
    }
    return f();
  };
  const std::string two_n = Integer(Integer(1) << static_cast<mp_bitcnt_t>(p.size())).get_str();
  const auto basic = static_cast<unsigned>(cardinality(basic_elements(p)));
  std::vector<CountRow> rows{
      {"P(1,1)", poly.eval(1, 1).get_str(),
       opt([&] { return count_maximal_antichains_poset(p).get_str(); }), "maximal antichains"},
      {"P(x,0)", poly.at_y(0).to_string(), BivariatePoly::monomial(1, basic, 0).to_string(),
       "x^(number of basic elements)"},
      {"P(0,1)", poly.eval(0, 1).get_str(),
       opt([&] { return count_maximal_antichains_no_basic(p).get_str(); }),
       "maximal antichains without basic elements"},
      {"P(2,1)", poly.eval(2, 1).get_str(),
       opt([&] { return count_antichains_poset(p).get_str(); }),
       "antichains (including the empty set)"},
      {"P(1,2)", poly.eval(1, 2).get_str(), opt([&] { return count_cutsets_poset(p).get_str(); }),
       "cutsets"},
      {"P(2,2)", poly.eval(2, 2).get_str(), two_n, "2^|P|"},
  };
  return print_count_rows(rows, out);
}

void print_classes(const char* title, const std::vector<std::vector<RootedTree>>& classes,
                   bool list, const std::function<std::string(const RootedTree&)>& key,
                   std::ostream& out) {
  out << title << ": " << classes.size() << " classes, " << CollisionReport::pair_count(classes)
      << " pairs\n";
  if (!list) {
    return;
  }
  for (const auto& cls : classes) {
    out << "  " << key(cls.front()) << '\n';
    for (const auto& t : cls) {
      out << "    " << t.encoding() << "  " << tree_poly(t).to_string() << '\n';
    }
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tutte-like polynomials of rooted trees and V-posets"};
  app.name(args.empty() ? "vtutte" : args.front());
  app.require_subcommand(1);

  std::string input;
  PolyOutput poly_opts;
  bool use_dc = false;
  bool use_expansion = false;
  std::size_t census_max = 8;
  std::size_t order = 100;
  std::size_t collide_max = 10;
  bool collide_list = false;

  auto* tree_cmd = app.add_subcommand("tree-poly", "Polynomial of a rooted tree");
  tree_cmd->add_option("file", input, "Tree file, or - for standard input")->required();
  tree_cmd->add_flag("--dc", use_dc, "Compute by deletion-contraction");
  tree_cmd->add_option("--eval", poly_opts.eval, "Evaluate at integers X Y")->expected(2);
  tree_cmd->add_flag("--json", poly_opts.json, "JSON output");

  auto* poset_cmd = app.add_subcommand("poset-poly", "Polynomial of a V-poset");
  poset_cmd->add_option("file", input, "Poset file, or - for standard input")->required();
  poset_cmd->add_flag("--expansion", use_expansion, "Compute by maximal-antichain expansion");
  poset_cmd->add_option("--eval", poly_opts.eval, "Evaluate at integers X Y")->expected(2);
  poset_cmd->add_flag("--json", poly_opts.json, "JSON output");

  auto* check_cmd = app.add_subcommand("check", "Recognise a V-poset and print a certificate");
  check_cmd->add_option("file", input, "Poset file, or - for standard input")->required();

  auto* counts_cmd =
      app.add_subcommand("counts", "Special evaluations checked against brute force");
  counts_cmd->add_option("file", input, "Tree or poset file, or - for standard input")
      ->required();

  auto* census_cmd = app.add_subcommand("census", "Number of V-posets by size");
  census_cmd->add_option("--max", census_max, "Largest size")->required()->check(
      CLI::Range(std::size_t{1}, std::size_t{100000}));

  auto* asym_cmd = app.add_subcommand("asymptotics", "Singularity and asymptotic constant");
  asym_cmd->add_option("--order", order, "Series truncation order (>= 60)")->check(
      CLI::Range(min_asymptotic_order, std::size_t{5000}));

  auto* collide_cmd =
      app.add_subcommand("collide", "Search for rooted trees sharing a polynomial");
  collide_cmd->add_option("--max", collide_max, "Largest number of vertices")->required();
  collide_cmd->add_flag("--list", collide_list, "List every collision class");

  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*tree_cmd) {
      if (!poly_opts.eval.empty()) {
        parse_integer(poly_opts.eval[0]);
        parse_integer(poly_opts.eval[1]);
      }
      const RootedTree t = parse_tree(read_input(input, in));
      print_polynomial(use_dc ? tree_poly_dc(t) : tree_poly(t), poly_opts, out);
      return exit_ok;
    }
    if (*poset_cmd) {
      if (!poly_opts.eval.empty()) {
        parse_integer(poly_opts.eval[0]);
        parse_integer(poly_opts.eval[1]);
      }
      const Poset p = parse_poset(read_input(input, in));
      print_polynomial(use_expansion ? poset_L_poly(p) : poset_poly(p), poly_opts, out);
      return exit_ok;
    }
    if (*check_cmd) {
      const Poset p = parse_poset(read_input(input, in));
      const auto cert = is_v_poset(p);
      if (const auto* trace = std::get_if<BuildTrace>(&cert)) {
        out << "VPOSET " << trace->to_string() << '\n';
        return exit_ok;
      }
      out << "NOT-VPOSET " << std::get<ForbiddenPattern>(cert).to_string() << '\n';
      return exit_not_vposet;
    }
    if (*counts_cmd) {
      const std::string text = read_input(input, in);
      if (looks_like_tree(text)) {
        return counts_for_tree(parse_tree(text), out);
      }
      return counts_for_poset(parse_poset(text), out);
    }
    if (*census_cmd) {
      const IntSeries v = v_series(census_max);
      const std::size_t constructive_max = std::min(census_max, max_census_size);
      const std::vector<Integer> built = census(constructive_max);
      out << "n\tv_n\tconstructive\n";
      for (std::size_t n = 1; n <= census_max; ++n) {
        out << n << '\t' << v[n].get_str() << '\t'
            << (n <= constructive_max ? built[n - 1].get_str() : std::string("-")) << '\n';
      }
      return exit_ok;
    }
    if (*asym_cmd) {
      const AsymptoticResult a = asymptotic_constant(order);
      nlohmann::ordered_json j;
      j["rho"] = a.rho;
      j["rhoInv"] = a.rho_inv;
      j["constant"] = a.constant;
      j["truncationOrder"] = a.truncation_order;
      out << j.dump(2) << '\n';
      return exit_ok;
    }
    if (*collide_cmd) {
      const CollisionReport report = collision_search(collide_max);
      out << "trees examined: " << report.trees_examined << " (1.." << report.max_vertices
          << " vertices)\n";
      print_classes("full polynomial", report.full, collide_list,
                    [](const RootedTree& t) { return tree_poly(t).to_string(); }, out);
      print_classes("P(T;x,1)", report.at_y_one, collide_list,
                    [](const RootedTree& t) { return tree_poly(t).at_y(1).to_string(); }, out);
      print_classes("P(T;1,y)", report.at_x_one, collide_list,
                    [](const RootedTree& t) { return tree_poly(t).at_x(1).to_string(); }, out);
      return exit_ok;
    }
  } catch (const NotVPosetError& e) {
    err << "error: " << e.what() << '\n';
    out << "NOT-VPOSET " << e.witness().to_string() << '\n';
    return exit_not_vposet;
  } catch (const OracleBoundError& e) {
    err << "error: " << e.what() << '\n';
    return exit_oracle_bound;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace vtutte::cli
