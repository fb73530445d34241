// primegraph: generate the graph families, classify arbitrary graphs, and
// compute exact determinants / inverses / characteristic polynomials /
// spectra, plus the closed-form verification suite.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "primegraph/closed_forms.hpp"
#include "primegraph/graph_io.hpp"
#include "primegraph/isomorphism.hpp"
#include "primegraph/linalg.hpp"
#include "primegraph/recognition.hpp"
#include "primegraph/serialize.hpp"
#include "primegraph/verify.hpp"

namespace {

using namespace primegraph;

struct SourceOpts {
  std::string family;
  int m = -1;
  int n = -1;
  int k = -1;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "graph family: complete, bridge, bridge-mm1, suspension, reseminant, c5");
    cmd->add_option("--m", m, "first clique size (bridge/suspension/bridge-mm1)");
    cmd->add_option("--n", n, "second clique size, or duplication count (reseminant)");
    cmd->add_option("--k", k, "vertex count (complete)");
    cmd->add_option("--file", file, "graph JSON file ({\"n\": ..., \"edges\": [[i,j],...]})");
  }

  bool is_family(const std::string& name) const { return file.empty() && family == name; }

  int require(int value, const char* what) const {
    if (value < 0) throw std::invalid_argument(std::string("missing --") + what);
    return value;
  }

  Graph resolve() const {
    if (!file.empty()) {
      if (!family.empty()) throw std::invalid_argument("--family and --file are exclusive");
      return load_graph_file(file);
    }
    if (family == "complete") return complete_graph(require(k, "k"));
    if (family == "bridge") return bridge_graph({require(m, "m"), require(n, "n")});
    if (family == "bridge-mm1") return bridge_graph({require(m, "m"), require(m, "m") - 1});
    if (family == "suspension") return suspension_graph({require(m, "m"), require(n, "n")});
    if (family == "reseminant") return reseminant_tilde(require(n, "n"));
    if (family == "c5") return cycle5();
    if (family.empty()) throw std::invalid_argument("one of --family or --file is required");
    throw std::invalid_argument("unknown family: " + family);
  }
};

// compact source spec for `isomorphic`: c5 | complete:K | bridge:M,N |
// bridge-mm1:M | suspension:M,N | reseminant:N | <path.json>
Graph resolve_compact(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto two = [&]() -> std::pair<int, int> {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("expected M,N after \"" + head + ":\"");
    return {std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))};
  };
  if (head == "c5") return cycle5();
  if (head == "complete") return complete_graph(std::stoi(args));
  if (head == "bridge") {
    auto [m, n] = two();
    return bridge_graph({m, n});
  }
  if (head == "bridge-mm1") return bridge_graph({std::stoi(args), std::stoi(args) - 1});
  if (head == "suspension") {
    auto [m, n] = two();
    return suspension_graph({m, n});
  }
  if (head == "reseminant") return reseminant_tilde(std::stoi(args));
  return load_graph_file(spec);
}

std::string approx_marked(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f (approx)", decimals, value);
  return buf;
}

bool plain_output(bool plain_flag) {
  return plain_flag || std::getenv("NO_COLOR") != nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact adjacency spectra and recognition for prime-graph families"};
  app.require_subcommand(1);
  bool plain = false;
  app.add_flag("--plain", plain, "ASCII-only output (also honored via NO_COLOR)");

  SourceOpts gen_src, classify_src, det_src, inv_src, charpoly_src, spectrum_src;

  auto* gen = app.add_subcommand("gen", "emit a graph as JSON or DOT");
  gen_src.attach(gen);
  std::string gen_format = "json";
  gen->add_option("--format", gen_format, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* classify = app.add_subcommand("classify", "prime-graph classification report");
  classify_src.attach(classify);
  std::string classify_format = "json";
  classify->add_option("--format", classify_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* det = app.add_subcommand("det", "exact adjacency determinant");
  det_src.attach(det);

  auto* inv = app.add_subcommand("inverse", "exact adjacency inverse");
  inv_src.attach(inv);
  std::string inv_format = "table";
  int inv_decimals = 0;
  inv->add_option("--format", inv_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));
  inv->add_option("--decimals", inv_decimals, "append a decimal approximation per entry");

  auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
  charpoly_src.attach(charpoly);
  std::string charpoly_format = "text";
  charpoly->add_option("--format", charpoly_format,
                       "text | json | factored (closed form for bridge-mm1/reseminant, "
                       "square-free factors otherwise)")
      ->check(CLI::IsMember({"text", "json", "factored"}));

  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum with certified intervals");
  spectrum_src.attach(spectrum);
  std::string spectrum_format = "json";
  int width_exp = 30;
  int spectrum_decimals = 0;
  spectrum->add_option("--format", spectrum_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  spectrum->add_option("--width-exp", width_exp, "interval width 2^-k (default 30)")
      ->check(CLI::Range(4, 256));
  spectrum->add_option("--decimals", spectrum_decimals,
                       "append decimal approximations to the table");

  auto* verify = app.add_subcommand("verify", "run the closed-form verification suite");
  std::string verify_config, verify_json_out;
  std::string verify_format = "table";
  verify->add_option("--config", verify_config, "sweep config file (key = value lines)");
  verify->add_option("--format", verify_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--json-out", verify_json_out, "also write the JSON scorecard here");

  auto* iso = app.add_subcommand("isomorphic", "decide isomorphism of two graphs");
  std::string iso_a, iso_b;
  iso->add_option("first", iso_a, "first graph (family spec like bridge:4,3 or a JSON path)")
      ->required();
  iso->add_option("second", iso_b, "second graph")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      const Graph g = gen_src.resolve();
      if (gen_format == "dot")
        std::cout << graph_to_dot(g);
      else
        std::cout << graph_to_json(g).dump(2) << "\n";
    } else if (classify->parsed()) {
      const ClassificationReport rep = primegraph::classify(classify_src.resolve());
      if (classify_format == "table") {
        const auto j = rep.to_json();
        for (const auto& [key, value] : j.items())
          std::cout << key << ": " << value.dump() << "\n";
      } else {
        std::cout << rep.to_json().dump(2) << "\n";
      }
    } else if (det->parsed()) {
      std::cout << det_bareiss(adjacency_matrix(det_src.resolve())).get_str() << "\n";
    } else if (inv->parsed()) {
      const RatMatrix m = inverse(adjacency_matrix(inv_src.resolve()));
      if (inv_format == "json") {
        std::cout << matrix_to_json(m).dump(2) << "\n";
      } else {
        std::cout << matrix_to_table(m);
        if (inv_decimals > 0) {
          std::cout << "approximations (" << inv_decimals << " decimals):\n";
          for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j)
              std::cout << approx_marked(m.at(i, j).get_d(), inv_decimals)
                        << (j + 1 < m.cols() ? "  " : "");
            std::cout << "\n";
          }
        }
      }
    } else if (charpoly->parsed()) {
      if (charpoly_format == "factored") {
        FactoredPoly factored;
        if (charpoly_src.is_family("bridge-mm1")) {
          factored = charpoly_bridge_formula(charpoly_src.require(charpoly_src.m, "m"));
        } else if (charpoly_src.is_family("reseminant")) {
          factored = charpoly_reseminant_formula(charpoly_src.require(charpoly_src.n, "n"));
        } else {
          const IntPolynomial p = char_poly(adjacency_matrix(charpoly_src.resolve()));
          for (const auto& [f, mult] : squarefree_decomposition(p))
            factored.factors.emplace_back(f, mult);
        }
        std::cout << factored.str() << "\n";
      } else {
        const IntPolynomial p = char_poly(adjacency_matrix(charpoly_src.resolve()));
        if (charpoly_format == "json")
          std::cout << poly_to_json(p).dump() << "\n";
        else
          std::cout << p.str() << "\n";
      }
    } else if (spectrum->parsed()) {
      SpectrumReport rep;
      const BigRational width = pow2_inv(width_exp);
      if (spectrum_src.is_family("bridge-mm1")) {
        rep = spectrum_bridge(spectrum_src.require(spectrum_src.m, "m"), width);
      } else if (spectrum_src.is_family("reseminant")) {
        rep = spectrum_reseminant(spectrum_src.require(spectrum_src.n, "n"), width);
      } else {
        // oracle route: isolate the characteristic polynomial's roots
        const Graph g = spectrum_src.resolve();
        for (auto& r : isolate_real_roots(char_poly(adjacency_matrix(g)), width)) {
          const int mult = r.multiplicity();
          rep.entries.push_back({r.is_exact()
                                     ? EigenDescriptor::rational(r.lo())
                                     : EigenDescriptor::poly_root(std::move(r)),
                                 mult});
        }
      }
      if (spectrum_format == "table") {
        const bool ascii = plain_output(plain);
        std::cout << "eigenvalue  multiplicity\n";
        for (const auto& e : rep.entries) {
          std::cout << e.value.str(ascii) << "  x" << e.multiplicity;
          if (spectrum_decimals > 0)
            std::cout << "  ~ " << approx_marked(e.value.enclosure.approx(), spectrum_decimals);
          std::cout << "\n";
        }
      } else {
        std::cout << rep.to_json().dump(2) << "\n";
      }
    } else if (verify->parsed()) {
      SweepConfig cfg;
      if (!verify_config.empty()) cfg = SweepConfig::from_file(verify_config);
      const auto checks = run_suite(cfg);
      if (!verify_json_out.empty()) {
        std::ofstream out(verify_json_out);
        if (!out) throw std::invalid_argument("cannot write " + verify_json_out);
        out << suite_to_json(cfg, checks).dump(2) << "\n";
      }
      if (verify_format == "json")
        std::cout << suite_to_json(cfg, checks).dump(2) << "\n";
      else
        std::cout << suite_to_table(checks);
      if (!all_passed(checks)) return 2;
    } else if (iso->parsed()) {
      const Graph a = resolve_compact(iso_a);
      const Graph b = resolve_compact(iso_b);
      const auto mapping = find_isomorphism(a, b);
      nlohmann::json j = {{"isomorphic", mapping.has_value()}};
      if (mapping) j["mapping"] = *mapping;
      std::cout << j.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
