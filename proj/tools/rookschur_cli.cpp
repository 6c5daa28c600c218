// Command-line front end: enumeration, representation construction and
// duality verification with JSON output on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 failed verification check, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "rookschur/duality.hpp"
#include "rookschur/linalg.hpp"
#include "rookschur/partial_perm.hpp"
#include "rookschur/rook_algebra.hpp"
#include "rookschur/schur_algebra.hpp"
#include "rookschur/specht.hpp"
#include "rookschur/tensor_space.hpp"

namespace {

using nlohmann::json;
using namespace rookschur;

json element_terms(const RookAlgebraElement& x) {
  json terms = json::array();
  for (const auto& [t, c] : x.terms()) {
    terms.push_back({{"coeff", c.str()}, {"term", t.str()}});
  }
  return terms;
}

json schur_terms(const SchurElement& x) {
  json terms = json::array();
  for (const auto& [xi, c] : x.terms()) {
    terms.push_back({{"coeff", c.str()}, {"term", xi.str()}});
  }
  return terms;
}

json tensor_terms(const TensorVector& v) {
  json terms = json::array();
  for (const auto& [t, c] : v.terms()) {
    terms.push_back({{"coeff", c.str()}, {"index", t.str()}});
  }
  return terms;
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

json report_json(const DualityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  }
  return {{"d", r.d},
          {"n", r.n},
          {"dim_tensor_end", r.dim_tensor_end},
          {"schur_image_dim", r.schur_image_dim},
          {"rook_image_dim", r.rook_image_dim},
          {"commutant_of_rook_dim", r.commutant_of_rook_dim},
          {"commutant_of_schur_dim", r.commutant_of_schur_dim},
          {"rook_kernel_dim", r.rook_kernel_dim},
          {"checks", checks},
          {"all_pass", r.all_pass()}};
}

struct Output {
  bool pretty = false;
  std::string path;

  void emit(const json& j) const {
    std::string text = pretty ? j.dump(2) : j.dump();
    if (path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(path);
      out << text << "\n";
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the rook monoid, its block matrix algebra,\n"
               "the extended Schur algebra and their commuting tensor actions."};
  app.require_subcommand(1);

  Output output;
  app.add_flag("--pretty", output.pretty, "Indent JSON output");
  app.add_option("--out", output.path, "Write JSON to a file instead of stdout");

  int n = 0, d = 0;
  std::string sigma_str, mu_str, xi_str, eta_str, index_str, term_str;
  bool big = false;

  auto* c_size = app.add_subcommand("rook-size", "Cardinality of R_n");
  c_size->add_option("--n", n, "ambient size")->required();

  auto* c_enum = app.add_subcommand("enumerate", "List all elements of R_n");
  c_enum->add_option("--n", n, "ambient size")->required();

  auto* c_phi = app.add_subcommand("phi", "Image of a monoid element in the block matrix algebra");
  c_phi->add_option("--n", n, "ambient size")->required();
  c_phi->add_option("--sigma", sigma_str, "one-line form, e.g. \"[2,1,-]\"")->required();

  auto* c_round = app.add_subcommand("phi-roundtrip",
                                     "Check phi is multiplicative and phi^-1 inverts it");
  c_round->add_option("--n", n, "ambient size")->required();

  auto* c_irrep = app.add_subcommand("irrep", "Induced irreducible representation matrix");
  c_irrep->add_option("--n", n, "ambient size")->required();
  c_irrep->add_option("--mu", mu_str, "partition, e.g. \"2,1\"")->required();
  c_irrep->add_option("--sigma", sigma_str, "one-line form")->required();

  auto* c_munn = app.add_subcommand("munn-check",
                                    "Sum-of-squares and homomorphism suite for the induced irreducibles");
  c_munn->add_option("--n", n, "ambient size")->required();

  int degree_r = 0;
  auto* c_table = app.add_subcommand("specht-table",
                                     "Dimensions and character table of the symmetric group");
  c_table->add_option("--r", degree_r, "symmetric group degree")->required();

  auto* c_sdim = app.add_subcommand("schur-dim", "Dimension of the extended Schur algebra");
  c_sdim->add_option("--d", d, "alphabet size")->required();
  c_sdim->add_option("--n", n, "degree bound")->required();

  auto* c_sprod = app.add_subcommand("schur-product", "Product of two basis elements");
  c_sprod->add_option("--d", d, "alphabet size")->required();
  c_sprod->add_option("--n", n, "degree bound")->required();
  c_sprod->add_option("--xi", xi_str, "\"r; alpha=...; beta=...\"")->required();
  c_sprod->add_option("--eta", eta_str, "\"r; alpha=...; beta=...\"")->required();

  auto* c_actl = app.add_subcommand("act-left", "Left Schur-algebra action on a basis index");
  c_actl->add_option("--d", d, "alphabet size")->required();
  c_actl->add_option("--n", n, "tensor length")->required();
  c_actl->add_option("--xi", xi_str, "\"r; alpha=...; beta=...\"")->required();
  c_actl->add_option("--index", index_str, "e.g. \"2,inf\"")->required();

  auto* c_actr = app.add_subcommand("act-right", "Right rook action on a basis index");
  c_actr->add_option("--d", d, "alphabet size")->required();
  c_actr->add_option("--n", n, "tensor length")->required();
  c_actr->add_option("--index", index_str, "e.g. \"2,inf\"")->required();
  c_actr->add_option("--sigma", sigma_str, "one-line form")->required();

  auto* c_dual = app.add_subcommand("verify-duality", "Double-centralizer verification report");
  c_dual->add_option("--d", d, "alphabet size")->required();
  c_dual->add_option("--n", n, "tensor length")->required();
  c_dual->add_flag("--big", big, "allow the 4096-unknown instances");

  // Let --pretty and --out appear after the subcommand as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (c_size->parsed()) {
      output.emit({{"n", n}, {"size", rook_monoid_size(n)}});
    } else if (c_enum->parsed()) {
      json elems = json::array();
      for (const PartialPerm& p : enumerate_rook(n)) elems.push_back(p.str());
      output.emit({{"n", n}, {"size", elems.size()}, {"elements", elems}});
    } else if (c_phi->parsed()) {
      PartialPerm sigma = PartialPerm::parse(n, sigma_str);
      output.emit({{"n", n}, {"sigma", sigma.str()}, {"image", element_terms(phi(sigma))}});
    } else if (c_round->parsed()) {
      auto elements = enumerate_rook(n);
      bool roundtrip_ok = true;
      for (const PartialPerm& sigma : elements) {
        if (phi_inverse(phi(sigma)) != MonoidAlgebraElement::of(sigma)) roundtrip_ok = false;
      }
      bool hom_ok = true;
      long long pairs = 0;
      for (const PartialPerm& a : elements) {
        for (const PartialPerm& b : elements) {
          ++pairs;
          if (phi(compose(a, b)) != multiply(phi(a), phi(b))) hom_ok = false;
        }
      }
      output.emit({{"n", n},
                   {"elements", elements.size()},
                   {"pairs_checked", pairs},
                   {"roundtrip_ok", roundtrip_ok},
                   {"homomorphism_ok", hom_ok}});
      if (!roundtrip_ok || !hom_ok) return 1;
    } else if (c_irrep->parsed()) {
      PartialPerm sigma = PartialPerm::parse(n, sigma_str);
      SpechtRep rep(Partition::parse(mu_str));
      RationalMatrix m = rho_star(rep, sigma);
      output.emit({{"n", n},
                   {"mu", mu_str},
                   {"sigma", sigma.str()},
                   {"rows", m.rows()},
                   {"cols", m.cols()},
                   {"entries", matrix_json(m)}});
    } else if (c_munn->parsed()) {
      unsigned long long sum = 0;
      json irreps = json::array();
      std::vector<SpechtRep> reps;
      for (int r = 0; r <= n; ++r) {
        for (const Partition& mu : enumerate_partitions(r)) {
          reps.emplace_back(mu);
          unsigned long long dim = reps.back().dim() * binomial(n, r);
          sum += dim * dim;
          irreps.push_back({{"mu", mu.str()}, {"degree", r}, {"dim", dim}});
        }
      }
      bool sum_pass = sum == rook_monoid_size(n);

      bool hom_ok = true;
      long long pairs = 0;
      if (n <= 3) {
        auto elements = enumerate_rook(n);
        for (const SpechtRep& rep : reps) {
          for (const PartialPerm& a : elements) {
            for (const PartialPerm& b : elements) {
              ++pairs;
              if (rho_star(rep, compose(a, b)) !=
                  linalg::matmul(rho_star(rep, a), rho_star(rep, b))) {
                hom_ok = false;
              }
            }
          }
        }
      }
      output.emit({{"n", n},
                   {"sum_of_squares", {{"expected", rook_monoid_size(n)}, {"actual", sum}, {"pass", sum_pass}}},
                   {"homomorphism", {{"pairs_checked", pairs}, {"pass", hom_ok}}},
                   {"irreps", irreps}});
      if (!sum_pass || !hom_ok) return 1;
    } else if (c_table->parsed()) {
      // One class representative per cycle type: consecutive cycles of the
      // given lengths.
      auto classes = enumerate_partitions(degree_r);
      std::vector<PartialPerm> reps_of_class;
      json class_names = json::array();
      for (const Partition& lambda : classes) {
        std::vector<int> images(degree_r);
        int start = 1;
        for (int len : lambda.parts) {
          for (int k = 0; k < len; ++k) images[start - 1 + k] = start + (k + 1) % len;
          start += len;
        }
        reps_of_class.push_back(PartialPerm::from_images(degree_r, std::move(images)));
        class_names.push_back(lambda.str());
      }
      json irreps = json::array();
      for (const Partition& mu : enumerate_partitions(degree_r)) {
        SpechtRep rep(mu);
        json chars = json::array();
        for (const PartialPerm& g : reps_of_class) chars.push_back(rep.character(g).str());
        irreps.push_back({{"mu", mu.str()}, {"dim", rep.dim()}, {"characters", chars}});
      }
      output.emit({{"r", degree_r},
                   {"realization", "young-natural-polytabloid"},
                   {"classes", class_names},
                   {"irreps", irreps}});
    } else if (c_sdim->parsed()) {
      output.emit({{"d", d}, {"n", n}, {"dim", enumerate_basis(d, n).size()}});
    } else if (c_sprod->parsed()) {
      SchurElement xi = SchurElement::basis(d, n, XiBasisElement::parse(d, xi_str));
      SchurElement eta = SchurElement::basis(d, n, XiBasisElement::parse(d, eta_str));
      output.emit({{"d", d},
                   {"n", n},
                   {"xi", xi_str},
                   {"eta", eta_str},
                   {"product", schur_terms(product(xi, eta))}});
    } else if (c_actl->parsed()) {
      SchurElement xi = SchurElement::basis(d, n, XiBasisElement::parse(d, xi_str));
      TensorIndex t = TensorIndex::parse(d, n, index_str);
      output.emit({{"d", d},
                   {"n", n},
                   {"xi", xi_str},
                   {"index", t.str()},
                   {"result", tensor_terms(left_schur_action(xi, t))}});
    } else if (c_actr->parsed()) {
      TensorIndex t = TensorIndex::parse(d, n, index_str);
      PartialPerm sigma = PartialPerm::parse(n, sigma_str);
      output.emit({{"d", d},
                   {"n", n},
                   {"index", t.str()},
                   {"sigma", sigma.str()},
                   {"result", tensor_terms(right_rook_action(t, sigma))}});
    } else if (c_dual->parsed()) {
      DualityReport report = verify_duality(d, n, big);
      output.emit(report_json(report));
      if (!report.all_pass()) return 1;
    }
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
