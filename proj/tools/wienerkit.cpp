// Command-line front end: Wiener indices, caterpillar quadratic form,
// exhaustive arrangement search, exact characteristic polynomials of the
// half-distance matrix, eigenvalue estimates and the verification harnesses.
//
// Exit status: 0 success or confirmed, 1 refuted verdict, 2 usage or input
// error, 3 computation error.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "wiener/error.hpp"
#include "wiener/io.hpp"
#include "wiener/quadform.hpp"
#include "wiener/spectral.hpp"
#include "wiener/trees.hpp"
#include "wiener/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

using Json = nlohmann::ordered_json;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit(const wiener::VerificationReport& report, const std::string& format) {
  if (format == "text") {
    std::cout << wiener::render_text(report);
  } else {
    print(wiener::to_json(report));
  }
  return report.verdict == wiener::Verdict::refuted ? kExitRefuted : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener index, caterpillar quadratic form and half-distance matrix spectra"};
  app.require_subcommand(1);

  // One slot per subcommand: default_val writes the variable at declaration.
  std::map<std::string, std::string> formats;
  auto add_format = [&formats](CLI::App* sub, const std::string& fallback) {
    sub->add_option("--format", formats[sub->get_name()], "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val(fallback);
  };

  std::string edges_path;
  auto* wiener_cmd = app.add_subcommand("wiener", "Wiener index of a tree given as an edge list");
  wiener_cmd->add_option("--edges", edges_path, "Edge-list file (one 'u v' pair per line)")->required();
  add_format(wiener_cmd, "text");

  std::string arrangement_text;
  auto* qform_cmd = app.add_subcommand("qform", "Quadratic form q(x) of a spine arrangement");
  qform_cmd->add_option("--arrangement", arrangement_text, "Comma-separated positive integers")->required();
  add_format(qform_cmd, "text");

  std::string multiset_text;
  std::string pattern;
  auto* arrange_cmd = app.add_subcommand("arrange", "Construct a structured arrangement of a multiset");
  arrange_cmd->add_option("--multiset", multiset_text, "value:multiplicity pairs, e.g. 7:3,2:2,1:2")->required();
  arrange_cmd->add_option("--pattern", pattern, "Arrangement pattern")
      ->required()
      ->check(CLI::IsMember({"symmetric", "dominant-odd"}));
  add_format(arrange_cmd, "text");

  bool prune = false;
  std::size_t limit = 12;
  auto* maximize_cmd = app.add_subcommand("maximize", "Exhaustive maximum of q over all arrangements");
  maximize_cmd->add_option("--multiset", multiset_text, "value:multiplicity pairs")->required();
  maximize_cmd->add_flag("--prune", prune, "Skip arrangements failing the necessary shape condition");
  maximize_cmd->add_option("--limit", limit, "Largest k to enumerate")->default_val(12);
  add_format(maximize_cmd, "json");

  std::size_t k = 0;
  std::string method;
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial det(A_k - lambda I)");
  charpoly_cmd->add_option("--k", k, "Dimension")->required()->check(CLI::PositiveNumber);
  charpoly_cmd->add_option("--method", method, "closed | oracle | collins")
      ->check(CLI::IsMember({"closed", "oracle", "collins"}))
      ->default_val("closed");
  add_format(charpoly_cmd, "json");

  double tol = 1e-12;
  auto* eigen_cmd = app.add_subcommand("eigen", "Largest eigenvalue of A_k");
  eigen_cmd->add_option("--k", k, "Dimension")->required()->check(CLI::PositiveNumber);
  eigen_cmd->add_option("--method", method, "transcendental | power | asymptotic | rough | all")
      ->check(CLI::IsMember({"transcendental", "power", "asymptotic", "rough", "all"}))
      ->default_val("all");
  eigen_cmd->add_option("--tol", tol, "Solver tolerance")->default_val(1e-12)->check(CLI::PositiveNumber);
  add_format(eigen_cmd, "json");

  std::string target;
  std::int64_t vk = -1;
  std::int64_t vs = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification harness");
  verify_cmd->add_option("--target", target, "conjecture1 | conjecture2 | theorem31 | theorem13")
      ->required()
      ->check(CLI::IsMember({"conjecture1", "conjecture2", "theorem31", "theorem13"}));
  auto* k_opt = verify_cmd->add_option("--k", vk, "k_max (conjecture1, sweeps) or family k (conjecture2)");
  verify_cmd->add_option("--s", vs, "Family parameter s (conjecture2)")->default_val(3);
  verify_cmd->add_option("--trials", trials, "Random instances (sweeps)")->default_val(100);
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "Random seed (sweeps)");
  add_format(verify_cmd, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string format = formats[app.get_subcommands().front()->get_name()];

  try {
    if (*wiener_cmd) {
      const auto tree = wiener::read_edge_list_file(edges_path);
      const auto w = wiener::wiener_index(tree);
      if (format == "json") {
        print(Json{{"n", tree.order()}, {"wiener_index", w}, {"caterpillar", wiener::is_caterpillar(tree)}});
      } else {
        std::cout << w << "\n";
      }
    } else if (*qform_cmd) {
      const auto x = wiener::parse_arrangement(arrangement_text);
      const auto q = wiener::q_value(x);
      if (format == "json") {
        print(Json{{"arrangement", x}, {"q", q}});
      } else {
        std::cout << q << "\n";
      }
    } else if (*arrange_cmd) {
      const auto b = wiener::parse_multiset(multiset_text);
      const auto x = pattern == "symmetric" ? wiener::symmetric_split_arrangement(b)
                                            : wiener::dominant_odd_arrangement(b);
      if (format == "json") {
        print(Json{{"multiset", b.to_string()}, {"pattern", pattern}, {"arrangement", x}, {"q", wiener::q_value(x)}});
      } else {
        std::cout << wiener::format_arrangement(x) << "\n";
      }
    } else if (*maximize_cmd) {
      const auto b = wiener::parse_multiset(multiset_text);
      const auto r = wiener::brute_force_maximize(b, {.prune = prune, .limit = limit});
      if (format == "text") {
        std::cout << wiener::render_text(r, b);
      } else {
        print(wiener::to_json(r, b));
      }
    } else if (*charpoly_cmd) {
      const auto p = method == "closed"   ? wiener::charpoly_closed_form(k)
                     : method == "oracle" ? wiener::charpoly_oracle(k)
                                          : wiener::charpoly_from_collins(k);
      if (format == "text") {
        std::cout << wiener::render_text(p);
      } else {
        print(Json{{"k", k}, {"method", method}, {"coefficients", wiener::to_json(p)}});
      }
    } else if (*eigen_cmd) {
      if (method == "all") {
        const auto r = wiener::spectral_report(k, tol);
        if (format == "text") {
          std::cout << wiener::render_text(r);
        } else {
          print(wiener::to_json(r));
        }
      } else {
        const double lambda = method == "transcendental" ? wiener::lambda_max_transcendental(k, tol)
                              : method == "power"        ? wiener::lambda_max_power(k, tol)
                              : method == "asymptotic"   ? wiener::lambda_max_asymptotic(k)
                                                         : wiener::lambda_max_rough(k);
        if (format == "text") {
          std::cout << wiener::format_real(lambda) << "\n";
        } else {
          print(Json{{"k", k}, {"method", method}, {"lambda", wiener::real_json(lambda)}});
        }
      }
    } else if (*verify_cmd) {
      const bool k_given = k_opt->count() > 0;
      if (k_given && vk < 1) {
        throw CLI::ValidationError("--k", "must be positive");
      }
      if (target == "conjecture1") {
        return emit(wiener::verify_conjecture1(k_given ? static_cast<std::size_t>(vk) : 30), format);
      }
      if (target == "conjecture2") {
        return emit(wiener::verify_counterexample(wiener::counterexample_family(k_given ? vk : 9, vs)), format);
      }
      const auto k_max = k_given ? static_cast<std::size_t>(vk) : std::size_t{8};
      if (target == "theorem31") {
        return emit(wiener::verify_theorem31_random(trials, k_max, seed_opt->count() ? seed : 42), format);
      }
      return emit(wiener::verify_chemical_random(trials, k_max, seed_opt->count() ? seed : 7), format);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wiener::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wiener::InvalidTree& e) {
    std::cerr << "error: invalid tree: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wiener::InvalidMultiset& e) {
    std::cerr << "error: invalid multiset: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wiener::InvalidArrangement& e) {
    std::cerr << "error: invalid arrangement: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}
