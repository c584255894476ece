// Command-line front door: compute Kerov polynomials and their generalized
// variants, evaluate closed-form coefficients, dump map decompositions, and
// run the verification battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kerov/closedform.hpp"
#include "kerov/decompose.hpp"
#include "kerov/json_io.hpp"
#include "kerov/kerov.hpp"
#include "kerov/nseries.hpp"
#include "kerov/oracle.hpp"

namespace {

constexpr int kDefaultMaxK = 8;
constexpr int kDefaultMaxMuWeight = 7;

struct RunConfig {
  std::string format = "text";
  unsigned threads = 1;
  bool uncapped = false;
  int truncation = 0;  // 0: per-command default
};

kerov::CycleType parse_mu(const std::vector<int>& parts) {
  if (parts.empty()) throw CLI::ValidationError("--mu", "mu must be nonempty");
  for (int p : parts)
    if (p < 1) throw CLI::ValidationError("--mu", "parts must be positive");
  return kerov::CycleType::of(parts);
}

void check_caps(const RunConfig& cfg, int k, int mu_weight) {
  if (cfg.uncapped) return;
  if (k > kDefaultMaxK) {
    std::ostringstream os;
    os << "k = " << k << " exceeds the cap " << kDefaultMaxK
       << " (override with --unsafe-uncapped or KEROV_UNSAFE_UNCAPPED=1)";
    throw CLI::ValidationError("cap", os.str());
  }
  if (mu_weight > kDefaultMaxMuWeight) {
    std::ostringstream os;
    os << "|mu| = " << mu_weight << " exceeds the cap " << kDefaultMaxMuWeight
       << " (override with --unsafe-uncapped or KEROV_UNSAFE_UNCAPPED=1)";
    throw CLI::ValidationError("cap", os.str());
  }
}

void print_r_polynomial(const RunConfig& cfg, const kerov::RPolynomial& poly) {
  if (cfg.format == "json")
    std::cout << kerov::to_json(poly) << "\n";
  else
    std::cout << poly.to_string() << "\n";
}

int cmd_poly(const RunConfig& cfg, int k) {
  check_caps(cfg, k, 0);
  if (cfg.truncation > 0) {
    auto sigma = kerov::sigma_poly(kerov::CycleType::of({k}), cfg.truncation, cfg.threads);
    print_r_polynomial(cfg, kerov::express_in_R(sigma, k + 1, k + 1, cfg.threads));
  } else {
    print_r_polynomial(cfg, kerov::kerov_polynomial(k, cfg.threads));
  }
  return 0;
}

int cmd_genpoly(const RunConfig& cfg, const kerov::CycleType& mu, bool positive) {
  check_caps(cfg, 0, mu.weight());
  if (cfg.truncation > 0) {
    const int k = mu.weight();
    auto sigma = positive ? kerov::sigma_prime_poly(mu, cfg.truncation, cfg.threads)
                          : kerov::sigma_poly(mu, cfg.truncation, cfg.threads);
    int max_weight = positive ? k + 2 - mu.length() : k + mu.length();
    print_r_polynomial(cfg, kerov::express_in_R(sigma, max_weight, k + 1, cfg.threads));
  } else {
    print_r_polynomial(cfg, positive ? kerov::positive_kerov(mu, cfg.threads)
                                     : kerov::generalized_kerov(mu, cfg.threads));
  }
  return 0;
}

// Prints the closed-form value and, with check, the solved coefficient and a
// match flag.  Returns 1 on mismatch.
int report_coefficient(const RunConfig& cfg, const std::string& what, const mpq_class& closed,
                       bool check, const mpq_class& solved) {
  bool match = !check || closed == solved;
  if (cfg.format == "json") {
    nlohmann::json j{{"kind", what}, {"closed_form", closed.get_str()}};
    if (check) {
      j["solved"] = solved.get_str();
      j["match"] = match;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << what << ": " << closed.get_str();
    if (check) std::cout << "  solved: " << solved.get_str() << "  match: " << (match ? "yes" : "no");
    std::cout << "\n";
  }
  return match ? 0 : 1;
}

int cmd_decompose(const RunConfig& cfg, const std::string& tau_text,
                  const std::string& taubar_text) {
  kerov::Permutation tau = kerov::Permutation::parse_cycles(tau_text);
  kerov::Permutation taubar =
      kerov::Permutation::parse_cycles(taubar_text, tau.degree());
  if (taubar.degree() > tau.degree())
    tau = kerov::Permutation::parse_cycles(tau_text, taubar.degree());
  check_caps(cfg, tau.degree(), 0);
  kerov::FormalMapSum d = kerov::d_full(kerov::build_map(tau, taubar));
  if (cfg.format == "json") {
    std::cout << kerov::to_json(d) << "\n";
    return 0;
  }
  for (const auto& [erased, coeff] : d.terms()) {
    std::cout << (coeff >= 0 ? "+" : "") << coeff.get_str() << "  erased {";
    auto labels = d.erased_labels(erased);
    for (std::size_t i = 0; i < labels.size(); ++i)
      std::cout << (i ? "," : "") << labels[i];
    std::cout << "}\n";
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg, const std::vector<long>& rows, const std::vector<long>& p,
               const std::vector<long>& q, const std::vector<int>& mu_parts, int cumulants_up_to) {
  kerov::YoungDiagram lambda =
      rows.empty() ? kerov::diagram_from_pq(p, q) : kerov::YoungDiagram(rows);
  nlohmann::json j;
  j["lambda"] = lambda.rows();
  std::ostringstream text;
  text << "lambda = " << kerov::to_json(lambda) << "\n";
  if (!mu_parts.empty()) {
    kerov::CycleType mu = parse_mu(mu_parts);
    mpz_class chi = kerov::mn_character(lambda, mu);
    mpq_class sigma = kerov::normalized_character(lambda, mu);
    j["chi"] = chi.get_str();
    j["sigma"] = sigma.get_str();
    text << "chi" << mu.to_string() << " = " << chi.get_str() << "\n";
    text << "sigma" << mu.to_string() << " = " << sigma.get_str() << "\n";
  }
  if (cumulants_up_to >= 2) {
    auto r = kerov::free_cumulants_numeric(lambda, cumulants_up_to);
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 2; i <= cumulants_up_to; ++i) {
      arr.push_back(r[static_cast<std::size_t>(i)].get_str());
      text << "R" << i << " = " << r[static_cast<std::size_t>(i)].get_str() << "\n";
    }
    j["cumulants"] = std::move(arr);
  }
  if (cfg.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text.str();
  return 0;
}

struct VerifyReport {
  int checks = 0;
  int failures = 0;

  void record(const std::string& name, bool ok) {
    ++checks;
    if (!ok) ++failures;
    std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
  }
};

int cmd_verify(const RunConfig& cfg, int max_k, int max_mu_weight, bool slow) {
  if (!cfg.uncapped && (max_k > kDefaultMaxK || max_mu_weight > kDefaultMaxMuWeight))
    throw CLI::ValidationError("cap", "verification bounds exceed the configured caps");
  VerifyReport report;

  std::vector<kerov::RPolynomial> kerov_polys(static_cast<std::size_t>(max_k) + 1);
  for (int k = 1; k <= max_k; ++k) {
    kerov_polys[static_cast<std::size_t>(k)] = kerov::kerov_polynomial(k, cfg.threads);
    const auto& poly = kerov_polys[static_cast<std::size_t>(k)];
    auto positivity = kerov::verify_positivity(poly);
    report.record("K_" + std::to_string(k) + " has non-negative coefficients",
                  positivity.non_negative);
    report.record("K_" + std::to_string(k) + " top component is R_" + std::to_string(k + 1),
                  poly.weight_component(k + 1) == kerov::RPolynomial::generator(k + 1));

    bool linear_ok = true;
    for (int d = 2; d <= k + 1; ++d) {
      mpz_class counted = kerov::linear_coefficient(kerov::CycleType::of({k}), d, cfg.threads);
      if (counted != poly.coefficient(kerov::RMonomial({d}))) linear_ok = false;
    }
    report.record("K_" + std::to_string(k) + " linear coefficients match the counts", linear_ok);

    if (k >= 2 && k <= 6) {
      bool quad_ok = true;
      for (int j = 2; j <= k + 1; ++j) {
        for (int l = j; l + j <= k + 1; ++l) {
          mpq_class counted =
              kerov::quadratic_coefficient(kerov::CycleType::of({k}), j, l, cfg.threads);
          if (counted != mpq_class(poly.coefficient(kerov::RMonomial({j, l})))) quad_ok = false;
        }
      }
      report.record("K_" + std::to_string(k) + " quadratic coefficients match the counts",
                    quad_ok);
    }
    if (k >= 3) {
      report.record(
          "K_" + std::to_string(k) + " subdominant component matches the closed form",
          poly.weight_component(k - 1) ==
              kerov::subdominant_expansion(kerov::CycleType::of({k})).weight_component(k - 1));
    }
  }

  for (int w = 2; w <= max_mu_weight; ++w) {
    for (const auto& mu : kerov::partitions_of(w)) {
      if (mu.length() < 2) continue;
      auto prime = kerov::positive_kerov(mu, cfg.threads);
      report.record("K'_" + mu.to_string() + " has non-negative coefficients",
                    kerov::verify_positivity(prime).non_negative);
      report.record("K_" + mu.to_string() + " agrees with the K' expansion",
                    kerov::sigma_from_sigma_prime(mu, cfg.threads) ==
                        kerov::generalized_kerov(mu, cfg.threads));
    }
  }

  {
    // character values against the Murnaghan-Nakayama oracle on fixed diagrams
    const std::vector<std::pair<std::vector<long>, std::vector<long>>> coords = {
        {{1, 1}, {2, 1}}, {{2}, {2}}, {{2, 1}, {1, 2}}};
    bool ok = true;
    for (const auto& [p, q] : coords) {
      kerov::YoungDiagram lambda = kerov::diagram_from_pq(p, q);
      for (int w = 1; w <= std::min(5, max_mu_weight); ++w) {
        for (const auto& mu : kerov::partitions_of(w)) {
          if (mu.weight() > lambda.n()) continue;
          int m = std::max<int>(mu.weight(), static_cast<int>(p.size()));
          std::vector<mpq_class> pe(static_cast<std::size_t>(m), 0), qe(pe);
          for (std::size_t i = 0; i < p.size(); ++i) {
            pe[i] = p[i];
            qe[i] = q[i];
          }
          if (kerov::sigma_poly(mu, m, cfg.threads).evaluate(pe, qe) !=
              kerov::normalized_character(lambda, mu))
            ok = false;
        }
      }
    }
    report.record("Stanley sums match the character oracle", ok);

    bool cum_ok = true;
    for (const auto& [p, q] : coords) {
      kerov::YoungDiagram lambda = kerov::diagram_from_pq(p, q);
      auto numeric = kerov::free_cumulants_numeric(lambda, 6);
      for (int j = 2; j <= 6; ++j) {
        int m = std::max<int>(j, static_cast<int>(p.size()));
        std::vector<mpq_class> pe(static_cast<std::size_t>(m), 0), qe(pe);
        for (std::size_t i = 0; i < p.size(); ++i) {
          pe[i] = p[i];
          qe[i] = q[i];
        }
        if (kerov::free_cumulant_poly(j, m).evaluate(pe, qe) !=
            numeric[static_cast<std::size_t>(j)])
          cum_ok = false;
      }
    }
    report.record("cumulant polynomials match the transition-measure oracle", cum_ok);
  }

  if (slow) {
    auto poly = kerov::kerov_polynomial(9 <= max_k ? max_k : 8, cfg.threads);
    report.record("slow: K_8 has non-negative coefficients",
                  kerov::verify_positivity(poly).non_negative);
  }

  std::cout << report.checks - report.failures << "/" << report.checks << " checks passed\n";
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kerov polynomial engine"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  RunConfig cfg;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KEROV_UNSAFE_UNCAPPED"))
    cfg.uncapped = std::string(env) == "1";
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--truncation", cfg.truncation,
                 "Override the truncation level for poly/genpoly")
      ->check(CLI::Range(1, 16));
  app.add_flag("--unsafe-uncapped", cfg.uncapped,
               "Lift the k/|mu| caps (mirrors KEROV_UNSAFE_UNCAPPED=1)");

  int k = 0;
  auto* poly = app.add_subcommand("poly", "Print the Kerov polynomial K_k");
  poly->add_option("-k", k, "Cycle length")->required()->check(CLI::PositiveNumber);

  std::vector<int> mu_parts;
  bool positive = false;
  auto* genpoly = app.add_subcommand("genpoly", "Print K_mu, or K'_mu with --positive");
  genpoly->add_option("--mu", mu_parts, "Cycle type parts, e.g. 2,2")->required()->delimiter(',');
  genpoly->add_flag("--positive", positive, "Print the positive polynomial K'_mu");

  auto* coeff = app.add_subcommand("coeff", "Closed-form coefficients");
  coeff->require_subcommand(1);
  bool check = false;
  std::vector<int> coeff_mu, mono_parts;
  int d = 2, qj = 2, ql = 2, top_k = 3, tp_r = 1, tp_s = 1;

  auto* linear = coeff->add_subcommand("linear", "[R_d] K'_mu by counting");
  linear->add_option("--mu", coeff_mu)->required()->delimiter(',');
  linear->add_option("-d", d)->required()->check(CLI::Range(2, 64));
  linear->add_flag("--check", check);

  auto* quadratic = coeff->add_subcommand("quadratic", "[R_j R_l] K'_mu by counting");
  quadratic->add_option("--mu", coeff_mu)->required()->delimiter(',');
  quadratic->add_option("-j", qj)->required()->check(CLI::Range(2, 64));
  quadratic->add_option("-l", ql)->required()->check(CLI::Range(2, 64));
  quadratic->add_flag("--check", check);

  auto* top = coeff->add_subcommand("top", "subdominant coefficient of K_k");
  top->add_option("-k", top_k)->required()->check(CLI::PositiveNumber);
  top->add_option("--mono", mono_parts, "monomial indices, e.g. 2,2")->required()->delimiter(',');
  top->add_flag("--check", check);

  auto* twopart = coeff->add_subcommand("twopart", "top coefficient of K'_{r,s}");
  twopart->add_option("-r", tp_r)->required()->check(CLI::PositiveNumber);
  twopart->add_option("-s", tp_s)->required()->check(CLI::PositiveNumber);
  twopart->add_option("--mono", mono_parts)->required()->delimiter(',');
  twopart->add_flag("--check", check);

  auto* subdominant = coeff->add_subcommand("subdominant", "two top graded components of K_mu");
  subdominant->add_option("--mu", coeff_mu)->required()->delimiter(',');
  subdominant->add_flag("--check", check);

  std::string tau_text, taubar_text;
  auto* decompose = app.add_subcommand("decompose", "Print D(M^{tau,taubar})");
  decompose->add_option("--tau", tau_text, "cycle notation, e.g. \"(1 2)(3)\"")->required();
  decompose->add_option("--taubar", taubar_text)->required();

  std::vector<long> rows, pvec, qvec;
  std::vector<int> oracle_mu;
  int cumulants_up_to = 0;
  auto* oracle = app.add_subcommand("oracle", "Characters and cumulants of a diagram");
  auto* rows_opt = oracle->add_option("--rows", rows, "row lengths, e.g. 3,1");
  rows_opt->delimiter(',');
  auto* p_opt = oracle->add_option("-p", pvec, "row multiplicities")->delimiter(',');
  oracle->add_option("-q", qvec, "column increments")->delimiter(',')->needs(p_opt);
  p_opt->excludes(rows_opt);
  oracle->add_option("--mu", oracle_mu)->delimiter(',');
  oracle->add_option("--cumulants", cumulants_up_to, "print R_2..R_n");

  int max_k = 5, max_mu_weight = 4;
  bool slow = false;
  auto* verify = app.add_subcommand("verify", "Cross-check the pipeline; exit 1 on failure");
  verify->add_option("--max-k", max_k)->check(CLI::PositiveNumber);
  verify->add_option("--max-mu-weight", max_mu_weight)->check(CLI::PositiveNumber);
  verify->add_flag("--slow", slow, "Include the k = 8 positivity run");

  try {
    app.parse(argc, argv);

    if (poly->parsed()) return cmd_poly(cfg, k);
    if (genpoly->parsed()) return cmd_genpoly(cfg, parse_mu(mu_parts), positive);
    if (coeff->parsed()) {
      if (linear->parsed()) {
        kerov::CycleType mu = parse_mu(coeff_mu);
        check_caps(cfg, mu.weight(), mu.weight());
        mpq_class closed(kerov::linear_coefficient(mu, d, cfg.threads));
        mpq_class solved =
            check ? mpq_class(kerov::positive_kerov(mu, cfg.threads).coefficient(kerov::RMonomial({d})))
                  : mpq_class(0);
        return report_coefficient(cfg, "linear", closed, check, solved);
      }
      if (quadratic->parsed()) {
        kerov::CycleType mu = parse_mu(coeff_mu);
        check_caps(cfg, mu.weight(), mu.weight());
        mpq_class closed = kerov::quadratic_coefficient(mu, qj, ql, cfg.threads);
        mpq_class solved =
            check
                ? mpq_class(kerov::positive_kerov(mu, cfg.threads).coefficient(kerov::RMonomial({qj, ql})))
                : mpq_class(0);
        return report_coefficient(cfg, "quadratic", closed, check, solved);
      }
      if (top->parsed()) {
        check_caps(cfg, top_k, 0);
        kerov::RMonomial mono(mono_parts);
        mpq_class closed = kerov::top_term_coefficient(top_k, mono);
        mpq_class solved =
            check ? mpq_class(kerov::kerov_polynomial(top_k, cfg.threads).coefficient(mono))
                  : mpq_class(0);
        return report_coefficient(cfg, "top", closed, check, solved);
      }
      if (twopart->parsed()) {
        check_caps(cfg, tp_r + tp_s, tp_r + tp_s);
        kerov::RMonomial mono(mono_parts);
        mpq_class closed = kerov::two_part_top_coefficient(tp_r, tp_s, mono);
        mpq_class solved = check
                               ? mpq_class(kerov::positive_kerov(kerov::CycleType::of({tp_r, tp_s}),
                                                                 cfg.threads)
                                               .coefficient(mono))
                               : mpq_class(0);
        return report_coefficient(cfg, "twopart", closed, check, solved);
      }
      if (subdominant->parsed()) {
        kerov::CycleType mu = parse_mu(coeff_mu);
        check_caps(cfg, mu.weight(), mu.weight());
        kerov::RPolynomial expansion = kerov::subdominant_expansion(mu);
        print_r_polynomial(cfg, expansion);
        if (check) {
          auto solved = kerov::generalized_kerov(mu, cfg.threads);
          int top_w = mu.weight() + mu.length();
          bool match = expansion.weight_component(top_w) == solved.weight_component(top_w) &&
                       expansion.weight_component(top_w - 2) == solved.weight_component(top_w - 2);
          std::cout << "match: " << (match ? "yes" : "no") << "\n";
          return match ? 0 : 1;
        }
        return 0;
      }
    }
    if (decompose->parsed()) return cmd_decompose(cfg, tau_text, taubar_text);
    if (oracle->parsed()) {
      if (rows.empty() && pvec.empty())
        throw CLI::ValidationError("oracle", "provide --rows or -p/-q");
      return cmd_oracle(cfg, rows, pvec, qvec, oracle_mu, cumulants_up_to);
    }
    if (verify->parsed()) return cmd_verify(cfg, max_k, max_mu_weight, slow);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
