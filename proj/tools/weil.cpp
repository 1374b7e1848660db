#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weil/cochain.hpp"
#include "weil/homology.hpp"
#include "weil/io.hpp"
#include "weil/poisson.hpp"
#include "weil/verify.hpp"

namespace {

using namespace weil;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string algebra_path;
  std::string structure_path;
  std::string cochain_path;
  std::string complex = "base";
  unsigned degree = 2;
  std::size_t pmin = 0;
  std::optional<std::size_t> pmax;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;
  std::string golden_path;
  std::size_t nvars = 0;
  std::size_t max_dimension = 20000;
  std::vector<std::string> at;
  std::vector<std::string> functions;
  std::string suite = "all";
  std::string sign_variant = "standard";
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty())
    std::cout << text;
  else
    write_text_file(cfg.out_path, text);
}

std::string format_or(const RunConfig& cfg, const char* fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

Json with_seed(Json j, const RunConfig& cfg) {
  j["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
  return j;
}

AlgebraPtr load_algebra(const RunConfig& cfg) {
  if (cfg.algebra_path.empty()) throw ParseError("--algebra FILE is required");
  return algebra_from_json(read_json_file(cfg.algebra_path));
}

PoissonStructure load_structure(const RunConfig& cfg,
                                PoissonStructure::Jacobi mode = PoissonStructure::Jacobi::check) {
  if (cfg.structure_path.empty()) throw ParseError("--structure FILE is required");
  return structure_from_json(read_json_file(cfg.structure_path), mode);
}

SignConvention sign_of(const RunConfig& cfg) {
  if (cfg.sign_variant == "standard") return SignConvention::standard;
  if (cfg.sign_variant == "printed") return SignConvention::printed;
  throw ParseError("unknown sign variant \"" + cfg.sign_variant + "\"");
}

std::size_t nvars_for(const RunConfig& cfg, std::size_t fallback) {
  if (!cfg.structure_path.empty()) return load_structure(cfg, PoissonStructure::Jacobi::waive).nvars();
  return cfg.nvars ? cfg.nvars : fallback;
}

int cmd_algebra(const RunConfig& cfg) {
  const Json spec = read_json_file(cfg.algebra_path);
  try {
    const AlgebraPtr a = algebra_from_json(spec);
    if (format_or(cfg, "json") == "text") {
      std::string basis;
      for (const auto& l : a->labels()) basis += (basis.empty() ? "" : ", ") + l;
      emit(cfg, a->name() + ": dim " + std::to_string(a->dim()) + ", height " + std::to_string(a->height()) +
                    ", basis {" + basis + "}\n");
    } else {
      emit(cfg, dump(with_seed(algebra_info(*a), cfg)));
    }
    return kOk;
  } catch (const ValidationError& e) {
    Json j{{"valid", false}, {"reason", e.what()}, {"witness", e.witness()}};
    if (format_or(cfg, "json") == "text")
      emit(cfg, std::string("invalid: ") + e.what() + " (witness " + e.witness() + ")\n");
    else
      emit(cfg, dump(with_seed(j, cfg)));
    return kMathFailure;
  }
}

int cmd_eval(const RunConfig& cfg) {
  const AlgebraPtr a = load_algebra(cfg);
  if (cfg.functions.empty()) throw ParseError("eval needs a function");
  const std::size_t n = cfg.at.size();
  std::vector<WeilElement> coords;
  for (const auto& t : cfg.at) coords.push_back(WeilElement::parse(a, t));
  const APoint xi(a, coords);
  std::vector<std::string> values;
  for (const auto& f : cfg.functions) values.push_back(eval_A(parse_apoly(f, n, a), xi).to_string());
  if (format_or(cfg, "text") == "json") {
    emit(cfg, dump(with_seed(Json{{"algebra", a->name()}, {"point", cfg.at}, {"values", values}}, cfg)));
  } else {
    std::string out;
    for (const auto& v : values) out += v + "\n";
    emit(cfg, out);
  }
  return kOk;
}

int cmd_bracket(const RunConfig& cfg) {
  const PoissonStructure pi = load_structure(cfg);
  if (cfg.functions.size() != 2) throw ParseError("bracket needs exactly two functions");
  const std::size_t n = pi.nvars();
  std::string result;
  if (cfg.algebra_path.empty()) {
    result = to_string(bracket(pi, parse_poly(cfg.functions[0], n), parse_poly(cfg.functions[1], n)));
  } else {
    const AlgebraPtr a = load_algebra(cfg);
    result = to_string(bracket_A(pi, parse_apoly(cfg.functions[0], n, a), parse_apoly(cfg.functions[1], n, a)));
  }
  if (format_or(cfg, "text") == "json")
    emit(cfg, dump(with_seed(Json{{"structure", pi.name()}, {"bracket", result}}, cfg)));
  else
    emit(cfg, result + "\n");
  return kOk;
}

int cmd_jacobi(const RunConfig& cfg) {
  const PoissonStructure pi = load_structure(cfg, PoissonStructure::Jacobi::waive);
  const JacobiResult res = jacobi_check(pi);
  Json j{{"structure", pi.name()}, {"n", pi.nvars()}, {"homogeneity", to_string(pi.homogeneity())},
         {"jacobi", res.ok}};
  if (!res.ok) {
    j["indices"] = res.indices;
    j["residual"] = res.residual ? to_string(*res.residual) : "";
  }
  if (format_or(cfg, "json") == "text") {
    if (res.ok)
      emit(cfg, pi.name() + ": Jacobi identity holds\n");
    else
      emit(cfg, pi.name() + ": Jacobi identity fails at (" + std::to_string(res.indices[0]) + "," +
                    std::to_string(res.indices[1]) + "," + std::to_string(res.indices[2]) +
                    "), residual " + j["residual"].get<std::string>() + "\n");
  } else {
    emit(cfg, dump(with_seed(j, cfg)));
  }
  return res.ok ? kOk : kMathFailure;
}

int cmd_prolong(const RunConfig& cfg) {
  const AlgebraPtr a = load_algebra(cfg);
  if (!cfg.cochain_path.empty()) {
    const std::size_t n = nvars_for(cfg, 0);
    if (n == 0) throw ParseError("prolonging a cochain needs --structure or --nvars");
    const ACochain lifted = prolong_cochain(base_cochain_from_json(read_json_file(cfg.cochain_path), n), a);
    emit(cfg, format_or(cfg, "json") == "text" ? to_string(lifted) + "\n" : dump(cochain_to_json(lifted)));
    return kOk;
  }
  if (cfg.functions.empty()) throw ParseError("prolong needs a function or --cochain FILE");
  const std::size_t n = nvars_for(cfg, cfg.at.empty() ? 3 : cfg.at.size());
  std::vector<Poly> h;
  for (const auto& f : cfg.functions) h.push_back(parse_poly(f, n));
  std::vector<std::string> lifted;
  for (const auto& f : h) lifted.push_back(to_string(prolong_function(f, a)));
  std::vector<std::string> image;
  if (!cfg.at.empty()) {
    if (cfg.at.size() != n) throw MismatchError("--at gives " + std::to_string(cfg.at.size()) + " coordinates for " +
                                                std::to_string(n) + " variables");
    std::vector<WeilElement> coords;
    for (const auto& t : cfg.at) coords.push_back(WeilElement::parse(a, t));
    for (const auto& c : prolong_map(h, APoint(a, coords)).coords) image.push_back(c.to_string());
  }
  if (format_or(cfg, "text") == "json") {
    Json j{{"algebra", a->name()}, {"prolonged", lifted}};
    if (!image.empty()) j["image"] = image;
    emit(cfg, dump(with_seed(j, cfg)));
  } else {
    std::string out;
    for (const auto& s : lifted) out += s + "\n";
    for (const auto& s : image) out += "at point: " + s + "\n";
    emit(cfg, out);
  }
  return kOk;
}

int cmd_diff(const RunConfig& cfg, bool complex_given) {
  const PoissonStructure pi = load_structure(cfg);
  if (cfg.cochain_path.empty()) throw ParseError("--cochain FILE is required");
  const Json file = read_json_file(cfg.cochain_path);
  const std::size_t n = pi.nvars();
  const ComplexKind kind = complex_given ? parse_complex_kind(cfg.complex) : cochain_kind(file);
  const SignConvention sc = sign_of(cfg);
  const bool text = format_or(cfg, "json") == "text";
  if (kind == ComplexKind::base) {
    const BaseCochain d = d_base(pi, base_cochain_from_json(file, n), sc);
    emit(cfg, text ? to_string(d) + "\n" : dump(cochain_to_json(d)));
    return kOk;
  }
  const AlgebraPtr a = load_algebra(cfg);
  ACochain omega = a_cochain_from_json(file, n, a);
  if (kind == ComplexKind::weil && omega.kind() != ComplexKind::weil) omega = as_weil(omega);
  const ACochain d = kind == ComplexKind::weil ? d_tilde_A(pi, omega, sc) : d_tilde(pi, omega, sc);
  emit(cfg, text ? to_string(d) + "\n" : dump(cochain_to_json(d)));
  return kOk;
}

int cmd_cohomology(const RunConfig& cfg) {
  const PoissonStructure pi = load_structure(cfg);
  const ComplexKind kind = parse_complex_kind(cfg.complex);
  const AlgebraPtr a = kind == ComplexKind::base ? WeilAlgebra::real() : load_algebra(cfg);
  EngineOptions opts;
  opts.max_dimension = cfg.max_dimension;
  opts.shuffle_seed = cfg.seed;
  opts.sign = sign_of(cfg);
  const std::size_t pmax = std::min(cfg.pmax.value_or(pi.nvars()), pi.nvars());
  if (cfg.pmin > pmax) throw ParseError("--pmin exceeds --pmax");
  const BettiReport rep = betti(kind, pi, a, cfg.pmin, pmax, cfg.degree, opts);
  const std::string text = format_or(cfg, "json") == "text" ? report_to_text(rep) : dump(report_to_json(rep, cfg.seed));
  int code = rep.quotient_certified ? kOk : kMathFailure;
  if (!cfg.golden_path.empty()) {
    const GoldenResult g = compare_golden(text, cfg.golden_path);
    if (!g.equal) {
      std::cerr << "golden mismatch at line " << g.line << "\n  expected: " << g.expected
                << "\n  actual:   " << g.actual << "\n";
      code = kMathFailure;
    }
  }
  emit(cfg, text);
  if (!rep.quotient_certified) std::cerr << "note: " << rep.note << "\n";
  return code;
}

int cmd_verify(const RunConfig& cfg) {
  const std::uint64_t seed = cfg.seed.value_or(1);
  const SuiteReport rep = run_suite(cfg.suite, seed, sign_of(cfg));
  if (format_or(cfg, "text") == "json") {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"witness", c.witness},
                        {"detail", c.detail}});
    emit(cfg, dump(Json{{"suite", rep.suite}, {"seed", rep.seed}, {"passed", rep.passed()}, {"checks", checks}}));
  } else {
    std::string out;
    for (const auto& c : rep.checks) {
      out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.cases) + " cases)";
      if (!c.passed) out += "\n  witness: " + c.witness;
      out += "\n";
    }
    out += "suite " + rep.suite + ", seed " + std::to_string(seed) + ": " + (rep.passed() ? "pass" : "FAIL") + "\n";
    emit(cfg, out);
  }
  return rep.passed() ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for Weil algebras, prolonged Poisson structures and their cohomology", "weil"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "weil 0.1.0");
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out_path, "Write the output to FILE instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed, recorded in the report");
  };
  auto add_algebra = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--algebra,--weil", cfg.algebra_path, "Weil algebra spec file");
    if (required) opt->required();
  };
  auto add_structure = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--structure", cfg.structure_path, "Poisson structure spec file");
    if (required) opt->required();
  };
  auto add_sign_hook = [&](CLI::App* sub) {
    sub->add_option("--sign-variant", cfg.sign_variant)->group("");
  };

  auto* algebra = app.add_subcommand("algebra", "Validate an algebra spec and report dim, basis and height");
  add_algebra(algebra, true);
  add_format(algebra);

  auto* eval = app.add_subcommand("eval", "Evaluate f^A at an A-point");
  add_algebra(eval, true);
  eval->add_option("function", cfg.functions, "Polynomial(s) in x1..xn")->required();
  eval->add_option("--at", cfg.at, "Point coordinates as algebra elements, one per variable")->required();
  add_format(eval);

  auto* br = app.add_subcommand("bracket", "Poisson bracket {f,g}, or {f,g}_A with --algebra");
  add_structure(br, true);
  add_algebra(br, false);
  br->add_option("functions", cfg.functions, "f and g")->required()->expected(2);
  add_format(br);

  auto* jac = app.add_subcommand("jacobi", "Check the Jacobi identity of a structure");
  add_structure(jac, true);
  add_format(jac);

  auto* pro = app.add_subcommand("prolong", "Prolong functions, a map, or a cochain to the Weil bundle");
  add_algebra(pro, true);
  add_structure(pro, false);
  pro->add_option("functions", cfg.functions, "Polynomial component(s)");
  pro->add_option("--cochain", cfg.cochain_path, "Base cochain file to lift");
  pro->add_option("--at", cfg.at, "Also evaluate the prolonged map at this A-point");
  pro->add_option("--nvars", cfg.nvars, "Number of base coordinates");
  add_format(pro);

  auto* diff = app.add_subcommand("diff", "Apply d, d~ or d~_A to a cochain file");
  add_structure(diff, true);
  add_algebra(diff, false);
  diff->add_option("--cochain", cfg.cochain_path, "Cochain file")->required();
  auto* diff_complex = diff->add_option("--complex", cfg.complex, "Override the complex named in the file")
                           ->check(CLI::IsMember({"base", "mixed", "weil"}));
  add_sign_hook(diff);
  add_format(diff);

  auto* coh = app.add_subcommand("cohomology", "Truncated Poisson cohomology table");
  add_structure(coh, true);
  add_algebra(coh, false);
  coh->add_option("--complex", cfg.complex, "Complex")->check(CLI::IsMember({"base", "mixed", "weil"}));
  coh->add_option("--degree", cfg.degree, "Coefficient degree bound D");
  coh->add_option("--pmin", cfg.pmin, "Lowest cochain degree");
  coh->add_option("--pmax", cfg.pmax, "Highest cochain degree (default n)");
  coh->add_option("--golden", cfg.golden_path, "Compare the output byte for byte with FILE");
  coh->add_option("--max-dim", cfg.max_dimension, "Refuse bases larger than this");
  add_sign_hook(coh);
  add_format(coh);

  auto* ver = app.add_subcommand("verify", "Run a randomized verification suite");
  ver->add_option("--suite", cfg.suite, "weil, prolong, poisson, complexes, homology or all");
  add_sign_hook(ver);
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*algebra) return cmd_algebra(cfg);
    if (*eval) return cmd_eval(cfg);
    if (*br) return cmd_bracket(cfg);
    if (*jac) return cmd_jacobi(cfg);
    if (*pro) return cmd_prolong(cfg);
    if (*diff) return cmd_diff(cfg, diff_complex->count() > 0);
    if (*coh) return cmd_cohomology(cfg);
    if (*ver) return cmd_verify(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) std::cerr << " (witness: " << e.witness() << ")";
    std::cerr << "\n";
    return kMathFailure;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const MismatchError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  }
  return kUsage;
}
