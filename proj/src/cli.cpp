#include "waring/cli.hpp"

#include "waring/apolarity.hpp"
#include "waring/certificates.hpp"
#include "waring/parse.hpp"
#include "waring/serialize.hpp"
#include "waring/type_c.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace waring::cli {

namespace {

struct Options {
  bool json = false;
  std::size_t nvars = 0;

  std::string linear, quadric, form, file, change_file, hyperplane, colon, plus;
  std::optional<std::size_t> normal_form;
  std::optional<unsigned> catalecticant_degree;
  bool weighted = false;
  bool segre_example = false;
};

bool verbose() {
  const char* v = std::getenv("WARING_VERBOSE");
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

class Context {
 public:
  Context(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  void log(const std::string& line) const {
    if (verbose()) err_ << "waring: " << line << '\n';
  }

  /// Ring size: --nvars if given, otherwise the largest x/d index seen.
  std::size_t ring_size(std::initializer_list<std::string_view> forms, std::initializer_list<std::string_view> ops) const {
    if (opt_.nvars) return opt_.nvars;
    std::size_t n = 0;
    for (auto f : forms) n = std::max(n, infer_variable_count(f, "x"));
    for (auto o : ops) n = std::max(n, infer_variable_count(o, "d"));
    if (n == 0) n = 1;
    return n;
  }

  const Options& opt() const { return opt_; }
  std::ostream& out() const { return out_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void print_decomposition(std::ostream& out, const WaringDecomposition& dec, const Variables& vars) {
  out << "terms: " << dec.size() << '\n';
  for (const auto& t : dec.terms()) out << "  " << to_string(t.coefficient) << " * (" << t.form.to_string(vars) << ")^" << dec.degree() << '\n';
  out << dec.identity_string(vars) << '\n';
}

void print_certificate(std::ostream& out, const AvoidanceCertificate& cert, const std::optional<Variables>& ops = std::nullopt) {
  auto name = [&](const DiffOperator& d) { return ops ? d.polynomial().to_string(*ops) : d.to_string(); };
  const std::string ell = name(cert.hyperplane);
  out << "hyperplane: " << ell << '\n';
  out << "HF(T/(F^perp + <" << ell << ">)) = " << cert.hilbert.to_string() << "  sum " << cert.hf_sum << '\n';
  if (cert.colon) {
    const std::string g = name(*cert.colon);
    out << "colon: " << g << '\n';
    out << "HF(T/((F^perp : " << g << ") + <" << ell << ">)) = " << cert.refined_hilbert->to_string() << "  sum "
        << *cert.refined_sum << '\n';
  }
  if (cert.removed_points) out << "removed points: " << *cert.removed_points << '\n';
  out << "bound: deg X >= " << cert.bound() << '\n';
  out << "condition: " << cert.condition << '\n';
}

int emit_decomposition(const Context& ctx, const Polynomial& f, const WaringDecomposition& dec) {
  const VerificationResult check = verify_decomposition(f, dec);
  if (!check.ok()) {
    ctx.out() << "internal check failed; residual " << check.residual.to_string() << '\n';
    return VerificationFailed;
  }
  if (ctx.opt().json) {
    ctx.out() << to_json(dec).dump(2) << '\n';
  } else {
    const Variables vars = Variables::indexed("x", f.nvars());
    ctx.out() << "F = " << f.to_string(vars) << '\n';
    print_decomposition(ctx.out(), dec, vars);
    ctx.out() << "verified: expansion exact, forms pairwise independent\n";
  }
  return Success;
}

ReducibleCubic read_cubic(const Context& ctx) {
  const std::size_t n = ctx.ring_size({ctx.opt().linear, ctx.opt().quadric}, {});
  const Polynomial l = parse_polynomial(ctx.opt().linear, n);
  const Polynomial q = parse_polynomial(ctx.opt().quadric, n);
  return ReducibleCubic(LinearForm::from_polynomial(l), q);
}

int cmd_analyze(const Context& ctx) {
  const ReducibleCubic cubic = read_cubic(ctx);
  ctx.log("classifying");
  const RankReport report = rank_report(cubic);
  if (ctx.opt().json) {
    ctx.out() << to_json(report).dump(2) << '\n';
    return Success;
  }
  const Variables vars = Variables::indexed("x", cubic.nvars());
  std::ostream& out = ctx.out();
  out << "F = (" << cubic.linear().to_string(vars) << ") * (" << cubic.quadric().to_string(vars) << ")\n";
  out << "type: " << to_string(report.classification.kind) << '\n';
  out << "n: " << report.n << '\n';
  out << "essential variables: " << report.classification.essential_variables << '\n';
  out << "quadric rank: " << report.classification.quadric_rank << '\n';
  out << "lower bound: " << report.lower.value << " (" << to_string(report.lower.kind) << ")\n";
  out << "upper bound: " << report.upper.value << " (" << to_string(report.upper.kind) << ")\n";
  out << "catalecticant bound: " << report.catalecticant_bound << '\n';
  out << "generic rank of cubics: " << report.generic_rank << '\n';
  if (report.witness) {
    out << "witness:\n";
    print_decomposition(out, *report.witness, vars);
  }
  for (const auto& c : report.certificates) {
    out << "conditional certificate:\n";
    print_certificate(out, c);
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  return Success;
}

int cmd_decompose(const Context& ctx) {
  const Options& opt = ctx.opt();
  if (opt.normal_form) {
    if (!opt.linear.empty()) throw std::invalid_argument("--normal-form takes no L Q arguments");
    ctx.log("decomposing the normal form for n = " + std::to_string(*opt.normal_form));
    return emit_decomposition(ctx, type_c_normal_form(*opt.normal_form), decompose_type_c_normal(*opt.normal_form));
  }
  if (opt.linear.empty() || opt.quadric.empty()) throw std::invalid_argument("decompose needs L and Q, or --normal-form n");
  const ReducibleCubic cubic = read_cubic(ctx);
  const Polynomial f = cubic.product();
  const CubicType type = classify(cubic);
  ctx.log("type " + to_string(type.kind));
  std::optional<LinearChange> change;
  if (!opt.change_file.empty()) change = LinearChange(matrix_from_json(read_json_file(opt.change_file)));
  if (type.kind == CubicKind::TypeC)
    return emit_decomposition(ctx, f, decompose_type_c(cubic, change, TypeCOptions{opt.weighted}));
  if (cubic.nvars() == 3) {
    if (const auto factors = factor_quadric(cubic.quadric())) {
      return emit_decomposition(ctx, f, decompose_linear_product(cubic.linear(), factors->first, factors->second));
    }
  }
  const RankReport report = rank_report(cubic);
  if (report.witness) return emit_decomposition(ctx, f, *report.witness);
  throw std::invalid_argument("no explicit decomposition is constructed for type " + to_string(type.kind));
}

int cmd_verify(const Context& ctx) {
  const WaringDecomposition dec = decomposition_from_json(read_json_file(ctx.opt().file));
  if (ctx.ring_size({ctx.opt().form}, {}) > dec.nvars()) throw AmbientMismatch("F has more variables than the decomposition");
  const Polynomial f = parse_polynomial(ctx.opt().form, dec.nvars());
  const VerificationResult result = verify_decomposition(f, dec);
  if (ctx.opt().json) {
    ctx.out() << to_json(result).dump(2) << '\n';
  } else {
    ctx.out() << (result.ok() ? "PASS" : "FAIL") << '\n';
    ctx.out() << "expansion matches: " << (result.expansion_matches ? "yes" : "no") << '\n';
    ctx.out() << "pairwise independent: " << (result.pairwise_independent ? "yes" : "no") << '\n';
    ctx.out() << "residual: " << result.residual.to_string() << '\n';
  }
  return result.ok() ? Success : VerificationFailed;
}

int cmd_certify(const Context& ctx) {
  const Options& opt = ctx.opt();
  if (opt.segre_example) {
    const CaseCertificate cert = segre_case_certificate();
    if (opt.json) {
      ctx.out() << to_json(cert).dump(2) << '\n';
    } else {
      ctx.out() << "F = " << example_type_c_form().to_string(example_form_variables()) << '\n';
      for (const auto& c : cert.claims)
        ctx.out() << (c.passed ? "[PASS] (" : "[FAIL] (") << c.id << ") " << c.statement << "\n       " << c.detail << '\n';
      if (cert.refinement) {
        ctx.out() << "refinement:\n";
        print_certificate(ctx.out(), *cert.refinement, example_operator_variables());
      }
      ctx.out() << "conclusion: " << cert.conclusion() << '\n';
    }
    return cert.all_passed() ? Success : VerificationFailed;
  }
  if (opt.form.empty() || opt.hyperplane.empty()) throw std::invalid_argument("certify needs F and --hyperplane, or --segre-example");
  const std::size_t n = ctx.ring_size({opt.form}, {opt.hyperplane, opt.colon});
  const Polynomial f = parse_polynomial(opt.form, n);
  const DiffOperator ell = parse_operator(opt.hyperplane, n);
  const AvoidanceCertificate cert = opt.colon.empty() ? avoidance_lower_bound(f, ell)
                                                      : colon_refinement(f, ell, parse_operator(opt.colon, n));
  if (opt.json)
    ctx.out() << to_json(cert).dump(2) << '\n';
  else
    print_certificate(ctx.out(), cert);
  return Success;
}

int cmd_hilbert(const Context& ctx) {
  const Options& opt = ctx.opt();
  const std::size_t n = ctx.ring_size({opt.form}, {opt.plus, opt.colon});
  const Polynomial f = parse_polynomial(opt.form, n);
  const HomogeneousIdeal perp = apolar_ideal(f);
  std::vector<std::pair<std::string, HilbertFunction>> rows;
  rows.emplace_back("T/F^perp", hilbert_function(perp));
  std::optional<HomogeneousIdeal> plus;
  if (!opt.plus.empty()) {
    plus = HomogeneousIdeal::principal(parse_operator(opt.plus, n));
    rows.emplace_back("T/(F^perp + <" + plus->generators().front().to_string() + ">)", hilbert_function(ideal_sum(perp, *plus)));
  }
  if (!opt.colon.empty()) {
    const DiffOperator g = parse_operator(opt.colon, n);
    const HomogeneousIdeal colon = ideal_colon(perp, g);
    const std::string name = "F^perp : " + g.to_string();
    rows.emplace_back("T/(" + name + ")", hilbert_function(colon));
    if (plus)
      rows.emplace_back("T/((" + name + ") + <" + plus->generators().front().to_string() + ">)",
                        hilbert_function(ideal_sum(colon, *plus)));
  }
  if (opt.json) {
    Json j = Json::array();
    for (const auto& [name, hf] : rows) {
      Json row = to_json(hf);
      row["quotient"] = name;
      j.push_back(row);
    }
    ctx.out() << j.dump(2) << '\n';
  } else {
    for (const auto& [name, hf] : rows) ctx.out() << "HF(" << name << ") = " << hf.to_string() << "  sum " << hf.sum() << '\n';
  }
  return Success;
}

int cmd_apolar(const Context& ctx) {
  const Options& opt = ctx.opt();
  const std::size_t n = ctx.ring_size({opt.form}, {});
  const Polynomial f = parse_polynomial(opt.form, n);
  if (opt.catalecticant_degree) {
    const CatalecticantMatrix cat = catalecticant(f, *opt.catalecticant_degree);
    if (opt.json) {
      ctx.out() << to_json(cat).dump(2) << '\n';
    } else {
      ctx.out() << "Cat_" << cat.source_degree << ": " << cat.entries.rows() << " x " << cat.entries.cols() << ", rank "
                << cat.rank() << '\n';
      for (std::size_t r = 0; r < cat.entries.rows(); ++r) {
        ctx.out() << ' ';
        for (std::size_t c = 0; c < cat.entries.cols(); ++c) ctx.out() << ' ' << to_string(cat.entries(r, c));
        ctx.out() << '\n';
      }
    }
    return Success;
  }
  const HomogeneousIdeal perp = apolar_ideal(f);
  if (opt.json) {
    Json j = to_json(perp);
    j["hilbert"] = to_json(hilbert_function(perp));
    ctx.out() << j.dump(2) << '\n';
  } else {
    ctx.out() << "F^perp = " << perp.to_string() << '\n';
    ctx.out() << "generators: " << perp.generators().size() << '\n';
    for (const auto& g : perp.generators()) ctx.out() << "  degree " << g.degree() << ": " << g.to_string() << '\n';
    ctx.out() << "HF(T/F^perp) = " << hilbert_function(perp).to_string() << '\n';
  }
  return Success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact apolarity, Waring decompositions and rank certificates for reducible cubics", "waring"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--nvars", opt.nvars, "Number of variables (default: largest index seen plus one)")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Classify L*Q and report rank bounds");
  analyze->add_option("L", opt.linear, "Linear factor")->required();
  analyze->add_option("Q", opt.quadric, "Quadratic factor")->required();

  auto* decompose = app.add_subcommand("decompose", "Verified Waring decomposition of L*Q");
  decompose->add_option("L", opt.linear, "Linear factor");
  decompose->add_option("Q", opt.quadric, "Quadratic factor");
  decompose->add_option("--normal-form", opt.normal_form, "Decompose the type-C normal form in n+1 variables")
      ->check(CLI::Range(2, 64));
  decompose->add_option("--change", opt.change_file, "JSON matrix A with (L*Q)(A y) equal to the normal form");
  decompose->add_flag("--weighted", opt.weighted, "Allow the weighted construction when no rational normal form exists");

  auto* verify = app.add_subcommand("verify", "Check a decomposition file against F");
  verify->add_option("F", opt.form, "Form")->required();
  verify->add_option("file", opt.file, "Decomposition JSON")->required();

  auto* certify = app.add_subcommand("certify", "Avoidance certificate for F");
  certify->add_option("F", opt.form, "Form");
  certify->add_option("--hyperplane", opt.hyperplane, "Linear operator ell, e.g. d2");
  certify->add_option("--colon", opt.colon, "Operator g for the colon refinement");
  certify->add_flag("--segre-example", opt.segre_example, "Run the scripted three-variable case analysis");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert functions of T/F^perp and related quotients");
  hilbert->add_option("F", opt.form, "Form")->required();
  hilbert->add_option("--plus", opt.plus, "Add the operator ell to F^perp");
  hilbert->add_option("--colon", opt.colon, "Replace F^perp by (F^perp : g)");

  auto* apolar = app.add_subcommand("apolar", "Minimal generators of F^perp");
  apolar->add_option("F", opt.form, "Form")->required();
  apolar->add_option("--catalecticant", opt.catalecticant_degree, "Print the catalecticant matrix of this degree instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }

  const Context ctx(opt, out, err);
  try {
    if (analyze->parsed()) return cmd_analyze(ctx);
    if (decompose->parsed()) return cmd_decompose(ctx);
    if (verify->parsed()) return cmd_verify(ctx);
    if (certify->parsed()) return cmd_certify(ctx);
    if (hilbert->parsed()) return cmd_hilbert(ctx);
    if (apolar->parsed()) return cmd_apolar(ctx);
  } catch (const NeedsFieldExtension& e) {
    err << "needs field extension: " << e.what() << '\n';
    return FieldExtension;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return InputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }
  return InputError;
}

}  // namespace waring::cli
