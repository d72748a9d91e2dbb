#include "lsa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lsa/algebra_file.hpp"
#include "lsa/builtins.hpp"
#include "lsa/classify.hpp"
#include "lsa/errors.hpp"
#include "lsa/flow.hpp"
#include "lsa/graph_extension.hpp"
#include "lsa/koszul.hpp"
#include "lsa/ma_verify.hpp"
#include "lsa/poly_parse.hpp"
#include "lsa/weights.hpp"

namespace lsa {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Reporter {
  std::ostream& out;
  template <class T>
  void operator()(const std::string& key, const T& value) {
    out << key << " = " << value << "\n";
  }
  void flag(const std::string& key, bool v) { (*this)(key, v ? "true" : "false"); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Algebra load(const std::string& path, std::size_t max_dim) { return parse_algebra_file(read_file(path), max_dim); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Rational rational_arg(const std::string& s) {
  try {
    return parse_rational(trim(s));
  } catch (const Error&) {
    throw UsageError("malformed rational '" + s + "'");
  }
}

QVector qvector_arg(const std::string& s) {
  QVector v;
  for (const auto& p : split(s, ',')) v.push_back(rational_arg(p));
  return v;
}

// Rows separated by ';', entries by ','.
QMatrix matrix_arg(const std::string& s) {
  std::vector<QVector> rows;
  for (const auto& r : split(s, ';')) rows.push_back(qvector_arg(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw UsageError("matrix rows of unequal length in '" + s + "'");
  return QMatrix::from_rows(rows, cols);
}

std::vector<double> dvector_arg(const std::string& s) {
  std::vector<double> v;
  for (const auto& p : split(s, ',')) {
    std::size_t used = 0;
    const std::string t = trim(p);
    double x = 0;
    try {
      x = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw UsageError("malformed number '" + p + "'");
    v.push_back(x);
  }
  return v;
}

std::size_t size_arg(const std::string& s, std::size_t max_dim) {
  const std::string t = trim(s);
  if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("expected a dimension, got '" + s + "'");
  const std::size_t n = std::stoul(t);
  if (n == 0) throw UsageError("dimension must be positive");
  if (n > max_dim) throw CapExceeded("dimension " + t + " exceeds the cap " + std::to_string(max_dim));
  return n;
}

std::string indices_string(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i : idx) s += (s.empty() ? "" : " ") + std::to_string(i + 1);
  return s;
}

std::string dims_string(const std::vector<Subspace>& series) {
  std::string s;
  for (const auto& sub : series) s += (s.empty() ? "" : " ") + std::to_string(sub.dim());
  return s;
}

std::string doubles_string(const std::vector<double>& v) {
  std::ostringstream s;
  s << std::setprecision(17) << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << "]";
  return s.str();
}

void print_predicate(Reporter& r, const std::string& key, const Predicate& p) {
  r.flag(key, p.holds);
  if (!p.witness.empty()) r(key + ".witness", p.witness);
  if (!p.indices.empty()) r(key + ".indices", indices_string(p.indices));
  if (!p.vector.empty()) r(key + ".vector", to_string(p.vector));
}

void print_classification(Reporter& r, const ClassificationReport& c) {
  print_predicate(r, "is_lsa", c.is_lsa);
  print_predicate(r, "complete", c.complete);
  if (c.complete_by_power) r.flag("complete.by_power", *c.complete_by_power);
  print_predicate(r, "right_nil", c.right_nil);
  print_predicate(r, "left_nil", c.left_nil);
  print_predicate(r, "right_nilpotent", c.right_nilpotent);
  print_predicate(r, "nilpotent", c.nilpotent);
  print_predicate(r, "lie_solvable", c.lie_solvable);
  print_predicate(r, "lie_nilpotent", c.lie_nilpotent);
  print_predicate(r, "perfect", c.perfect);
  print_predicate(r, "trace_form_nondegenerate", c.trace_form_nondegenerate);
  print_predicate(r, "derived_abelian", c.derived_abelian);
  print_predicate(r, "ker_trR_unimodular", c.ker_trR_unimodular);
  print_predicate(r, "condition_2trL_eq_n1trR", c.condition_2trL_eq_n1trR);
  r("derived_codim", c.derived_codim);
  const Signature& s = c.trace_signature;
  r("trace_signature", std::to_string(s.positive) + " " + std::to_string(s.negative) + " " + std::to_string(s.zero));
  r("series.lie_derived", dims_string(c.series.lie_derived));
  r("series.lie_lower_central", dims_string(c.series.lie_lower_central));
  r("series.rnil", dims_string(c.series.rnil));
  r("series.triv", dims_string(c.series.triv));
  print_predicate(r, "triangularizable", c.triangularizable);
  if (c.triangular.ok) r("triangular_basis", to_string(c.triangular.basis));
  else r("triangular_failure", to_string(c.triangular.reason));
}

void print_idempotent(Reporter& r, const KoszulData& k, const IdempotentReport& ir) {
  r("idempotent.u", to_string(k.u));
  r("idempotent.rank", ir.rank);
  r.flag("idempotent.L_preserves_ker_trR", ir.L_preserves_ker_lambda);
  r.flag("idempotent.R_preserves_ker_trR", ir.R_preserves_ker_lambda);
  r.flag("idempotent.adjoint_identity", ir.adjoint_identity);
  r.flag("idempotent.R_self_adjoint", ir.R_self_adjoint);
  r.flag("idempotent.N_nilpotent", ir.N_nilpotent);
  r("idempotent.N_index", ir.N_index);
  r("idempotent.N_bound", ir.N_bound);
  r("idempotent.fitting_dims", std::to_string(ir.fitting_zero_dim) + " " + std::to_string(ir.fitting_one_dim));
  r.flag("idempotent.fitting_zero_in_ker_trR", ir.fitting_zero_in_ker_lambda);
  r.flag("idempotent.ker_R_subalgebra_with_derivation", ir.ker_R_subalgebra_with_derivation);
  r.flag("idempotent.R_idempotent", ir.R_idempotent);
  r.flag("idempotent.u_left_ideal", ir.u_left_ideal);
  r.flag("idempotent.graph_extension", ir.ker_R_eq_ker_lambda);
  r.flag("idempotent.L_invertible", ir.L_invertible);
}

void print_ma(Reporter& r, const MPoly& p, const MAReport& m) {
  if (m.axis) {
    r("axis", to_string(m.axis->v));
    r("lambda", m.axis->lambda);
  } else {
    r("axis", "NONE");
  }
  r("determinant", to_string(m.determinant));
  if (m.kappa) {
    r("kappa", *m.kappa);
    r("kappa.sign", m.sign_of_kappa);
  } else {
    r("kappa", "NOT_CONSTANT");
  }
  r("convention", m.convention);
  if (m.trace_condition) r.flag("trace_condition_2L_n1R", *m.trace_condition);
  if (m.euler_identity) r.flag("euler_identity", *m.euler_identity);
  if (m.axis && m.axis->lambda == 1) {
    const GraphRestriction g = graph_restrict(p, m.axis->v);
    r("graph.coordinate", g.coordinate + 1);
    r("graph.v_k", g.v_k);
    r("graph.f", to_string(g.f));
    r("graph.H", to_string(g.hessian_det));
  }
}

int cmd_check(Reporter& r, const Algebra& a) {
  r("algebra", a.name());
  r("dim", a.dim());
  const Validation v = validate_lsa(a);
  r.flag("is_lsa", v.ok);
  if (v.ok) return kExitOk;
  const Violation& w = *v.violation;
  r("violation", std::to_string(w.i + 1) + " " + std::to_string(w.j + 1) + " " + std::to_string(w.k + 1));
  r("residual", to_string(w.residual));
  return kExitFailure;
}

int cmd_report(Reporter& r, const Algebra& file, std::size_t max_dim, bool thorough) {
  const Algebra a = validated(file);
  r("algebra", a.name());
  r("dim", a.dim());
  const MPoly p = char_poly_lsa(a, max_dim);
  r("P", to_string(p));
  r("trR", to_string(trace_right(a)));
  r("trL", to_string(trace_left(a)));
  const TraceForm tf = trace_form(a);
  r("tau", to_string(tf.tau));
  print_classification(r, classify(a, {thorough, max_dim}));
  if (tf.nondegenerate) {
    const KoszulData k = principal_idempotent(a);
    const IdempotentReport ir = idempotent_report(a, k);
    print_idempotent(r, k, ir);
    if (ir.ker_R_eq_ker_lambda) {
      const InducedAlgebra ind = induced_algebra(a, k);
      r("induced.basis", to_string(QMatrix::from_columns(ind.basis, a.dim())));
      r("induced.metric", to_string(ind.metric));
      r("induced.derivation", to_string(ind.derivation));
      const WeightDecomposition w = weight_decomposition(ind.derivation, &ind.metric, &ind.base);
      std::string ws;
      std::vector<Rational> alphas;
      for (const auto& [alpha, dim] : w.weights) {
        ws += (ws.empty() ? "" : " ") + alpha.get_str() + ":" + std::to_string(dim);
        alphas.push_back(alpha);
      }
      r("weights", ws.empty() ? "NONE" : ws);
      r("weights.status", w.splits ? "SPLIT" : "NON_SPLITTING");
      r.flag("weights.symmetric", w.symmetric);
      if (w.pairing_ok) r.flag("weights.pairing", *w.pairing_ok);
      if (w.grading_ok) r.flag("weights.grading", *w.grading_ok);
      if (w.splits && is_zero(trace_right_covector(ind.base))) {
        for (const auto& rel : arithmetic_relations(alphas, p)) {
          std::string s;
          for (unsigned e : rel.exponents) s += (s.empty() ? "" : " ") + std::to_string(e);
          r("arithmetic_relation.degree" + std::to_string(rel.degree), s);
        }
      }
    }
  }
  print_ma(r, p, ma_constant(p, &a));
  return kExitOk;
}

Algebra generate(const std::vector<std::string>& args, const std::string& metric, const std::string& j,
                 const std::string& d, const std::string& n, const std::string& alpha, std::size_t max_dim) {
  if (args.empty()) throw UsageError("generate: missing family");
  const std::string& fam = args[0];
  auto arity = [&](std::size_t k) {
    if (args.size() != k + 1) throw UsageError("generate " + fam + ": expected " + std::to_string(k) + " argument(s)");
  };
  if (fam == "cayley" || fam == "fili" || fam == "trivial") {
    arity(1);
    const std::size_t dim = size_arg(args[1], max_dim);
    return fam == "cayley" ? cayley(dim) : fam == "fili" ? fili(dim) : trivial(dim);
  }
  if (fam == "sixdim") {
    arity(0);
    if (max_dim < 6) throw CapExceeded("dimension 6 exceeds the cap " + std::to_string(max_dim));
    return six_dim();
  }
  if (fam == "parab") {
    if (!metric.empty()) {
      arity(0);
      const QMatrix g = matrix_arg(metric);
      if (g.rows() + 1 > max_dim) throw CapExceeded("dimension exceeds the cap " + std::to_string(max_dim));
      return parab(g);
    }
    arity(1);
    const std::size_t dim = size_arg(args[1], max_dim);
    if (dim < 2) throw UsageError("generate parab: dimension must be at least 2");
    return parab_delta(dim);
  }
  if (fam == "negeig") {
    if (args.size() < 2) {
      if (j.empty() || d.empty() || n.empty()) throw UsageError("generate negeig: sigma S | jordan T | degenerate | --J --D --N");
      NegeigParams p{matrix_arg(j), matrix_arg(d), matrix_arg(n), alpha.empty() ? Rational(1) : rational_arg(alpha)};
      if (p.J.rows() + 1 > max_dim) throw CapExceeded("dimension exceeds the cap " + std::to_string(max_dim));
      if (p.alpha == 0) throw UsageError("generate negeig: alpha must be nonzero");
      return negeig(p);
    }
    if (max_dim < 4) throw CapExceeded("dimension exceeds the cap " + std::to_string(max_dim));
    if (args[1] == "sigma") {
      arity(2);
      return negeig(sigma_family(rational_arg(args[2])), "negeig_sigma");
    }
    if (args[1] == "jordan") {
      arity(2);
      return negeig(jordan_family(rational_arg(args[2])), "negeig_jordan");
    }
    if (args[1] == "degenerate") {
      arity(1);
      return negeig(negeig_degenerate(), "negeig_degenerate");
    }
    throw UsageError("generate negeig: unknown preset '" + args[1] + "'");
  }
  throw UsageError("generate: unknown family '" + fam + "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-symmetric algebra toolkit: characteristic polynomials, classification, Monge-Ampere checks",
               "lsa"};
  app.require_subcommand(1);
  std::size_t max_dim = kDefaultMaxDim;
  app.add_option("--max-dim", max_dim, "dimension cap")->check(CLI::PositiveNumber);

  std::string file, poly, metric, derivation, j, d, n, alpha, avec, x0vec;
  double t = 0, tol = kDefaultFlowTolerance;
  bool thorough = false;
  std::vector<std::string> gen_args;

  auto* check = app.add_subcommand("check", "validate left-symmetry");
  auto* classify_cmd = app.add_subcommand("classify", "decide structural properties");
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial det(I + R(x))");
  auto* traceform = app.add_subcommand("traceform", "trace form tr R(x)R(y)");
  auto* idempotent = app.add_subcommand("idempotent", "right principal idempotent");
  auto* report = app.add_subcommand("report", "full pipeline");
  auto* ma = app.add_subcommand("ma-verify", "Monge-Ampere constant of P");
  auto* gext = app.add_subcommand("graph-extend", "graph extension of a base algebra");
  auto* gen = app.add_subcommand("generate", "built-in algebra in file format");
  auto* flow = app.add_subcommand("flow", "orbit flow and character residual");
  for (auto* c : {check, classify_cmd, charpoly, traceform, idempotent, report, gext, flow})
    c->add_option("file", file, "algebra file")->required();
  classify_cmd->add_flag("--thorough", thorough, "also decide completeness by nilpotence of R(x)");
  report->add_flag("--thorough", thorough, "also decide completeness by nilpotence of R(x)");
  ma->add_option("file", file, "algebra file");
  ma->add_option("--poly", poly, "polynomial such as 'x3 - x1^2 - x2^2'");
  gext->add_option("--metric", metric, "h as 'a,b;c,d'")->required();
  gext->add_option("--derivation", derivation, "D as 'a,b;c,d'")->required();
  gen->add_option("args", gen_args, "cayley N | fili N | trivial N | parab N | sixdim | negeig sigma S|jordan T|degenerate")
      ->required();
  gen->add_option("--metric", metric, "parab metric g as 'a,b;c,d'");
  gen->add_option("--J", j, "negeig J");
  gen->add_option("--D", d, "negeig D");
  gen->add_option("--N", n, "negeig N");
  gen->add_option("--alpha", alpha, "negeig alpha");
  flow->add_option("--a", avec, "direction a")->required();
  flow->add_option("--x0", x0vec, "start point")->required();
  flow->add_option("--t", t, "flow time")->required();
  flow->add_option("--tol", tol, "residual tolerance")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Reporter r{out};
  try {
    if (*check) return cmd_check(r, load(file, max_dim));
    if (*classify_cmd) {
      const Algebra a = validated(load(file, max_dim));
      r("algebra", a.name());
      r("dim", a.dim());
      print_classification(r, classify(a, {thorough, max_dim}));
      return kExitOk;
    }
    if (*charpoly) {
      const Algebra a = validated(load(file, max_dim));
      r("P", to_string(char_poly_lsa(a, max_dim)));
      return kExitOk;
    }
    if (*traceform) {
      const Algebra a = validated(load(file, max_dim));
      const TraceForm tf = trace_form(a);
      r("tau", to_string(tf.tau));
      r.flag("nondegenerate", tf.nondegenerate);
      const Signature s = signature(tf.tau);
      r("signature", std::to_string(s.positive) + " " + std::to_string(s.negative) + " " + std::to_string(s.zero));
      return kExitOk;
    }
    if (*idempotent) {
      const Algebra a = validated(load(file, max_dim));
      const KoszulData k = principal_idempotent(a);
      print_idempotent(r, k, idempotent_report(a, k));
      return kExitOk;
    }
    if (*report) return cmd_report(r, load(file, max_dim), max_dim, thorough);
    if (*ma) {
      if (file.empty() == poly.empty()) throw UsageError("ma-verify: give exactly one of FILE or --poly");
      if (!poly.empty()) {
        const MPoly p = parse_poly(poly);
        r("P", to_string(p));
        print_ma(r, p, ma_constant(p));
      } else {
        const Algebra a = validated(load(file, max_dim));
        const MPoly p = char_poly_lsa(a, max_dim);
        r("P", to_string(p));
        print_ma(r, p, ma_constant(p, &a));
      }
      return kExitOk;
    }
    if (*gext) {
      const Algebra base = validated(load(file, max_dim));
      if (base.dim() + 1 > max_dim) throw CapExceeded("extension dimension exceeds the cap " + std::to_string(max_dim));
      const GraphExtension g = graph_extend(base, matrix_arg(metric), matrix_arg(derivation));
      out << serialize_algebra(g.result);
      if (g.sampled_points > 0)
        out << "# product formula checked at " << g.sampled_points << " random points\n";
      else
        out << "# closed-form characteristic polynomial verified\n";
      return kExitOk;
    }
    if (*gen) {
      out << serialize_algebra(validated(generate(gen_args, metric, j, d, n, alpha, max_dim)));
      return kExitOk;
    }
    if (*flow) {
      const Algebra a = validated(load(file, max_dim));
      const std::vector<double> dir = dvector_arg(avec), x0 = dvector_arg(x0vec);
      if (dir.size() != a.dim() || x0.size() != a.dim())
        throw UsageError("flow: --a and --x0 need " + std::to_string(a.dim()) + " entries");
      const MPoly p = char_poly_lsa(a, max_dim);
      const FlowSample s = flow_sample(a, p, dir, x0, t, tol);
      std::ostringstream num;
      num << std::setprecision(17) << s.character_residual;
      r("endpoint", doubles_string(s.endpoint));
      r("character_residual", num.str());
      r.flag("within_tolerance", s.within_tolerance);
      return s.within_tolerance ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lsa
