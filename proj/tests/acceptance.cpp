// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lsa/algebra_file.hpp"
#include "lsa/builtins.hpp"
#include "lsa/classify.hpp"
#include "lsa/cli.hpp"
#include "lsa/errors.hpp"
#include "lsa/flow.hpp"
#include "lsa/graph_extension.hpp"
#include "lsa/koszul.hpp"
#include "lsa/ma_verify.hpp"
#include "lsa/poly_parse.hpp"
#include "lsa/weights.hpp"
#include "oracles.hpp"

using namespace lsa;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_command(args, out, err);
  return out.str();
}

std::string report_value(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  const std::string prefix = key + " = ";
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  return "";
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lsa_acceptance_" + name + ".lsa");
}

QVector graded_weights(std::size_t n) {
  QVector w;
  for (std::size_t i = 1; i < n; ++i) w.push_back(make_rational(static_cast<long>(i), static_cast<long>(n)));
  return w;
}

Outcome ac1() {
  Outcome o;
  const char* expected[] = {"-8", "-81", "1024", "15625", "-279936"};
  std::vector<std::string> got;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto path = scratch("cayley" + std::to_string(n));
    std::ofstream(path) << serialize_algebra(cayley(n));
    int code = 0;
    const std::string kappa = report_value(run_cli({"report", path.string()}, code), "kappa");
    std::filesystem::remove(path);
    got.push_back(kappa);
    o.expect(code == kExitOk, "report exit code " + std::to_string(code));
    o.expect(kappa == expected[n - 2], "cayley" + std::to_string(n) + " kappa = " + kappa);
  }
  if (o.pass) o.detail = "kappa(2..6) = " + got[0] + " " + got[1] + " " + got[2] + " " + got[3] + " " + got[4];
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto a = ma_constant(parse_poly("x3 - x1^2 - x2^2")).kappa;
  const auto b = ma_constant(parse_poly("x1^3/3 - x1*x2 + x3")).kappa;
  o.expect(a && *a == 4, "x3 - x1^2 - x2^2");
  o.expect(b && *b == -1, "x1^3/3 - x1*x2 + x3");
  if (o.pass) o.detail = "kappa = 4 and -1";
  return o;
}

Outcome ac3() {
  Outcome o;
  const Algebra a = six_dim();
  const MPoly p = char_poly_lsa(a);
  o.expect(p == parse_poly("6*x1*x2*x3 + 6*x2^2*x3 - 6*x1*x4 - 6*x2*x5 - 3*x3^2 + x6 + 1", 6), "sextic differs");
  const MAReport r = ma_constant(p, &a);
  o.expect(r.axis.has_value(), "no translational axis");
  if (!o.pass) return o;
  const GraphRestriction g = graph_restrict(p, r.axis->v);
  o.expect(g.hessian_det.is_constant(), "H(f) not constant");
  if (!o.pass) return o;
  const Rational h = g.hessian_det.constant_term();
  o.expect(abs(h) == 7776, "|H(f)| = " + to_string(abs(h)));
  if (o.pass) o.detail = "P matches; H(1 - P|x6=0) = " + to_string(h) + ", kappa = " + to_string(*r.kappa);
  return o;
}

Outcome ac4() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const MPoly part = eastwood_ezhov_partition_sum(n), rec = eastwood_ezhov_recursion(n);
    const MPoly from_p = make_rational(1, static_cast<long>(n)) * (MPoly::constant(n, 1) - char_poly_lsa(cayley(n)));
    o.expect(part == rec && rec == from_p, "n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 1..6";
  return o;
}

Outcome ac5() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    const Algebra a = cayley(n);
    const KoszulData k = principal_idempotent(a);
    o.expect(k.u == scale(make_rational(1, static_cast<long>(n)), unit_vector(n, n - 1)), "r(cayley" + std::to_string(n) + ")");
    const InducedAlgebra ind = induced_algebra(a, k);
    const WeightDecomposition w = weight_decomposition(ind.derivation, &ind.metric, &ind.base);
    QVector got;
    for (const auto& [alpha, dim] : w.weights) got.insert(got.end(), dim, alpha);
    o.expect(got == graded_weights(n), "weights of cayley" + std::to_string(n));
  }
  // cayley(1): B = 0, no weights
  o.expect(principal_idempotent(cayley(1)).u == QVector{1}, "r(cayley1)");
  const Algebra s = six_dim();
  const QVector r6 = principal_idempotent(s).u;
  o.expect(r6 == unit_vector(6, 5) && dot(trace_right_covector(s), r6) == 1, "r(six_dim)");
  for (const Rational& sigma : {Rational(2), make_rational(1, 3), Rational(0), make_rational(-3, 5)})
    o.expect(principal_idempotent(negeig(sigma_family(sigma))).u == unit_vector(4, 3), "r(negeig sigma)");
  if (o.pass) o.detail = "cayley 1..6, six_dim, negeig sigma in {2, 1/3, 0, -3/5}";
  return o;
}

bool all_right_nilpotent(const Algebra& a, oracle::Rng& rng) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!is_nilpotent(a.right(unit_vector(a.dim(), i)))) return false;
  for (int t = 0; t < 3; ++t)
    if (!is_nilpotent(a.right(rng.vector(a.dim())))) return false;
  return true;
}

Outcome ac6() {
  Outcome o;
  oracle::Rng rng(61);
  std::size_t count = 0;
  for (const Algebra& a : builtin_corpus()) {
    ++count;
    const ClassificationReport r = classify(a, {.thorough = true});
    const bool p_one = char_poly_lsa(a) == MPoly::constant(a.dim(), 1);
    const bool tr_zero = is_zero(trace_right_covector(a));
    const bool r_nil = all_right_nilpotent(a, rng);
    o.expect(p_one == tr_zero && tr_zero == r_nil && r_nil == r.complete.holds, a.name() + ": completeness");
    o.expect(r.complete_by_power.value_or(!r.complete.holds) == r.complete.holds, a.name() + ": R(X)^n test");
    o.expect(r.nilpotent.holds == (r.right_nilpotent.holds && r.lie_nilpotent.holds), a.name() + ": nilpotence");
    o.expect(!r.right_nilpotent.holds || r.triangularizable.holds, a.name() + ": triangularizable");
    bool koszul = true;
    try {
      principal_idempotent(a);
    } catch (const CodedError&) {
      koszul = false;
    }
    o.expect(!koszul || !r.right_nilpotent.holds, a.name() + ": koszul form on a right nilpotent algebra");
  }
  if (o.pass) o.detail = std::to_string(count) + " corpus algebras";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t checked = 0;
  for (const Algebra& a : builtin_corpus()) {
    if (a.dim() > 5) continue;
    const MPoly p = char_poly_lsa(a);
    for (unsigned k = 1; k <= 3; ++k) o.expect(oracle::log_jet_mismatches(a, p, k) == 0, a.name() + " k=" + std::to_string(k));
    ++checked;
  }
  oracle::Rng rng(71);
  const Algebra f = fili(4);
  for (int trial = 0; trial < 50; ++trial) {
    const QMatrix d = oracle::fili_derivation(f, rng.vector(4));
    Algebra ext = oracle::derivation_extension(f, d, "fili4_ext" + std::to_string(trial));
    QMatrix b = rng.matrix(5, 5);
    while (det(b) == 0) b = rng.matrix(5, 5);
    const Validation v = validate_lsa(transport(ext, b));
    o.expect(v.ok, "perturbation " + std::to_string(trial) + " is not left-symmetric");
    if (!v.ok) continue;
    const MPoly p = char_poly_lsa(v.algebra);
    for (unsigned k = 1; k <= 3; ++k)
      o.expect(oracle::log_jet_mismatches(v.algebra, p, k) == 0, "perturbation " + std::to_string(trial));
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " algebras, k = 1..3";
  return o;
}

Outcome ac8() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n) {
    const Algebra a = cayley(n);
    const InducedAlgebra ind = induced_algebra(a, principal_idempotent(a));
    const GraphExtension g = graph_extend(ind.base, ind.metric, ind.derivation);
    // Psi(x + aD) = x + a e_n / n
    std::vector<QVector> cols = ind.basis;
    cols.push_back(scale(make_rational(1, static_cast<long>(n)), unit_vector(n, n - 1)));
    o.expect(transport(a, QMatrix::from_columns(cols, n)).same_structure(g.result), "cayley" + std::to_string(n));
  }
  const GraphExtension p = graph_extend(trivial(1), QMatrix::identity(1), QMatrix(1, 1, {make_rational(1, 2)}));
  o.expect(p.result.same_structure(parab_delta(2)), "parab(delta, 2)");
  if (o.pass) o.detail = "cayley 2..5 and parab(delta, 2)";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::mt19937_64 rng(91);
  std::size_t points = 0, closed = 0;
  for (const Rational& sigma : {Rational(2), make_rational(1, 3), Rational(0), make_rational(-3, 5)}) {
    const NegeigParams p = sigma_family(sigma);
    const QMatrix h = p.alpha * p.J, d = p.D + p.N;
    const GraphExtension g = graph_extend(trivial(3), h, d);
    const std::size_t got = check_product_formula(trivial(3), h, d, g.result, 25, rng);
    o.expect(got == 25, "sigma = " + to_string(sigma));
    points += got;
  }
  for (const Algebra& a : builtin_corpus()) {
    if (!trace_form(a).nondegenerate) continue;
    const KoszulData k = principal_idempotent(a);
    if (!idempotent_report(a, k).ker_R_eq_ker_lambda) continue;
    const InducedAlgebra ind = induced_algebra(a, k);
    if (!classify(ind.base).complete.holds) continue;
    const GraphExtension g = graph_extend(ind.base, ind.metric, ind.derivation);
    o.expect(char_poly_lsa(g.result) == complete_extension_char_poly(ind.base, ind.metric, ind.derivation),
             a.name() + ": closed form");
    ++closed;
  }
  if (o.pass)
    o.detail = std::to_string(points) + " random points on the sigma family, " + std::to_string(closed) +
               " complete bases symbolically";
  return o;
}

Outcome ac10() {
  Outcome o;
  oracle::Rng rng(101);
  double worst = 0;
  for (const Algebra& a : {cayley(2), cayley(3), cayley(4), parab_delta(3)}) {
    const MPoly p = char_poly_lsa(a);
    for (double t : {0.1, 0.5, 1.0}) {
      std::vector<double> dir(a.dim()), x0(a.dim());
      for (auto& v : dir) v = rng.uniform(-1, 1);
      for (auto& v : x0) v = rng.uniform(-1, 1);
      const FlowSample s = flow_sample(a, p, dir, x0, t);
      worst = std::max(worst, s.character_residual);
      o.expect(s.character_residual < 1e-9, a.name());
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.3e", worst);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ac11() {
  Outcome o;
  std::size_t n = 0;
  for (const Algebra& a : builtin_corpus()) {
    const std::string text = serialize_algebra(a);
    const Algebra back = parse_algebra_file(text);
    o.expect(back == a && serialize_algebra(back) == text, a.name() + ": round trip");
    ++n;
  }
  const std::pair<const char*, const char*> malformed[] = {
      {"lsa x\ndim 4\nprod 1 1 : 1*e5\n", "INDEX_OUT_OF_RANGE"},
      {"lsa x\ndim 2\nprod 1 1 : 1*e2\nprod 1 1 : 1*e1\n", "DUPLICATE_PRODUCT"},
      {"lsa x\ndim 2\nprod 1 1 : 1/0*e2\n", "ZERO_DENOMINATOR"},
      {"lsa x\ndim 2\nprod 1 1 1*e2\n", "SYNTAX"},
      {"dim 2\n", "SYNTAX"},
  };
  for (const auto& [text, code] : malformed) {
    std::string got = "accepted";
    try {
      parse_algebra_file(text);
    } catch (const ParseError& e) {
      got = e.code();
    }
    o.expect(got == code, std::string("expected ") + code + ", got " + got);
  }
  o.expect(validate_lsa(parse_algebra_file("lsa h\ndim 3\n")).ok, "header-only file");
  if (o.pass) o.detail = std::to_string(n) + " algebras round-tripped, 5 malformed inputs classified";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 Cayley kappa law", ac1},
      {"AC2 hand Monge-Ampere examples", ac2},
      {"AC3 six-dimensional example", ac3},
      {"AC4 Eastwood-Ezhov consistency", ac4},
      {"AC5 principal idempotents and weights", ac5},
      {"AC6 classification truth table", ac6},
      {"AC7 log-jet identities", ac7},
      {"AC8 graph-extension round trip", ac8},
      {"AC9 characteristic polynomial product formula", ac9},
      {"AC10 flow character residuals", ac10},
      {"AC11 parser round trip and malformed inputs", ac11},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << " (" << ms << " ms)\n";
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
