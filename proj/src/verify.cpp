#include "shiftsym/verify.hpp"

#include "shiftsym/tables.hpp"
#include "shiftsym/harmonic.hpp"
#include "shiftsym/linalg.hpp"
#include "shiftsym/operators.hpp"
#include "shiftsym/qseries.hpp"
#include "shiftsym/quasimodular.hpp"

#include <algorithm>
#include <optional>

namespace shiftsym {

namespace {

// A property returns a counterexample description, or nullopt on success.
using Failure = std::optional<std::string>;

struct Context {
  VerifyOptions options;
  Rng rng;
  int w() const { return options.max_weight; }
  int n() const { return options.order; }
};

int uniform(Rng& rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random element of the extended ring: Q1 allowed, Q2 may carry a half or
// negative exponent.
SSPoly random_tilde(Context& ctx)
{
  SSPoly f = random_element(ctx.rng, std::min(ctx.w(), 8), true, 3);
  if (uniform(ctx.rng, 0, 1)) f += random_extended(ctx.rng, uniform(ctx.rng, 0, 4), uniform(ctx.rng, -3, 3), 2);
  return f;
}

Failure partitions_counts(Context&)
{
  for (int n = 0; n <= 25; ++n) {
    if (count_partitions(n) != static_cast<long>(enumerate_partitions(n).size()))
      return "enumerate_partitions(" + std::to_string(n) + ") disagrees with p(n)";
    const Integer expected = count_partitions(n) - count_partitions(n - 1) - count_partitions(n - 2) + count_partitions(n - 3);
    if (expected != static_cast<long>(enumerate_min_part(n, 3).size()))
      return "parts >= 3 count identity fails at n = " + std::to_string(n);
    if (enumerate_min_part(n, 1) != enumerate_partitions(n)) return "min part 1 differs at n = " + std::to_string(n);
  }
  return std::nullopt;
}

Failure partitions_frobenius(Context&)
{
  for (int n = 0; n <= 15; ++n)
    for (const Partition& lambda : enumerate_partitions(n)) {
      const FrobeniusCoords fc = frobenius(lambda);
      int total = 0;
      for (std::size_t i = 0; i < fc.arms.size(); ++i) total += fc.arms[i] + fc.legs[i] + 1;
      const std::vector<int> c = c_set_doubled(lambda);
      const auto negatives = std::count_if(c.begin(), c.end(), [](int x) { return x < 0; });
      if (total != n || fc.arms.size() != fc.legs.size() || 2 * negatives != static_cast<long>(c.size()))
        return "Frobenius coordinates of " + lambda.to_string();
    }
  return std::nullopt;
}

// Coefficient of z^{k-1} in sum_i (e^{z(lambda_i - i + 1/2)} - e^{z(-i + 1/2)}) + 1/(2 sinh(z/2)).
Rational qk_by_expansion(int k, const Partition& lambda)
{
  Rational s = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    const Rational a = Rational(lambda[i - 1] - i) + Rational(1, 2);
    const Rational b = Rational(-i) + Rational(1, 2);
    Rational pa = 1, pb = 1;
    for (int j = 0; j < k - 1; ++j) {
      pa *= a;
      pb *= b;
    }
    s += pa - pb;
  }
  return beta(k) + s / Rational(factorial(k - 1));
}

Failure ssym_generators(Context&)
{
  for (int n = 0; n <= 12; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      for (int k = 1; k <= 10; ++k)
        if (eval_qk(k, lambda) != qk_by_expansion(k, lambda))
          return "Q" + std::to_string(k) + lambda.to_string();
  return std::nullopt;
}

Failure ssym_ring_laws(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const SSPoly a = random_tilde(ctx), b = random_tilde(ctx), c = random_tilde(ctx);
    if ((a * b) * c != a * (b * c) || a * b != b * a || a * (b + c) != a * b + a * c || (a - a) != SSPoly{})
      return "a = " + format(a) + ", b = " + format(b) + ", c = " + format(c);
  }
  return std::nullopt;
}

Failure ssym_eval_homomorphism(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const SSPoly f = random_element(ctx.rng, 6, true, 3), g = random_element(ctx.rng, 6, true, 3);
    const int n = uniform(ctx.rng, 0, 8);
    for (const Partition& lambda : enumerate_partitions(n))
      if (eval(f * g, lambda) != eval(f, lambda) * eval(g, lambda) || eval(f + g, lambda) != eval(f, lambda) + eval(g, lambda))
        return "f = " + format(f) + ", g = " + format(g) + " at " + lambda.to_string();
  }
  return std::nullopt;
}

Failure ssym_projection(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const SSPoly f = random_tilde(ctx), g = random_tilde(ctx);
    if (pr(pr(f)) != pr(f) || pr(f * g) != pr(f) * pr(g) || pr(f + g) != pr(f) + pr(g))
      return "f = " + format(f) + ", g = " + format(g);
  }
  return std::nullopt;
}

Operator q2_hat()
{
  return Operator::multiply(SSPoly::q(2) - SSPoly::q(1).pow(2) * Rational(1, 2));
}

Operator e_hat()
{
  return Operator::euler() - Operator::multiply(SSPoly::q(1)) * Operator::d() - Operator::scalar(Rational(1, 2));
}

Failure check_identity(Context& ctx, const Operator& lhs, const Operator& rhs)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const SSPoly f = random_tilde(ctx);
    if (lhs(f) != rhs(f)) return lhs.name() + " != " + rhs.name() + " on f = " + format(f);
  }
  return std::nullopt;
}

Failure operators_sl2(Context& ctx)
{
  const Operator x = q2_hat(), y = Operator::laplacian(), h = e_hat();
  if (auto f = check_identity(ctx, commutator(h, x), Rational(2) * x)) return f;
  if (auto f = check_identity(ctx, commutator(h, y), Rational(-2) * y)) return f;
  return check_identity(ctx, commutator(y, x), h);
}

Failure operators_commutator_table(Context& ctx)
{
  const Operator lap = Operator::laplacian(), d = Operator::d(), e = Operator::euler();
  const Operator q1 = Operator::multiply(SSPoly::q(1)), q2 = Operator::multiply(SSPoly::q(2));
  const Operator zero = Operator::zero();
  const std::vector<std::tuple<Operator, Operator, Operator>> table = {
      {lap, d, zero},
      {lap, e, Rational(2) * lap},
      {lap, q1, zero},
      {lap, q2, e - q1 * d - Operator::scalar(Rational(1, 2))},
      {d, e, d},
      {d, q1, Operator::identity()},
      {d, q2, q1},
      {e, q1, q1},
      {e, q2, Rational(2) * q2},
      {q1, q2, zero},
  };
  for (const auto& [a, b, expected] : table)
    if (auto f = check_identity(ctx, commutator(a, b), expected)) return f;
  return std::nullopt;
}

Operator delta_q2_power_rhs(int n)
{
  const SSPoly q1 = SSPoly::q(1);
  const Rational nr(n);
  Operator result = Operator::zero();
  if (n >= 2) result = result + Operator::multiply(q1.pow(2) * SSPoly::q2_power(2 * (n - 2)) * (-nr * (n - 1) / 2));
  result = result - Operator::multiply(q1 * SSPoly::q2_power(2 * (n - 1)) * nr) * Operator::d();
  result = result + Operator::multiply(SSPoly::q2_power(2 * (n - 1)) * nr) *
                        (Operator::euler() + Operator::scalar(nr - Rational(3, 2)));
  return result;
}

Failure operators_delta_q2_power(Context& ctx)
{
  for (int n = 1; n <= 6; ++n)
    if (auto f = check_identity(ctx, commutator(Operator::laplacian(), Operator::multiply(SSPoly::q(2).pow(n))),
                                delta_q2_power_rhs(n)))
      return f;
  return std::nullopt;
}

Failure operators_script_d_commute(Context& ctx)
{
  for (int n = 1; n <= 5; ++n)
    for (int m = n + 1; m <= 5; ++m)
      if (auto f = check_identity(ctx, commutator(Operator::script_d(n), Operator::script_d(m)), Operator::zero()))
        return f;
  return std::nullopt;
}

Failure operators_delta_lambda(Context& ctx)
{
  std::vector<Partition> shapes;
  for (int n = 1; n <= 6; ++n)
    for (const Partition& p : enumerate_partitions(n)) shapes.push_back(p);
  for (int s = 0; s < ctx.options.samples; ++s) {
    const Partition& lambda = shapes[static_cast<std::size_t>(uniform(ctx.rng, 0, static_cast<int>(shapes.size()) - 1))];
    const Partition& mu = shapes[static_cast<std::size_t>(uniform(ctx.rng, 0, static_cast<int>(shapes.size()) - 1))];
    const SSPoly f = random_tilde(ctx);
    const Operator dl = Operator::delta(lambda), dm = Operator::delta(mu);
    if (!commutator(dl, Operator::multiply(SSPoly::q(1)), f).is_zero())
      return "[Delta_" + lambda.to_string() + ", Q1] on " + format(f);
    if (!commutator(dl, dm, f).is_zero())
      return "[Delta_" + lambda.to_string() + ", Delta_" + mu.to_string() + "] on " + format(f);
    if (pr(dl(f)) != pr(dl(pr(f)))) return "pr Delta_" + lambda.to_string() + " pr on " + format(f);
  }
  return std::nullopt;
}

Failure operators_kelvin(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const int w = uniform(ctx.rng, 0, std::min(ctx.w(), 8));
    const SSPoly h = random_harmonic(ctx.rng, w);
    if (!pr(laplacian(kelvin(h))).is_zero()) return "K(h) not harmonic for h = " + format(h);
    const SSPoly f = random_extended(ctx.rng, uniform(ctx.rng, 0, 6), uniform(ctx.rng, -4, 4));
    if (kelvin(kelvin(f)) != f) return "K(K(f)) != f for f = " + format(f);
  }
  return std::nullopt;
}

Failure operators_weight_drop(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const int w = uniform(ctx.rng, 0, ctx.w());
    const SSPoly f = random_homogeneous(ctx.rng, w, true) * SSPoly::q2_power(uniform(ctx.rng, -2, 2));
    const int n = uniform(ctx.rng, 0, 5);
    const SSPoly g = script_d_n(n, f);
    if (!g.is_zero() && g.homogeneous_weight() != f.homogeneous_weight() - n)
      return "D_" + std::to_string(n) + " on " + format(f);
  }
  return std::nullopt;
}

Failure harmonic_direct_sum(Context& ctx)
{
  for (int n = 0; n <= ctx.w(); ++n)
    for (const Monomial& m : lambda_star_basis(n)) {
      const Decomposition d = decompose(SSPoly(m));
      if (d.reconstruct() != SSPoly(m)) return "reconstruction of " + format(m);
      for (const SSPoly& h : d.components)
        if (!is_harmonic(h)) return "non-harmonic component for " + format(m);
    }
  for (int s = 0; s < ctx.options.samples; ++s) {
    const int n = 2 * uniform(ctx.rng, 2, ctx.w() / 2);
    const SSPoly h = random_harmonic(ctx.rng, n);
    const SSPoly g = random_homogeneous(ctx.rng, n - 2, false);
    const Decomposition d = decompose(h + SSPoly::q(2) * g);
    if (d.components.front() != h || Decomposition{{d.components.begin() + 1, d.components.end()}}.reconstruct() != g)
      return "uniqueness for h = " + format(h) + ", g = " + format(g);
  }
  return std::nullopt;
}

Failure harmonic_q2_multiples(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const SSPoly g = random_element(ctx.rng, ctx.w(), false);
    if (!g.is_zero() && is_harmonic(SSPoly::q(2) * g)) return "Q2 * g harmonic for g = " + format(g);
  }
  return std::nullopt;
}

Failure harmonic_basis_rank(Context& ctx)
{
  for (int n = 0; n <= ctx.w(); ++n) {
    const HarmonicBasis basis = harmonic_basis(n);
    if (dim_h(n) != static_cast<long>(basis.elements.size())) return "basis size at weight " + std::to_string(n);
    const std::vector<Monomial> coords = lambda_star_basis(n);
    RationalMatrix rows;
    for (const auto& [lambda, h] : basis.elements) rows.push_back(coordinates(h, coords));
    if (rank(rows) != static_cast<int>(rows.size())) return "dependent basis at weight " + std::to_string(n);
  }
  return std::nullopt;
}

Failure harmonic_basis_identities(Context& ctx)
{
  for (int n = 0; n <= ctx.w(); ++n)
    for (const auto& [lambda, h] : harmonic_basis(n).elements) {
      if (!is_harmonic(h)) return "h" + lambda.to_string() + " not harmonic";
      if (!leading_term_check(lambda)) return "leading term of h" + lambda.to_string();
      if (n >= 1 && !unusual_identity_check(h, n)) return "unusual identity for h" + lambda.to_string();
    }
  return std::nullopt;
}

Failure harmonic_depth(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const int w = uniform(ctx.rng, 0, std::min(ctx.w(), 8));
    const SSPoly h = random_harmonic(ctx.rng, w);
    if (h.is_zero()) continue;
    const int r = uniform(ctx.rng, 0, 4);
    if (depth_ss(SSPoly::q(2).pow(r) * h) != r) return "depth of Q2^" + std::to_string(r) + " * " + format(h);
  }
  return std::nullopt;
}

Failure qseries_euler(Context& ctx)
{
  QSeries product = QSeries::constant(1, ctx.n());
  for (int n = 1; n <= ctx.n(); ++n) {
    QSeries factor = QSeries::constant(1, ctx.n());
    factor[n] = -1;
    product = product * factor;
  }
  if (!(partition_gf(ctx.n()) * product == QSeries::constant(1, ctx.n()))) return "partition_gf * prod(1 - q^n) != 1";
  return std::nullopt;
}

Failure qseries_linearity(Context& ctx)
{
  for (int s = 0; s < std::max(1, ctx.options.samples / 2); ++s) {
    const SSPoly f = random_element(ctx.rng, std::min(ctx.w(), 8), true, 3);
    const SSPoly g = random_element(ctx.rng, std::min(ctx.w(), 8), true, 3);
    const Rational a = random_rational(ctx.rng), b = random_rational(ctx.rng);
    if (!(q_bracket(f * a + g * b, ctx.n()) == q_bracket(f, ctx.n()) * a + q_bracket(g, ctx.n()) * b))
      return "f = " + format(f) + ", g = " + format(g);
    if (!q_bracket(SSPoly::q(1) * f, ctx.n()).is_zero()) return "<Q1 f> != 0 for f = " + format(f);
  }
  return std::nullopt;
}

QSeries d_hat_series(const QSeries& s)
{
  return d_series(s) - eisenstein(2, s.order()) * s * Rational(1, 24);
}

Failure qseries_q2_multiplication(Context& ctx)
{
  for (int s = 0; s < std::max(1, ctx.options.samples / 2); ++s) {
    const SSPoly f = random_element(ctx.rng, std::min(ctx.w(), 8), false, 3);
    if (!(q_bracket(SSPoly::q(2) * f, ctx.n()) == d_hat_series(q_bracket(f, ctx.n()))))
      return "<Q2 f> != Dhat <f> for f = " + format(f);
  }
  return std::nullopt;
}

Failure quasimodular_sl2(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const QMForm m = random_qmform(ctx.rng, 2 * uniform(ctx.rng, 0, ctx.w() / 2));
    const QMForm wd = w_hat(d_hat(m)) - d_hat(w_hat(m));
    const QMForm wf = w_hat(frak_d(m)) - frak_d(w_hat(m));
    const QMForm fd = frak_d(d_hat(m)) - d_hat(frak_d(m));
    if (wd != d_hat(m) * Rational(2) || wf != frak_d(m) * Rational(-2) || fd != w_hat(m))
      return "m = " + m.to_string();
  }
  return std::nullopt;
}

Failure quasimodular_depth(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const QMForm m = random_qmform(ctx.rng, 2 * uniform(ctx.rng, 0, ctx.w() / 2));
    if (depth(d_hat(m)) != depth(m) + 1) return "depth(Dhat m) for m = " + m.to_string();
  }
  return std::nullopt;
}

Failure quasimodular_recognize(Context& ctx)
{
  for (int s = 0; s < ctx.options.samples; ++s) {
    const int k = 2 * uniform(ctx.rng, 0, std::min(ctx.w(), 12) / 2);
    const QMForm m = random_qmform(ctx.rng, k);
    if (recognize(expand(m, ctx.n()), k, ctx.n()) != m) return "recognize(expand(m)) for m = " + m.to_string();
  }
  return std::nullopt;
}

Failure quasimodular_equivariance(Context& ctx)
{
  const int n = ctx.n();
  for (int s = 0; s < std::max(1, ctx.options.samples / 2); ++s) {
    const int w = uniform(ctx.rng, 0, std::min(ctx.w(), 8));
    const SSPoly f = random_homogeneous(ctx.rng, w, true, 3);
    const QMForm form = recognize(q_bracket(f, n), w, n);
    if (!(q_bracket(q2_hat()(f), n) == expand(d_hat(form), n))) return "<Q2hat f> for f = " + format(f);
    if (!(q_bracket(laplacian(f), n) == expand(frak_d(form), n))) return "<Delta f> for f = " + format(f);
    if (!(q_bracket(e_hat()(f), n) == expand(w_hat(form), n))) return "<Ehat f> for f = " + format(f);
  }
  return std::nullopt;
}

Failure quasimodular_depth_bound(Context& ctx)
{
  const int n = ctx.n();
  for (int s = 0; s < std::max(1, ctx.options.samples / 2); ++s) {
    const int k = 2 * uniform(ctx.rng, 1, std::min(ctx.w(), 10) / 2);
    const int p = uniform(ctx.rng, 0, k / 2);
    SSPoly f;
    for (int r = 0; r <= p; ++r) f += SSPoly::q(2).pow(r) * random_harmonic(ctx.rng, k - 2 * r);
    if (f.is_zero()) continue;
    if (depth(recognize(q_bracket(f, n), k, n)) > p) return "depth bound for f = " + format(f);
  }
  return std::nullopt;
}

Failure quasimodular_modularity(Context& ctx)
{
  const int n = ctx.n();
  for (int s = 0; s < std::max(1, ctx.options.samples / 2); ++s) {
    const int k = 2 * uniform(ctx.rng, 1, std::min(ctx.w(), 10) / 2);
    SSPoly f = uniform(ctx.rng, 0, 1) ? random_homogeneous(ctx.rng, k, false) : random_harmonic(ctx.rng, k);
    if (f.is_zero()) f = random_homogeneous(ctx.rng, k, false);
    try {
      is_modular_bracket(f, n);
    } catch (const CrossCheckError& e) {
      return std::string(e.what());
    }
  }
  return std::nullopt;
}

Failure table_rows(Context& ctx, bool brackets)
{
  for (const auto rows : {even_table_rows(), odd_table_rows()})
    for (const TableRow& row : rows) {
      const Partition lambda = Partition::parse(row.lambda);
      if (lambda.size() > ctx.w()) continue;
      const SSPoly h = harmonic_basis_element(lambda);
      if (!brackets) {
        if (h != parse(row.h)) return "h" + lambda.to_string() + " = " + format(h);
        continue;
      }
      const QMForm form = recognize(q_bracket(h, ctx.n()), lambda.size(), ctx.n());
      if (form != QMForm::parse(row.bracket)) return "<h" + lambda.to_string() + "> = " + form.to_string();
    }
  return std::nullopt;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const SuiteResult&)>& on_result)
{
  using Suite = std::pair<const char*, std::function<Failure(Context&)>>;
  const std::vector<Suite> suites = {
      {"partitions: enumeration and counting identities", partitions_counts},
      {"partitions: Frobenius coordinates and C_lambda", partitions_frobenius},
      {"ssym: Q_k against the w_lambda expansion", ssym_generators},
      {"ssym: ring laws", ssym_ring_laws},
      {"ssym: evaluation is a ring homomorphism", ssym_eval_homomorphism},
      {"ssym: pr is an idempotent homomorphism", ssym_projection},
      {"operators: sl2-triple (Q2hat, Delta, Ehat)", operators_sl2},
      {"operators: commutator table", operators_commutator_table},
      {"operators: [Delta, Q2^n] for n <= 6", operators_delta_q2_power},
      {"operators: script D_n commute", operators_script_d_commute},
      {"operators: Delta_lambda commutes with Q1 and Delta_mu", operators_delta_lambda},
      {"operators: Kelvin transform", operators_kelvin},
      {"operators: script D_n lowers weight by n", operators_weight_drop},
      {"harmonic: direct sum Lambda*_n = H_n + Q2 Lambda*_{n-2}", harmonic_direct_sum},
      {"harmonic: nonzero Q2-multiples are not harmonic", harmonic_q2_multiples},
      {"harmonic: basis size and rank", harmonic_basis_rank},
      {"harmonic: basis elements (harmonic, leading term, unusual identity)", harmonic_basis_identities},
      {"harmonic: depth of Q2^r h", harmonic_depth},
      {"qseries: Euler product", qseries_euler},
      {"qseries: bracket linearity and <Q1 f> = 0", qseries_linearity},
      {"qseries: <Q2 f> = Dhat <f>", qseries_q2_multiplication},
      {"quasimodular: sl2-triple (Dhat, d, What)", quasimodular_sl2},
      {"quasimodular: Dhat raises depth by one", quasimodular_depth},
      {"quasimodular: recognize inverts expand", quasimodular_recognize},
      {"quasimodular: bracket is sl2-equivariant", quasimodular_equivariance},
      {"quasimodular: depth bound from harmonic depth", quasimodular_depth_bound},
      {"quasimodular: modularity criterion cross-check", quasimodular_modularity},
      {"tables: harmonic basis rows", [](Context& c) { return table_rows(c, false); }},
      {"tables: q-bracket rows", [](Context& c) { return table_rows(c, true); }},
  };

  std::vector<SuiteResult> results;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    // Each suite gets its own stream so results do not depend on suite order.
    Context ctx{options, Rng(options.seed + i)};
    SuiteResult result{suites[i].first, false, {}};
    try {
      const Failure failure = suites[i].second(ctx);
      result.passed = !failure.has_value();
      if (failure) result.detail = *failure;
    } catch (const std::exception& e) {
      result.detail = e.what();
    }
    if (on_result) on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace shiftsym
