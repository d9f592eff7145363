#include "shiftsym/cli.hpp"

#include "shiftsym/tables.hpp"
#include "shiftsym/harmonic.hpp"
#include "shiftsym/quasimodular.hpp"
#include "shiftsym/render.hpp"
#include "shiftsym/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace shiftsym {

namespace {

enum class Format { text, latex, json };

struct Options {
  int order = kDefaultOrder;
  std::optional<int> weight;
  int min_part = 3;
  int max_weight = 10;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::text;
  int n = 0;
  std::string expr;
  std::string partition;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& arg, std::istream& in)
{
  if (!arg.empty() && arg != "-") return arg;
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  if (text.empty()) throw UsageError("no expression given on the command line or stdin");
  return text;
}

nlohmann::json lambda_json(const Partition& lambda)
{
  return nlohmann::json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

// Bracket of a homogeneous element, recognized at its own weight.
QMForm bracket_form(const SSPoly& h, int weight, int order)
{
  return recognize(q_bracket(h, order), weight, order);
}

void print_rows(const std::vector<std::pair<Partition, SSPoly>>& rows, const Options& opt, bool with_brackets,
                std::ostream& out)
{
  switch (opt.format) {
    case Format::text:
      for (const auto& [lambda, h] : rows) {
        out << lambda.to_string() << ": " << (with_brackets ? format_factored(h) : format(h));
        if (with_brackets) out << "  |  " << bracket_form(h, lambda.size(), opt.order).to_string();
        out << '\n';
      }
      break;
    case Format::latex:
      out << (with_brackets ? "\\begin{tabular}{lll}\n" : "\\begin{tabular}{ll}\n");
      out << "$\\lambda$ & $h_\\lambda$" << (with_brackets ? " & $\\langle h_\\lambda\\rangle_q$" : "") << " \\\\\n\\hline\n";
      for (const auto& [lambda, h] : rows) {
        out << "$" << lambda.to_string() << "$ & $" << latex(h) << "$";
        if (with_brackets) out << " & $" << latex(bracket_form(h, lambda.size(), opt.order)) << "$";
        out << " \\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
    case Format::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& [lambda, h] : rows)
        j.push_back({{"lambda", lambda_json(lambda)},
                     {"h", to_json(h)},
                     {"q_bracket", to_json(bracket_form(h, lambda.size(), opt.order))}});
      out << j.dump(2) << '\n';
      break;
    }
  }
}

int cmd_basis(const Options& opt, std::ostream& out)
{
  if (opt.n < 0) throw UsageError("weight must be non-negative");
  std::vector<std::pair<Partition, SSPoly>> rows;
  for (const auto& [lambda, h] : harmonic_basis(opt.n, opt.min_part).elements) rows.emplace_back(lambda, h);
  print_rows(rows, opt, false, out);
  return 0;
}

int cmd_tables(const Options& opt, std::ostream& out)
{
  for (const auto& [title, table] : {std::pair{"even", even_table_rows()}, std::pair{"odd", odd_table_rows()}}) {
    std::vector<std::pair<Partition, SSPoly>> rows;
    for (const TableRow& row : table) {
      const Partition lambda = Partition::parse(row.lambda);
      rows.emplace_back(lambda, harmonic_basis_element(lambda));
    }
    if (opt.format == Format::text) out << "# " << title << " weights\n";
    if (opt.format == Format::latex) out << "% " << title << " weights\n";
    print_rows(rows, opt, true, out);
  }
  return 0;
}

int cmd_decompose(const Options& opt, std::istream& in, std::ostream& out)
{
  const SSPoly f = parse(read_input(opt.expr, in));
  Decomposition d = decompose(f);
  // slots above the depth are zero; keep h0 even then
  d.components.resize(static_cast<std::size_t>(d.depth()) + 1);
  switch (opt.format) {
    case Format::text:
      for (std::size_t r = 0; r < d.components.size(); ++r)
        out << "h" << r << " = " << format(d.components[r]) << (is_harmonic(d.components[r]) ? "  [harmonic]" : "  [NOT harmonic]")
            << '\n';
      out << "depth = " << d.depth() << '\n';
      break;
    case Format::latex:
      for (std::size_t r = 0; r < d.components.size(); ++r)
        out << "h_{" << r << "} &= " << latex(d.components[r]) << " \\\\\n";
      out << "\\operatorname{depth} &= " << d.depth() << '\n';
      break;
    case Format::json: {
      nlohmann::json comps = nlohmann::json::array();
      for (std::size_t r = 0; r < d.components.size(); ++r)
        comps.push_back({{"r", r}, {"h", to_json(d.components[r])}, {"harmonic", is_harmonic(d.components[r])}});
      out << nlohmann::json{{"components", comps}, {"depth", d.depth()}}.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

int cmd_qbracket(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
{
  const SSPoly f = parse(read_input(opt.expr, in));
  if (!f.is_polynomial()) throw UsageError("the q-bracket needs non-negative integer exponents");
  const QSeries s = q_bracket(f, opt.order);
  std::optional<int> weight = opt.weight;
  if (!weight && f.is_zero()) weight = 0;
  if (!weight && f.is_homogeneous()) weight = f.homogeneous_weight();
  std::optional<QMForm> form;
  if (weight) form = recognize(s, *weight, opt.order);
  else err << "note: input is not homogeneous; pass --weight to recognize the series\n";
  switch (opt.format) {
    case Format::text:
      out << s.to_string() << '\n';
      if (form) out << form->to_string() << '\n';
      break;
    case Format::latex:
      if (form) out << latex(*form) << '\n';
      else out << s.to_string() << '\n';
      break;
    case Format::json: {
      nlohmann::json series = nlohmann::json::array();
      for (const Rational& c : s.coefficients()) series.push_back(to_string(c));
      nlohmann::json j{{"order", s.order()}, {"series", series}};
      if (form) j["q_bracket"] = to_json(*form);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

int cmd_recognize(const Options& opt, std::istream& in, std::ostream& out)
{
  if (!opt.weight) throw UsageError("recognize needs --weight");
  const QSeries s = QSeries::parse(read_input(opt.expr, in));
  const QMForm form = recognize(s, *opt.weight, s.order());
  switch (opt.format) {
    case Format::text: out << form.to_string() << '\n'; break;
    case Format::latex: out << latex(form) << '\n'; break;
    case Format::json: out << to_json(form).dump(2) << '\n'; break;
  }
  return 0;
}

int cmd_eval(const Options& opt, std::ostream& out)
{
  const SSPoly f = parse(opt.expr);
  const Partition lambda = Partition::parse(opt.partition);
  const Rational v = eval(f, lambda);
  if (opt.format == Format::latex) out << latex(v) << '\n';
  else if (opt.format == Format::json) out << nlohmann::json(to_string(v)).dump() << '\n';
  else out << to_string(v) << '\n';
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
  VerifyOptions vo;
  vo.max_weight = opt.max_weight;
  vo.order = opt.order;
  vo.seed = opt.seed;
  bool all = true;
  run_verification(vo, [&](const SuiteResult& r) {
    all = all && r.passed;
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.passed) out << "\n      counterexample: " << r.detail;
    out << '\n' << std::flush;
  });
  out << (all ? "all suites passed" : "some suites FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact arithmetic for shifted symmetric functions, harmonic bases and q-brackets", "shiftsym"};
  app.require_subcommand(1);
  Options opt;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"latex", Format::latex}, {"json", Format::json}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "text, latex or json")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("-N,--order", opt.order, "truncation order of q-series")->check(CLI::NonNegativeNumber);
  };

  auto* basis = app.add_subcommand("basis", "harmonic basis h_lambda of a given weight");
  basis->add_option("n", opt.n, "weight")->required()->check(CLI::NonNegativeNumber);
  basis->add_option("--min-part", opt.min_part, "smallest allowed part")->check(CLI::PositiveNumber);
  add_format(basis);
  add_order(basis);

  auto* decomp = app.add_subcommand("decompose", "harmonic decomposition f = sum Q2^r h_r");
  decomp->add_option("expr", opt.expr, "expression (stdin if omitted or -)");
  add_format(decomp);

  auto* qbr = app.add_subcommand("qbracket", "q-bracket and its quasimodular form");
  qbr->add_option("expr", opt.expr, "expression (stdin if omitted or -)");
  qbr->add_option("--weight", opt.weight, "weight used for recognition");
  add_order(qbr);
  add_format(qbr);

  auto* rec = app.add_subcommand("recognize", "identify a q-series as a polynomial in P, Q, R");
  rec->add_option("series", opt.expr, "series ending in O(q^N) (stdin if omitted or -)");
  rec->add_option("--weight", opt.weight, "weight")->required();
  add_format(rec);

  auto* ev = app.add_subcommand("eval", "evaluate an element at a partition");
  ev->add_option("expr", opt.expr, "expression")->required();
  ev->add_option("partition", opt.partition, "partition, e.g. (3,1)")->required();
  add_format(ev);

  auto* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("--max-weight", opt.max_weight, "largest weight exercised")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", opt.seed, "random seed");
  add_order(ver);

  auto* tab = app.add_subcommand("tables", "even and odd tables of h_lambda with their q-brackets");
  add_format(tab);
  add_order(tab);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (basis->parsed()) return cmd_basis(opt, out);
    if (decomp->parsed()) return cmd_decompose(opt, in, out);
    if (qbr->parsed()) return cmd_qbracket(opt, in, out, err);
    if (rec->parsed()) return cmd_recognize(opt, in, out);
    if (ev->parsed()) return cmd_eval(opt, out);
    if (ver->parsed()) return cmd_verify(opt, out);
    if (tab->parsed()) return cmd_tables(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const RecognitionError& e) {
    err << "recognition failed: " << e.what() << '\n';
    return 1;
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace shiftsym
