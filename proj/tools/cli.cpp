#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "refinemask/error.hpp"
#include "refinemask/refinement.hpp"
#include "refinemask/text.hpp"

namespace refinemask::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct Arguments {
  std::string mask;
  std::string other_mask;
  std::string poly;
  std::string nodes;
  std::string max_iter = "200";
  std::string tol = "1/1099511627776";  // 2^-40
  std::string p0;
  std::string t_min = "0";
  std::string t_max = "3";
  std::string samples = "301";
  std::string out_path;
};

std::size_t parse_count(const std::string& text, const char* what) {
  const auto values = parse_integer_list(text);
  if (values.size() != 1 || values[0] < 0) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(values[0]);
}

int cmd_poly_from_mask(const Arguments& a, std::ostream& out) {
  out << format_polynomial(poly_from_mask(parse_mask(a.mask))) << '\n';
  return kOk;
}

int cmd_mask_from_poly(const Arguments& a, std::ostream& out) {
  const Polynomial p = parse_polynomial(a.poly);
  if (a.nodes.empty()) {
    out << format_mask(mask_from_poly(p)) << '\n';
  } else {
    out << format_mask(mask_from_poly_at_nodes(p, parse_integer_list(a.nodes))) << '\n';
  }
  return kOk;
}

int cmd_verify(const Arguments& a, std::ostream& out) {
  const Mask m = parse_mask(a.mask);
  const Polynomial p = parse_polynomial(a.poly);
  const Polynomial refined = refine_apply(m, p);
  if (refined == p) {
    out << "OK\n";
    return kOk;
  }
  out << "NOT REFINED\n"
      << "residual: " << format_polynomial(refined - p) << '\n';
  return kDomainFailure;
}

int cmd_equiv(const Arguments& a, std::ostream& out) {
  const Mask lhs = parse_mask(a.mask);
  const Mask rhs = parse_mask(a.other_mask);
  if (auto witness = equivalence_witness(lhs, rhs)) {
    out << "equivalent\n"
        << "witness: " << format_mask(*witness) << '\n';
    return kOk;
  }
  out << "not equivalent\n";
  return kDomainFailure;
}

int cmd_reduce(const Arguments& a, std::ostream& out) {
  const Mask m = parse_mask(a.mask);
  out << format_mask(reduce_mod_difference(m, degree_from_sum(m)).remainder) << '\n';
  return kOk;
}

int cmd_cascade(const Arguments& a, std::ostream& out) {
  const Mask m = parse_mask(a.mask);
  const std::size_t max_iter = parse_count(a.max_iter, "--max-iter");
  const Rational tol = Rational::parse(a.tol);
  const CascadeReport report = a.p0.empty() ? cascade(m, max_iter, tol)
                                            : cascade(m, parse_polynomial(a.p0), max_iter, tol);
  out << "iterations: " << report.iterations << '\n'
      << "converged: " << (report.converged ? "true" : "false") << '\n'
      << "final_delta: " << report.final_delta << '\n'
      << "result: " << format_polynomial(report.result) << '\n';
  return report.converged ? kOk : kDomainFailure;
}

std::string format_sample(const Rational& value) { return fmt::format("{:.12g}", value.to_double()); }

void write_csv(const Mask& m, const Polynomial& p, const Rational& t_min, const Rational& t_max,
               std::size_t samples, std::ostream& csv) {
  csv << "t,total";
  for (std::size_t k = 0; k < m.size(); ++k) csv << ",part_" << (m.offset() + static_cast<std::int64_t>(k));
  csv << '\n';

  const Rational step = samples > 1 ? (t_max - t_min) / Rational(static_cast<long>(samples - 1)) : Rational(0);
  for (std::size_t row = 0; row < samples; ++row) {
    const Rational t = t_min + step * Rational(static_cast<long>(row));
    csv << format_sample(t) << ',' << format_sample(eval(p, t));
    for (std::size_t k = 0; k < m.size(); ++k) {
      const Rational j(static_cast<long>(m.offset() + static_cast<std::int64_t>(k)));
      csv << ',' << format_sample(Rational(2) * m.coeffs()[k] * eval(p, Rational(2) * t - j));
    }
    csv << '\n';
  }
}

int cmd_render_csv(const Arguments& a, std::ostream& out) {
  const Mask m = parse_mask(a.mask);
  const Rational t_min = Rational::parse(a.t_min);
  const Rational t_max = Rational::parse(a.t_max);
  const std::size_t samples = parse_count(a.samples, "--samples");
  if (samples == 0) throw DomainError("--samples must be at least 1");
  const Polynomial p = poly_from_mask(m);

  if (a.out_path.empty()) {
    write_csv(m, p, t_min, t_max, samples, out);
    return kOk;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + a.out_path + "' for writing");
  write_csv(m, p, t_min, t_max, samples, file);
  file.close();
  if (!file) throw IoError("failed writing '" + a.out_path + "'");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact conversions between refinement masks and refinable polynomials", "refinemask"};
  app.require_subcommand(1, 1);
  Arguments a;

  auto* poly_from_mask_cmd = app.add_subcommand("poly-from-mask", "Monic polynomial refined by a mask");
  poly_from_mask_cmd->add_option("mask", a.mask, "offset:c0,c1,...")->required();

  auto* mask_from_poly_cmd = app.add_subcommand("mask-from-poly", "Mask on {0..n} (or on --nodes) refining a polynomial");
  mask_from_poly_cmd->add_option("poly", a.poly, "c0,c1,...,cn")->required();
  mask_from_poly_cmd->add_option("--nodes", a.nodes, "comma-separated distinct integer nodes");

  auto* verify_cmd = app.add_subcommand("verify", "Check that a mask refines a polynomial");
  verify_cmd->add_option("mask", a.mask)->required();
  verify_cmd->add_option("poly", a.poly)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Check that two masks refine the same polynomial");
  equiv_cmd->add_option("mask", a.mask)->required();
  equiv_cmd->add_option("other", a.other_mask)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Canonical representative supported in {0..n}");
  reduce_cmd->add_option("mask", a.mask)->required();

  auto* cascade_cmd = app.add_subcommand("cascade", "Approximate the refined polynomial by power iteration");
  cascade_cmd->add_option("mask", a.mask)->required();
  cascade_cmd->add_option("--max-iter", a.max_iter, "iteration limit")->capture_default_str();
  cascade_cmd->add_option("--tol", a.tol, "rational stopping tolerance")->capture_default_str();
  cascade_cmd->add_option("--p0", a.p0, "start polynomial, default t^n");

  auto* render_cmd = app.add_subcommand("render-csv", "Sample the refinement decomposition as CSV");
  render_cmd->add_option("mask", a.mask)->required();
  render_cmd->add_option("--t-min", a.t_min)->capture_default_str();
  render_cmd->add_option("--t-max", a.t_max)->capture_default_str();
  render_cmd->add_option("--samples", a.samples)->capture_default_str();
  render_cmd->add_option("--out", a.out_path, "output file, default stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "refinemask: " << e.what() << '\n';
    return kParseFailure;
  }

  try {
    if (poly_from_mask_cmd->parsed()) return cmd_poly_from_mask(a, out);
    if (mask_from_poly_cmd->parsed()) return cmd_mask_from_poly(a, out);
    if (verify_cmd->parsed()) return cmd_verify(a, out);
    if (equiv_cmd->parsed()) return cmd_equiv(a, out);
    if (reduce_cmd->parsed()) return cmd_reduce(a, out);
    if (cascade_cmd->parsed()) return cmd_cascade(a, out);
    if (render_cmd->parsed()) return cmd_render_csv(a, out);
  } catch (const ParseError& e) {
    err << "refinemask: " << e.what() << '\n';
    return kParseFailure;
  } catch (const IoError& e) {
    err << "refinemask: " << e.what() << '\n';
    return kIoFailure;
  } catch (const DomainError& e) {
    err << "refinemask: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kParseFailure;
}

}  // namespace refinemask::cli
