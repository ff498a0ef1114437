#include "commands.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matrix_io.hpp"
#include "stpq/projection.hpp"
#include "stpq/stp.hpp"
#include "verify_suites.hpp"

namespace stpq::cli {

using nlohmann::json;

namespace {

struct Options {
  Format format = Format::text;
  unsigned precision = 12;
};

Matrix load(const Options& opts, const std::string& arg) {
  return load_matrix(arg, opts.format).parsed;
}

void emit_matrix(const Options& opts, std::ostream& out, const Matrix& m) {
  if (opts.format == Format::structured) {
    out << matrix_to_json(m).dump(2) << "\n";
  } else {
    out << format_matrix_text(m);
  }
}

void emit_object(std::ostream& out, const json& doc) {
  out << doc.dump(2) << "\n";
}

void cmd_stp(const Options& opts, std::ostream& out, const std::string& a,
             const std::string& b) {
  emit_matrix(opts, out, stp(load(opts, a), load(opts, b)));
}

void cmd_kron(const Options& opts, std::ostream& out, const std::string& a,
              const std::string& b) {
  emit_matrix(opts, out, kron(load(opts, a), load(opts, b)));
}

void cmd_root(const Options& opts, std::ostream& out, const std::string& a) {
  const Factorization f = root(load(opts, a));
  if (opts.format == Format::structured) {
    emit_object(out, {{"root", matrix_to_json(f.divisor)},
                      {"multiplicity", f.multiplicity}});
  } else {
    out << "root:\n"
        << format_matrix_text(f.divisor)
        << "multiplicity: " << f.multiplicity << "\n";
  }
}

void cmd_equiv(const Options& opts, std::ostream& out, const std::string& a,
               const std::string& b) {
  const Matrix ma = load(opts, a);
  const Matrix mb = load(opts, b);
  const auto common = theta(ma, mb);
  if (opts.format == Format::structured) {
    json doc{{"equivalent", common.has_value()}};
    if (common) {
      doc["theta"] = matrix_to_json(*common);
      doc["lambda"] = matrix_to_json(*lambda_gcd(ma, mb));
    }
    emit_object(out, doc);
  } else {
    out << "equivalent: " << (common ? "true" : "false") << "\n";
    if (common) {
      out << "theta:\n"
          << format_matrix_text(*common) << "lambda:\n"
          << format_matrix_text(*lambda_gcd(ma, mb));
    }
  }
}

void cmd_info(const Options& opts, std::ostream& out, const std::string& a) {
  const auto [mu, index] = classify(load(opts, a));
  if (opts.format == Format::structured) {
    emit_object(out, {{"mu", mu.to_string()}, {"index", index}});
  } else {
    out << "mu: " << mu.to_string() << "\n"
        << "index: " << index << "\n";
  }
}

void cmd_add_sub(const Options& opts, std::ostream& out, const std::string& a,
                 const std::string& b, bool subtract) {
  const MatrixClass x(load(opts, a));
  const MatrixClass y(load(opts, b));
  const MatrixClass result = subtract ? class_sub(x, y) : class_add(x, y);
  emit_matrix(opts, out, result.root());
}

void cmd_inner(const Options& opts, std::ostream& out, const std::string& a,
               const std::string& b) {
  const Rational value =
      class_inner(MatrixClass(load(opts, a)), MatrixClass(load(opts, b)));
  if (opts.format == Format::structured) {
    emit_object(out, {{"inner", value.to_string()}});
  } else {
    out << value.to_string() << "\n";
  }
}

void cmd_norm(const Options& opts, std::ostream& out, const std::string& a) {
  const MatrixClass x(load(opts, a));
  const Rational exact = norm_sq(x);
  const std::string approx = sqrt_decimal_string(exact, opts.precision);
  if (opts.format == Format::structured) {
    emit_object(out, {{"norm_sq", exact.to_string()},
                      {"norm", approx},
                      {"precision", opts.precision}});
  } else {
    out << "norm^2 = " << exact.to_string() << "\n"
        << "norm = " << approx << "\n";
  }
}

void cmd_dist(const Options& opts, std::ostream& out, const std::string& a,
              const std::string& b) {
  const MatrixClass x(load(opts, a));
  const MatrixClass y(load(opts, b));
  const Rational exact = distance_sq(x, y);
  const std::string approx = sqrt_decimal_string(exact, opts.precision);
  if (opts.format == Format::structured) {
    emit_object(out, {{"dist_sq", exact.to_string()},
                      {"dist", approx},
                      {"precision", opts.precision}});
  } else {
    out << "dist^2 = " << exact.to_string() << "\n"
        << "dist = " << approx << "\n";
  }
}

void cmd_project(const Options& opts, std::ostream& out, const std::string& a,
                 std::size_t target, bool with_residual) {
  const MatrixClass x(load(opts, a));
  const ProjectionResult p = project(x, target);
  const std::string approx =
      sqrt_decimal_string(p.distance_sq_to_target, opts.precision);
  if (opts.format == Format::structured) {
    json doc{{"projection", matrix_to_json(p.projection.root())},
             {"residual_root", matrix_to_json(p.residual.root())},
             {"target_index", p.target_index},
             {"lift_index", p.lift_index},
             {"block_size", p.block_size},
             {"dist_sq", p.distance_sq_to_target.to_string()},
             {"dist", approx}};
    if (with_residual) {
      doc["residual"] = matrix_to_json(residual_matrix(x, target));
    }
    emit_object(out, doc);
  } else {
    out << "projection root:\n" << format_matrix_text(p.projection.root());
    out << "target index: " << p.target_index << "\n"
        << "lift index: " << p.lift_index << "\n"
        << "block size: " << p.block_size << "\n"
        << "dist^2 = " << p.distance_sq_to_target.to_string() << "\n"
        << "dist = " << approx << "\n";
    if (with_residual) {
      out << "residual:\n" << format_matrix_text(residual_matrix(x, target));
    }
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact semi-tensor product calculator on matrix equivalence "
               "classes"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  const std::map<std::string, Format> format_names{
      {"text", Format::text}, {"structured", Format::structured}};
  app.add_option("--format", opts.format, "Matrix input/output format")
      ->transform(CLI::CheckedTransformer(format_names))
      ->default_str("text");
  app.add_option("--precision", opts.precision,
                 "Digits after the point for decimal output")
      ->check(CLI::Range(0u, 10000u))
      ->default_str("12");

  // One string per matrix argument; parsing happens inside the callbacks so
  // that --format is already settled.
  std::string arg_a, arg_b;
  std::size_t target = 1;
  bool with_residual = false;
  std::string suite;
  bool suite_failed = false;

  const auto add_binary = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("A", arg_a, "Left matrix (inline, @file, or @-)")
        ->required();
    sub->add_option("B", arg_b, "Right matrix (inline, @file, or @-)")
        ->required();
    return sub;
  };
  const auto add_unary = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("A", arg_a, "Matrix (inline, @file, or @-)")->required();
    return sub;
  };

  add_binary("stp", "Semi-tensor product of two matrices")->callback([&] {
    cmd_stp(opts, out, arg_a, arg_b);
  });
  add_binary("kron", "Kronecker product of two matrices")->callback([&] {
    cmd_kron(opts, out, arg_a, arg_b);
  });
  add_unary("root", "Irreducible root element and identity multiplicity")
      ->callback([&] { cmd_root(opts, out, arg_a); });
  add_binary("equiv",
             "Test equivalence; prints theta and lambda when equivalent")
      ->callback([&] { cmd_equiv(opts, out, arg_a, arg_b); });
  add_unary("info", "Shape ratio mu and component index")->callback([&] {
    cmd_info(opts, out, arg_a);
  });
  add_binary("add", "Class addition; prints the root of the sum")
      ->callback([&] { cmd_add_sub(opts, out, arg_a, arg_b, false); });
  add_binary("sub", "Class subtraction; prints the root of the difference")
      ->callback([&] { cmd_add_sub(opts, out, arg_a, arg_b, true); });
  add_binary("inner", "Inner product of two classes (exact)")
      ->callback([&] { cmd_inner(opts, out, arg_a, arg_b); });
  add_unary("norm", "Class norm: exact square and decimal root")
      ->callback([&] { cmd_norm(opts, out, arg_a); });
  add_binary("dist", "Distance between two classes: exact square and decimal"
                     " root")
      ->callback([&] { cmd_dist(opts, out, arg_a, arg_b); });

  CLI::App* proj = add_unary(
      "project", "Orthogonal projection onto a target component");
  proj->add_option("--target", target, "Target component index alpha")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  proj->add_flag("--residual", with_residual,
                 "Also print the explicit lifted residual matrix");
  proj->callback([&] { cmd_project(opts, out, arg_a, target, with_residual); });

  CLI::App* verify =
      app.add_subcommand("verify", "Run a named property suite");
  std::string known;
  for (const auto& name : suite_names()) {
    known += known.empty() ? name : ", " + name;
  }
  verify->add_option("--suite", suite, "Suite name (" + known + ")")
      ->required();
  verify->callback([&] { suite_failed = !run_suite(suite, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help and friends
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  if (suite_failed) {
    err << "verify: suite '" << suite << "' failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

} // namespace stpq::cli
