#include "valflag/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "valflag/error.hpp"
#include "valflag/filters.hpp"
#include "valflag/text.hpp"

namespace valflag {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NamedMatrix load_matrix(const std::string& path) {
  return matrix_from_json(parse_json(read_file(path)));
}

Prime load_prime(const std::string& path, VarNames* vars = nullptr) {
  NamedMatrix m = load_matrix(path);
  if (vars)
    *vars = m.vars;
  return canonicalize(m.matrix);
}

void apply_radical_cap_env() {
  if (const char* v = std::getenv("VALFLAG_RADICAL_CAP")) {
    char* end = nullptr;
    unsigned long cap = std::strtoul(v, &end, 10);
    if (end == v || *end != '\0' || cap == 0)
      throw ParseError("VALFLAG_RADICAL_CAP must be a positive integer", 0, 0);
    set_radical_cap(cap);
  }
}

Json exact_and_decimal(const Scalar& s) {
  return Json{{"exact", to_string(s)}, {"decimal", to_decimal(s)}};
}

Json exact_and_decimal(const ScalarVector& v) {
  Json a = Json::array();
  for (const auto& s : v)
    a.push_back(exact_and_decimal(s));
  return a;
}

struct Options {
  std::string output;
  std::string matrix;
  std::string second;
  std::vector<std::string> exprs;
  std::string vars;
  std::string target;
  bool cones = false;
  bool homogeneous = false;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Valuated term preorders: canonical forms, equality, filters "
               "and certificates."};
  app.name("valflag");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-o,--output", o.output, "Write the result to a file");

  auto* canon = app.add_subcommand("canon", "Canonical defining matrix");
  canon->add_option("matrix", o.matrix, "Matrix JSON")->required();

  auto* eq = app.add_subcommand("eq", "Decide whether two matrices define "
                                      "the same prime");
  eq->add_option("first", o.matrix, "Matrix JSON")->required();
  eq->add_option("second", o.second, "Matrix JSON")->required();

  auto* cls = app.add_subcommand("classify", "Class, order test, height and "
                                             "minimum filter dimension");
  cls->add_option("matrix", o.matrix, "Matrix JSON")->required();

  auto* flag = app.add_subcommand("flag", "Flag of polyhedra (or cones)");
  flag->add_option("matrix", o.matrix, "Matrix JSON")->required();
  flag->add_flag("--cones", o.cones, "Emit the flag of cones");

  auto* member = app.add_subcommand("member", "Filter membership of a "
                                              "polyhedral set");
  member->add_option("matrix", o.matrix, "Matrix JSON")->required();
  member->add_option("set", o.second, "Polyhedral set JSON")->required();

  auto* cert = app.add_subcommand("cert", "Farkas certificate for a "
                                          "half-space containment");
  cert->add_option("--vars", o.vars, "Comma-separated variable names")
      ->required();
  cert->add_option("--target", o.target, "The term a")->required();
  cert->add_option("hypotheses", o.exprs, "The terms a_l")->required();
  cert->add_flag("--homogeneous", o.homogeneous,
                 "Cone-level variant (rejected)");

  auto* cmp = app.add_subcommand("cmp", "Compare two polynomials");
  cmp->add_option("matrix", o.matrix, "Matrix JSON")->required();
  cmp->add_option("polys", o.exprs, "Two polynomials")->required()->expected(2);

  auto* mindim = app.add_subcommand("mindim", "Minimum-dimension member "
                                              "polyhedron");
  mindim->add_option("matrix", o.matrix, "Matrix JSON")->required();

  auto* plot = app.add_subcommand("plot", "Plot data for two variables");
  plot->add_option("matrix", o.matrix, "Matrix JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream result;
  int code = kOk;
  try {
    apply_radical_cap_env();
    if (canon->parsed()) {
      VarNames vars;
      Prime p = load_prime(o.matrix, &vars);
      result << matrix_to_json(vars, p.rows()).dump(2) << "\n";
    } else if (eq->parsed()) {
      VarNames vars;
      Prime a = load_prime(o.matrix, &vars);
      Prime b = load_prime(o.second);
      if (a.vars() != b.vars())
        throw DimensionError("the matrices have different variable counts");
      EqualityVerdict v = decide_equal(a, b);
      if (v.is_equal()) {
        result << "Equal\n";
      } else {
        result << "Distinguished\nwitness: " << to_string(*v.witness(), vars)
               << "\n";
        code = kNegative;
      }
    } else if (cls->parsed()) {
      Prime p = load_prime(o.matrix);
      PrimeClass c = classify(p);
      result << to_string(c) << "\n";
      result << "is_order: " << (is_order(p) ? "true" : "false") << "\n";
      if (c == PrimeClass::cont) {
        result << "height: " << height(p) << "\n";
        result << "min_filter_dim: " << min_filter_dim(p) << "\n";
      } else {
        result << "height: null\nmin_filter_dim: null\n";
      }
    } else if (flag->parsed()) {
      Prime p = load_prime(o.matrix);
      Flag f = flag_from_matrix(p, o.cones ? Flag::Kind::cones
                                           : Flag::Kind::polyhedra);
      Json dirs = Json::array();
      for (const auto& d : f.dirs())
        dirs.push_back(scalars_to_json(d));
      Json j{{"kind", o.cones ? "cones" : "polyhedra"},
             {o.cones ? "base" : "vertex", scalars_to_json(f.base())},
             {"dirs", dirs}};
      result << j.dump(2) << "\n";
    } else if (member->parsed()) {
      Prime p = load_prime(o.matrix);
      GammaPolyhedralSet u =
          polyset_from_json(parse_json(read_file(o.second)), p.vars());
      MembershipAnswer a = filter_member(p, u);
      if (a.member) {
        result << "member\npiece: " << *a.piece_index << "\n";
      } else {
        result << "not member\n";
        code = kNegative;
      }
    } else if (cert->parsed()) {
      if (o.homogeneous)
        throw DomainError(
            "the cone-level Farkas statement is false in general (a cone "
            "contained in a half-space need not have a multiplicative "
            "certificate), so no homogeneous certificate is offered");
      VarNames vars;
      std::stringstream ss(o.vars);
      for (std::string v; std::getline(ss, v, ',');)
        vars.push_back(v);
      Term a = parse_term(o.target, vars);
      std::vector<Term> al;
      for (const auto& e : o.exprs)
        al.push_back(parse_term(e, vars));
      FarkasResult r = farkas_certify(al, a);
      if (auto* c = std::get_if<FarkasCertificate>(&r)) {
        Json ml = Json::array();
        for (const auto& v : c->m_l())
          ml.push_back(Json::parse(v.get_str()));
        result << Json{{"m", Json::parse(c->m().get_str())},
                       {"m_l", ml},
                       {"b", to_string(c->b())}}
                      .dump()
               << "\n";
      } else {
        const auto& x = std::get<CounterexamplePoint>(r).point;
        result << Json{{"point", scalars_to_json(x)}}.dump() << "\n";
        code = kNegative;
      }
    } else if (cmp->parsed()) {
      VarNames vars;
      Prime p = load_prime(o.matrix, &vars);
      TropPolynomial f = parse_polynomial(o.exprs[0], vars);
      TropPolynomial g = parse_polynomial(o.exprs[1], vars);
      result << to_string(compare(p, f, g)) << "\n";
    } else if (mindim->parsed()) {
      Prime p = load_prime(o.matrix);
      GammaPolyhedron w = mindim_witness(p);
      Json j = polyhedron_to_json(w);
      j["dim"] = *w.dimension();
      result << j.dump(2) << "\n";
    } else if (plot->parsed()) {
      Prime p = load_prime(o.matrix);
      if (p.vars() != 2)
        throw DomainError("plot needs exactly two variables");
      Flag f = flag_from_matrix(p, Flag::Kind::polyhedra);
      Json dirs = Json::array();
      for (const auto& d : f.dirs())
        dirs.push_back(exact_and_decimal(d));
      Json box = Json::array();
      for (const auto& v : f.base()) {
        Integer c = (v + Scalar(Rational(1, 2))).floor();
        box.push_back(exact_and_decimal(Scalar(Rational(c - 3))));
        box.push_back(exact_and_decimal(Scalar(Rational(c + 3))));
      }
      Json j{{"vertex", exact_and_decimal(f.base())},
             {"dirs", dirs},
             {"box", box}};
      result << j.dump(2) << "\n";
    }
  } catch (const ParseError& e) {
    if (e.line())
      err << "parse error: " << e.what() << "\n";
    else
      err << "error: " << e.reason() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }

  if (o.output.empty()) {
    out << result.str();
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write '" << o.output << "'\n";
      return kUsage;
    }
    f << result.str();
  }
  return code;
}

} // namespace valflag
