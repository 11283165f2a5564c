#ifndef PARASTD_CLI_HPP
#define PARASTD_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parastd/parastd.hpp"

namespace parastd::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { Ok = 0, InputError = 1, VerificationFailed = 2 };

struct Settings {
  std::string command;
  std::string file;
  std::string format = "text";
  std::optional<std::uint64_t> trunc;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::string point;
  std::string expect_staircase;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"gsb",    "reduce",     "comprehensive", "hilbert",
                                          "divide", "specialize", "verify"};
  return c;
}

/// Parses "a=2,b=-1/3" against the problem's parameter names.
inline ParamPoint parse_point(const std::string& text, const Problem& p) {
  ParamPoint c(p.nparams(), Rational(0));
  std::vector<bool> seen(p.nparams(), false);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::SyntaxError, "--point: expected name=value, got '" + item + "'");
    const std::string name = detail::trim(std::string_view(item).substr(0, eq));
    const std::string val = detail::trim(std::string_view(item).substr(eq + 1));
    auto it = std::find(p.params.begin(), p.params.end(), name);
    if (it == p.params.end()) throw Error(ErrorCode::UnknownIdentifier, "--point: unknown parameter '" + name + "'");
    Rational q;
    if (val.empty() || q.set_str(val, 10) != 0)
      throw Error(ErrorCode::SyntaxError, "--point: invalid rational '" + val + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw Error(ErrorCode::SyntaxError, "--point: zero denominator");
    const auto k = static_cast<std::size_t>(it - p.params.begin());
    c[k] = q;
    seen[k] = true;
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw Error(ErrorCode::InvalidArgument, "--point: missing value for '" + p.params[k] + "'");
  return c;
}

/// Parses "[[0,1],[2,0]]".
inline Staircase parse_staircase(const std::string& text, std::size_t n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::SyntaxError, "--expect-staircase: expected [[..],..]");
  }
  if (!j.is_array()) throw Error(ErrorCode::SyntaxError, "--expect-staircase: expected [[..],..]");
  Staircase s(n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "--expect-staircase: rows need " + std::to_string(n) + " entries");
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!row[i].is_number_unsigned()) throw Error(ErrorCode::SyntaxError, "--expect-staircase: entries must be natural numbers");
      e[i] = row[i].get<std::uint32_t>();
    }
    s.insert(e);
  }
  return s;
}

inline std::string point_string(const ParamPoint& c, const Problem& p) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + p.params[k] + "=" + c[k].get_str();
  return s;
}

/// Runs one command on one problem, writing the document to `out`.
class Runner {
 public:
  Runner(Problem p, Settings s) : p_(std::move(p)), s_(std::move(s)), pr_(p_.printer()) {}

  int run(std::ostream& out) {
    doc_ = Json::object();
    doc_["schema"] = "parastd/1";
    doc_["command"] = s_.command;
    doc_["params"] = p_.params;
    doc_["vars"] = p_.vars;
    doc_["order"] = p_.order.to_string();
    doc_["order_kind"] = kind_name(p_.order.kind());
    int code = Ok;
    if (s_.command == "gsb") gsb();
    else if (s_.command == "reduce") reduce();
    else if (s_.command == "comprehensive") comprehensive();
    else if (s_.command == "hilbert") hilbert();
    else if (s_.command == "divide") divide_cmd();
    else if (s_.command == "specialize") specialize_cmd();
    else if (s_.command == "verify") code = verify();
    else throw Error(ErrorCode::InvalidArgument, "unknown command '" + s_.command + "'");
    if (s_.format == "json") out << doc_.dump(2) << "\n";
    else out << text_;
    return code;
  }

 private:
  PrimeContext context() const { return PrimeContext(p_.nparams(), p_.q); }

  std::vector<std::string> polys(const std::vector<ParamPoly>& v) const {
    std::vector<std::string> out;
    for (const auto& f : v) out.push_back(pr_.poly(f, p_.order));
    return out;
  }
  std::vector<std::string> scalars(const std::vector<AScalar>& v) const {
    std::vector<std::string> out;
    for (const auto& a : v) out.push_back(pr_.scalar(a));
    return out;
  }
  static Json staircase_json(const Staircase& s) {
    Json a = Json::array();
    for (const auto& g : s.generators()) a.push_back(std::vector<std::uint32_t>(g.begin(), g.end()));
    return a;
  }
  std::string q_string() const {
    if (p_.q.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < p_.q.size(); ++i) s += (i ? ", " : "") + pr_.scalar(p_.q[i]);
    return s + ">";
  }

  void line(const std::string& s) { text_ += s + "\n"; }
  void list(const std::string& title, const std::vector<std::string>& items, const std::string& indent = "") {
    line(indent + title + ":");
    for (const auto& i : items) line(indent + "  " + i);
  }

  void basis_json(Json& j, const GenericBasis& B) const {
    j["Q"] = scalars(p_.q);
    j["basis"] = polys(B.gens);
    j["h"] = pr_.scalar(B.h());
    j["h_factors"] = scalars(B.h_parts);
    j["staircase"] = staircase_json(B.staircase);
  }
  void basis_text(const GenericBasis& B) {
    line("Q: " + q_string());
    list("basis", polys(B.gens));
    line("h: " + pr_.scalar(B.h()));
    std::string f;
    for (const auto& part : B.h_parts) f += (f.empty() ? "" : " * ") + ("(" + pr_.scalar(part) + ")");
    line("h factors: " + (f.empty() ? std::string("none") : f));
    line("staircase: " + B.staircase.to_string());
  }

  void gsb() {
    const auto B = generic_basis(p_.ideal, p_.order, context());
    basis_json(doc_, B);
    basis_text(B);
  }

  std::uint64_t trunc_for(const GenericBasis& B) const {
    if (s_.trunc) return *s_.trunc;
    if (p_.options.trunc_degree) return *p_.options.trunc_degree;
    std::uint64_t d = 3;
    for (const auto& g : B.staircase.generators()) d = std::max<std::uint64_t>(d, g.degree());
    return d;
  }

  void reduce() {
    const auto B = generic_basis(p_.ideal, p_.order, context());
    const auto R = generic_reduced_basis(B, trunc_for(B));
    basis_json(doc_, R);
    if (R.trunc_degree) doc_["trunc_degree"] = *R.trunc_degree;
    else doc_["trunc_degree"] = nullptr;
    basis_text(R);
    line(R.trunc_degree ? "truncated at degree " + std::to_string(*R.trunc_degree) : "exact");
  }

  std::size_t depth() const { return s_.max_depth.value_or(p_.options.max_depth.value_or(8)); }

  void comprehensive() {
    const auto r = comprehensive_basis(p_.ideal, p_.order, p_.nparams(), depth());
    Json cells = Json::array();
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      const auto& c = r.cells[i];
      // Coefficients shown modulo the cell's vanishing conditions.
      std::vector<ParamPoly> shown;
      for (const auto& g : c.basis.gens) shown.push_back(reduce_mod_q(g, c.basis.ctx));
      Json j;
      j["vanish"] = scalars(c.cell.vanish);
      j["nonvanish"] = scalars(c.cell.nonvanish);
      j["basis"] = polys(shown);
      j["staircase"] = staircase_json(c.staircase);
      cells.push_back(std::move(j));
      line("cell " + std::to_string(i + 1) + ": " + cell_string(c.cell));
      list("basis", polys(shown), "  ");
      line("  staircase: " + c.staircase.to_string());
    }
    doc_["cells"] = std::move(cells);
  }

  std::string cell_string(const Cell& c) const {
    std::string s;
    for (const auto& e : c.vanish) s += (s.empty() ? "" : ", ") + pr_.scalar(e) + " = 0";
    for (const auto& n : c.nonvanish) s += (s.empty() ? "" : ", ") + pr_.scalar(n) + " != 0";
    return s.empty() ? "everywhere" : s;
  }

  void hilbert() {
    const auto strata = hilbert_partition(p_.ideal, p_.order, p_.nparams(), depth());
    Json arr = Json::array();
    for (std::size_t i = 0; i < strata.size(); ++i) {
      const auto& s = strata[i];
      Json j;
      Json cells = Json::array();
      std::vector<std::string> names;
      for (const auto& c : s.cells) {
        cells.push_back({{"vanish", scalars(c.vanish)}, {"nonvanish", scalars(c.nonvanish)}});
        names.push_back(cell_string(c));
      }
      j["cells"] = std::move(cells);
      Json st = Json::array();
      for (const auto& e : s.staircases) st.push_back(staircase_json(e));
      j["staircases"] = std::move(st);
      j["polynomial"] = s.data.polynomial.to_string();
      j["r0"] = s.data.r0;
      std::vector<std::string> vals;
      for (const auto& v : s.data.values) vals.push_back(v.get_str());
      j["values"] = vals;
      if (s.milnor) j["milnor"] = s.milnor->get_str();
      else j["milnor"] = "infinite";
      arr.push_back(std::move(j));
      line("stratum " + std::to_string(i + 1) + ":");
      for (const auto& n : names) line("  cell: " + n);
      line("  HSP(r) = " + s.data.polynomial.to_string() + " for r >= " + std::to_string(s.data.r0));
      line("  milnor number: " + (s.milnor ? s.milnor->get_str() : std::string("infinite")));
    }
    doc_["strata"] = std::move(arr);
  }

  void divide_cmd() {
    if (p_.ideal.size() < 2) throw Error(ErrorCode::InvalidArgument, "divide needs a dividend and at least one divisor");
    const std::vector<ParamPoly> G(p_.ideal.begin() + 1, p_.ideal.end());
    const auto d = p_.order.is_global() ? divide(p_.ideal.front(), G, p_.order)
                                        : divide_truncated(p_.ideal.front(), G, p_.order);
    doc_["quotients"] = polys(d.quotients);
    doc_["remainder"] = pr_.poly(d.remainder, p_.order);
    doc_["truncated"] = !p_.order.is_global();
    list("quotients", polys(d.quotients));
    line("remainder: " + pr_.poly(d.remainder, p_.order));
    if (!p_.order.is_global()) line("truncated division");
  }

  void specialize_cmd() {
    if (s_.point.empty() && p_.nparams() > 0) throw Error(ErrorCode::InvalidArgument, "specialize needs --point");
    const ParamPoint c = parse_point(s_.point, p_);
    std::vector<QPoly> spec;
    std::vector<std::string> texts;
    const Printer plain({}, p_.vars);
    for (const auto& f : p_.ideal) {
      spec.push_back(specialize(f, c));
      texts.push_back(Printer::poly(spec.back(), p_.vars, p_.order));
    }
    const Staircase s = plain_staircase(spec, p_.order);
    doc_["point"] = point_string(c, p_);
    doc_["ideal"] = texts;
    doc_["staircase"] = staircase_json(s);
    line("point: " + point_string(c, p_));
    list("ideal", texts);
    line("staircase: " + s.to_string());
  }

  int verify() {
    const auto B = generic_basis(p_.ideal, p_.order, context());
    const std::uint64_t seed = s_.seed.value_or(p_.options.seed.value_or(1));
    std::vector<ParamPoint> pts;
    if (!s_.point.empty()) {
      pts.push_back(parse_point(s_.point, p_));
    } else {
      std::mt19937_64 rng(seed);
      pts = sample_admissible_points(B.ctx, B.h(), s_.samples.value_or(p_.options.samples.value_or(10)), rng);
    }
    auto rep = verify_specialization(B, pts);
    bool expected_ok = true;
    if (!s_.expect_staircase.empty()) {
      const Staircase want = parse_staircase(s_.expect_staircase, p_.nvars());
      expected_ok = want == B.staircase;
      doc_["expected_staircase"] = staircase_json(want);
    }
    doc_["seed"] = seed;
    doc_["staircase"] = staircase_json(B.staircase);
    doc_["h"] = pr_.scalar(B.h());
    Json samples = Json::array();
    line("staircase: " + B.staircase.to_string());
    line("h: " + pr_.scalar(B.h()));
    line("seed: " + std::to_string(seed));
    for (const auto& s : rep.samples) {
      samples.push_back({{"point", point_string(s.point, p_)},
                         {"staircase", staircase_json(s.staircase)},
                         {"pass", s.pass}});
      line(std::string(s.pass ? "pass" : "FAIL") + "  " + point_string(s.point, p_) + "  " + s.staircase.to_string());
    }
    doc_["samples"] = std::move(samples);
    const bool pass = rep.all_pass() && expected_ok;
    doc_["pass"] = pass;
    if (!expected_ok) line("staircase differs from the expected " + s_.expect_staircase);
    line(pass ? "all samples pass" : "verification failed");
    return pass ? Ok : VerificationFailed;
  }

  Problem p_;
  Settings s_;
  Printer pr_;
  Json doc_;
  std::string text_;
};

inline void report(std::ostream& err, const Error& e) {
  err << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
}

/// Full command line entry point. Returns the process exit code.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout,
                std::ostream& err = std::cerr) {
  CLI::App app{"Generic and comprehensive standard bases of parametric ideals"};
  Settings s;
  app.add_option("command", s.command, "gsb | reduce | comprehensive | hilbert | divide | specialize | verify")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("problem", s.file, "problem file ('-' for stdin)")->required();
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--trunc", s.trunc, "truncation degree for reduce");
  app.add_option("--max-depth", s.max_depth, "branching depth limit");
  app.add_option("--samples", s.samples, "number of random sample points");
  app.add_option("--seed", s.seed, "random seed");
  app.add_option("--point", s.point, "parameter point, e.g. a=2,b=-1");
  app.add_option("--expect-staircase", s.expect_staircase, "verify: also require this staircase, e.g. [[0,1]]");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error[InvalidArgument]: " << e.what() << "\n";
    return InputError;
  }
  try {
    std::string text;
    if (s.file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(s.file);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + s.file + "'");
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    Runner r(parse_problem(text), s);
    return r.run(out);
  } catch (const Error& e) {
    report(err, e);
    return InputError;
  } catch (const std::exception& e) {
    err << "error[Internal]: " << e.what() << "\n";
    return InputError;
  }
}

}  // namespace parastd::cli

#endif  // PARASTD_CLI_HPP
