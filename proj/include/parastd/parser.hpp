#ifndef PARASTD_PARSER_HPP
#define PARASTD_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "parastd/format.hpp"
#include "parastd/order.hpp"
#include "parastd/param_scalar.hpp"

namespace parastd {

struct ProblemOptions {
  std::optional<std::uint64_t> trunc_degree;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
};

struct Problem {
  std::vector<std::string> params;
  std::vector<std::string> vars;
  MonomialOrder order;
  std::string order_text = "grevlex";
  std::vector<ParamPoly> ideal;
  std::vector<AScalar> q;
  ProblemOptions options;

  std::size_t nparams() const { return params.size(); }
  std::size_t nvars() const { return vars.size(); }
  Printer printer() const { return Printer(params, vars); }
};

inline Error located_error(ErrorCode code, std::size_t line, std::size_t col, const std::string& msg) {
  return Error(code, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

/// Recursive-descent parser for
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' natural)?
///   atom   := identifier | number | '(' expr ')'
/// Division is only allowed by expressions free of the main variables.
class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& params,
             const std::vector<std::string>& vars, std::size_t line = 1, std::size_t col0 = 1)
      : s_(text), params_(params), vars_(vars), line_(line), col0_(col0) {}

  ParamPoly parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail(ErrorCode::SyntaxError, "empty expression");
    ParamPoly p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(ErrorCode::SyntaxError, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(ErrorCode c, const std::string& msg) const {
    throw located_error(c, line_, col0_ + pos_, msg);
  }

  std::size_t m() const { return params_.size(); }
  std::size_t n() const { return vars_.size(); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamPoly constant(const Rational& q) const {
    ParamPoly p(n());
    if (sgn(q) != 0) p.add_term(Exponent(n()), ParamScalar::constant(m(), q));
    return p;
  }

  ParamPoly expr() {
    ParamPoly acc(n());
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    ParamPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  ParamPoly term() {
    ParamPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ParamPoly d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail(ErrorCode::SyntaxError, "division by zero");
        }
        if (d.size() != 1 || !d.terms().begin()->first.is_zero()) {
          pos_ = at;
          fail(ErrorCode::SyntaxError, "can only divide by expressions in the parameters");
        }
        const ParamScalar inv =
            ParamScalar::constant(m(), Rational(1)) / d.terms().begin()->second;
        acc = acc.scaled(inv);
      } else {
        break;
      }
    }
    return acc;
  }

  ParamPoly factor() {
    ParamPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail(ErrorCode::SyntaxError, "expected a natural exponent");
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 6) {
        pos_ = start;
        fail(ErrorCode::SyntaxError, "exponent too large");
      }
      const unsigned long k = std::stoul(digits);
      ParamPoly r = constant(Rational(1));
      for (unsigned long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  ParamPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail(ErrorCode::SyntaxError, "unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly p = expr();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < n(); ++i)
        if (vars_[i] == name)
          return ParamPoly::monomial(n(), Exponent::unit(n(), i), ParamScalar::constant(m(), Rational(1)));
      for (std::size_t i = 0; i < m(); ++i)
        if (params_[i] == name) {
          ParamPoly p(n());
          p.add_term(Exponent(n()), ParamScalar::parameter(m(), i));
          return p;
        }
      pos_ = start;
      fail(ErrorCode::UnknownIdentifier, "unknown identifier '" + name + "'");
    }
    fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& params_;
  const std::vector<std::string>& vars_;
  std::size_t line_, col0_;
  std::size_t pos_ = 0;
};

inline ParamPoly parse_poly(std::string_view text, const std::vector<std::string>& params,
                            const std::vector<std::string>& vars) {
  return ExprParser(text, params, vars).parse();
}

/// Parameter-only expression (no main variables, no denominators).
inline AScalar parse_scalar(std::string_view text, const std::vector<std::string>& params,
                            std::size_t line = 1, std::size_t col = 1) {
  const std::vector<std::string> none;
  const ParamPoly p = ExprParser(text, params, none, line, col).parse();
  if (p.is_zero()) return AScalar(params.size());
  const auto& c = p.terms().begin()->second;
  if (!c.has_unit_den())
    throw located_error(ErrorCode::SyntaxError, line, col, "parameter ideal generators must be polynomials");
  return c.num().scaled(Rational(1) / ascalar::constant_value(c.den()));
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits on top-level commas, keeping the column of each piece.
inline std::vector<std::pair<std::string, std::size_t>> split_top(std::string_view s, std::size_t col0) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && (s[i] == '(' || s[i] == '[')) ++depth;
    if (i < s.size() && (s[i] == ')' || s[i] == ']')) --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      std::size_t a = start;
      while (a < i && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
      out.emplace_back(trim(s.substr(start, i - start)), col0 + a);
      start = i + 1;
    }
  }
  return out;
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline std::vector<std::int64_t> parse_int_list(std::string_view s, std::size_t line, std::size_t col) {
  std::vector<std::int64_t> out;
  for (const auto& [item, c] : split_top(s, col)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw located_error(ErrorCode::SyntaxError, line, c, "expected an integer, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Parses "grevlex", "lex", "neg_grevlex" or "matrix [[..],..]".
inline MonomialOrder parse_order(std::string_view text, std::size_t n, std::size_t line = 1,
                                 std::size_t col = 1) {
  const std::string t = detail::trim(text);
  if (t == "grevlex") return MonomialOrder::grevlex(n);
  if (t == "lex") return MonomialOrder::lex(n);
  if (t == "neg_grevlex") return MonomialOrder::neg_grevlex(n);
  if (t.rfind("matrix", 0) == 0) {
    const std::string body = detail::trim(std::string_view(t).substr(6));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw located_error(ErrorCode::SyntaxError, line, col, "expected matrix [[..],..]");
    std::vector<MonomialOrder::Row> rows;
    const std::string inner = body.substr(1, body.size() - 2);
    if (!detail::trim(inner).empty())
      for (const auto& [row, c] : detail::split_top(inner, col)) {
        if (row.size() < 2 || row.front() != '[' || row.back() != ']')
          throw located_error(ErrorCode::SyntaxError, line, c, "expected a bracketed row");
        auto vals = detail::parse_int_list(std::string_view(row).substr(1, row.size() - 2), line, c);
        if (vals.size() != n)
          throw located_error(ErrorCode::DimensionMismatch, line, c,
                              "order row needs " + std::to_string(n) + " entries");
        rows.emplace_back(vals.begin(), vals.end());
      }
    return MonomialOrder(n, std::move(rows));
  }
  throw located_error(ErrorCode::SyntaxError, line, col, "unknown order '" + t + "'");
}

/// Parses a problem file: one `section: value` per line, `#` comments.
inline Problem parse_problem(std::string_view text) {
  struct Raw {
    std::string value;
    std::size_t line = 0, col = 0;
  };
  std::map<std::string, Raw> sections;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw located_error(ErrorCode::SyntaxError, lineno, 1, "expected 'section: value'");
    const std::string key = detail::trim(std::string_view(line).substr(0, colon));
    static const std::set<std::string> known{"params", "vars", "order", "ideal", "Q", "options"};
    if (!known.count(key))
      throw located_error(ErrorCode::SyntaxError, lineno, 1, "unknown section '" + key + "'");
    if (sections.count(key))
      throw located_error(ErrorCode::DuplicateSection, lineno, 1, "section '" + key + "' given twice");
    sections[key] = Raw{line.substr(colon + 1), lineno, colon + 2};
  }

  Problem p;
  auto names = [&](const char* key, std::vector<std::string>& out) {
    auto it = sections.find(key);
    if (it == sections.end()) return;
    const Raw& r = it->second;
    if (detail::trim(r.value).empty()) return;
    for (const auto& [name, c] : detail::split_top(r.value, r.col)) {
      if (!detail::is_identifier(name))
        throw located_error(ErrorCode::SyntaxError, r.line, c, "invalid name '" + name + "'");
      out.push_back(name);
    }
  };
  names("params", p.params);
  names("vars", p.vars);
  if (p.vars.empty()) throw located_error(ErrorCode::SyntaxError, lineno + 1, 1, "missing 'vars' section");
  {
    std::set<std::string> seen;
    for (const auto& v : p.params) seen.insert(v);
    for (const auto& v : p.vars) seen.insert(v);
    if (seen.size() != p.params.size() + p.vars.size()) {
      const auto& r = sections.count("vars") ? sections["vars"] : sections["params"];
      throw located_error(ErrorCode::SyntaxError, r.line, 1, "parameter and variable names must be distinct");
    }
  }

  if (auto it = sections.find("order"); it != sections.end()) {
    p.order = parse_order(it->second.value, p.nvars(), it->second.line, it->second.col);
    p.order_text = detail::trim(it->second.value);
  } else {
    p.order = MonomialOrder::grevlex(p.nvars());
  }

  auto it = sections.find("ideal");
  if (it == sections.end()) throw located_error(ErrorCode::SyntaxError, lineno + 1, 1, "missing 'ideal' section");
  {
    const Raw& r = it->second;
    if (detail::trim(r.value).empty())
      throw located_error(ErrorCode::SyntaxError, r.line, r.col, "empty ideal");
    for (const auto& [expr, c] : detail::split_top(r.value, r.col)) {
      if (expr.empty()) throw located_error(ErrorCode::SyntaxError, r.line, c, "empty expression");
      p.ideal.push_back(ExprParser(expr, p.params, p.vars, r.line, c).parse());
    }
  }

  if (auto q = sections.find("Q"); q != sections.end() && !detail::trim(q->second.value).empty()) {
    const Raw& r = q->second;
    for (const auto& [expr, c] : detail::split_top(r.value, r.col))
      p.q.push_back(parse_scalar(expr, p.params, r.line, c));
  }

  if (auto o = sections.find("options"); o != sections.end() && !detail::trim(o->second.value).empty()) {
    const Raw& r = o->second;
    for (const auto& [kv, c] : detail::split_top(r.value, r.col)) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw located_error(ErrorCode::SyntaxError, r.line, c, "expected key=value");
      const std::string key = detail::trim(std::string_view(kv).substr(0, eq));
      const std::string val = detail::trim(std::string_view(kv).substr(eq + 1));
      std::uint64_t v = 0;
      std::size_t used = 0;
      try {
        if (!val.empty() && val[0] != '-') v = std::stoull(val, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (val.empty() || used != val.size())
        throw located_error(ErrorCode::SyntaxError, r.line, c, "expected a natural number for '" + key + "'");
      if (key == "trunc_degree") p.options.trunc_degree = v;
      else if (key == "max_depth") p.options.max_depth = v;
      else if (key == "samples") p.options.samples = v;
      else if (key == "seed") p.options.seed = v;
      else throw located_error(ErrorCode::SyntaxError, r.line, c, "unknown option '" + key + "'");
    }
  }
  return p;
}

/// Canonical problem text; parse_problem reads it back to an equal problem.
inline std::string print_problem(const Problem& p) {
  const Printer pr = p.printer();
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::string s;
  if (!p.params.empty()) s += "params: " + join(p.params) + "\n";
  s += "vars: " + join(p.vars) + "\n";
  s += "order: " + p.order.to_string() + "\n";
  std::vector<std::string> gens;
  for (const auto& f : p.ideal) gens.push_back(pr.poly(f, p.order));
  s += "ideal: " + join(gens) + "\n";
  if (!p.q.empty()) {
    std::vector<std::string> qs;
    for (const auto& q : p.q) qs.push_back(pr.scalar(q));
    s += "Q: " + join(qs) + "\n";
  }
  std::vector<std::string> opts;
  if (p.options.trunc_degree) opts.push_back("trunc_degree=" + std::to_string(*p.options.trunc_degree));
  if (p.options.max_depth) opts.push_back("max_depth=" + std::to_string(*p.options.max_depth));
  if (p.options.samples) opts.push_back("samples=" + std::to_string(*p.options.samples));
  if (p.options.seed) opts.push_back("seed=" + std::to_string(*p.options.seed));
  if (!opts.empty()) s += "options: " + join(opts) + "\n";
  return s;
}

}  // namespace parastd

#endif  // PARASTD_PARSER_HPP
