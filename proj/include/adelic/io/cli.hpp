#pragma once

#include "adelic/base/random.hpp"
#include "adelic/curve/cohomology.hpp"
#include "adelic/curve/weil.hpp"
#include "adelic/io/expr.hpp"
#include "adelic/io/report.hpp"
#include "adelic/surface/cohomology.hpp"
#include "adelic/surface/germs.hpp"
#include "adelic/surface/reciprocity.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace adelic {

namespace exit_code {
constexpr int ok = 0;
constexpr int fail = 1;
constexpr int input = 2;
constexpr int precision = 3;
} // namespace exit_code

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::precision:
    case ErrorKind::window_unstable:
    case ErrorKind::indeterminate: return exit_code::precision;
    default: return exit_code::input;
  }
}

namespace cli {

/// "p" or "p^d".
inline FqField parse_field(const std::string& s) {
  const auto caret = s.find('^');
  long p = 0, d = 1;
  try {
    std::size_t used = 0;
    p = std::stol(s.substr(0, caret), &used);
    if (used != (caret == std::string::npos ? s.size() : caret)) throw std::invalid_argument(s);
    if (caret != std::string::npos) {
      d = std::stol(s.substr(caret + 1), &used);
      if (used != s.size() - caret - 1) throw std::invalid_argument(s);
    }
  } catch (const std::logic_error&) {
    throw DomainError("field must be p or p^d, got '" + s + "'");
  }
  if (p < 2 || p > 65521) throw DomainError("characteristic " + std::to_string(p) + " out of range");
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw DomainError(std::to_string(p) + " is not prime");
  if (d < 1 || d > 16) throw DomainError("extension degree " + std::to_string(d) + " out of range");
  return d == 1 ? FqField::prime(static_cast<std::uint32_t>(p)) : make_extension(static_cast<std::uint32_t>(p), static_cast<int>(d));
}

/// "a:b,c:d" -> ord1:prec1, ord2:prec2.
inline Window parse_window(const std::string& s) {
  Window w;
  if (std::sscanf(s.c_str(), "%d:%d,%d:%d", &w.ord1, &w.prec1, &w.ord2, &w.prec2) != 4 || !w.valid())
    throw DomainError("window must be ord1:prec1,ord2:prec2 with ord < prec, got '" + s + "'");
  return w;
}

inline std::pair<Fq, Fq> parse_point2(const std::string& s, const FqField& k) {
  long a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%ld,%ld%c", &a, &b, &tail) != 2) throw DomainError("point must be a,b, got '" + s + "'");
  return {k.from_int(a), k.from_int(b)};
}

inline Poly parse_poly(const std::string& s, const FqField& k) {
  const RatFunc f = eval_ratfunc(*parse(s), k);
  if (f.den().degree() != 0) throw DomainError("'" + s + "' is not a polynomial");
  return f.num() * f.den().lead().inverse();
}

/// "inf" or an irreducible polynomial in t.
inline ClosedPoint parse_closed_point(const std::string& s, const FqField& k) {
  if (s == "inf") return ClosedPoint::infinity(k);
  const Poly p = parse_poly(s, k);
  if (p.degree() < 1) throw DomainError("point polynomial '" + s + "' is constant");
  return ClosedPoint::finite(p.monic());
}

/// Sum of "±k*inf" and "±k*(poly)" terms; polynomials are factored.
inline Divisor parse_divisor(const std::string& src, const FqField& k) {
  Divisor D(k);
  std::string s;
  for (char c : src)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0" || s.empty()) return D;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw SyntaxError(i, "divisor: " + why); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) fail("expected + or -");
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    int mult = 1;
    if (j > i) {
      mult = std::stoi(s.substr(i, j - i));
      i = j;
      if (i >= s.size() || s[i] != '*') fail("expected '*'");
      ++i;
    }
    if (s.compare(i, 3, "inf") == 0) {
      D.add(ClosedPoint::infinity(k), sign * mult);
      i += 3;
      continue;
    }
    if (i >= s.size() || s[i] != '(') fail("expected 'inf' or '('");
    int depth = 0;
    j = i;
    do {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    } while (j < s.size() && depth > 0);
    if (depth != 0) fail("unbalanced parentheses");
    const Poly p = parse_poly(s.substr(i, j - i), k);
    if (p.degree() < 1) fail("point polynomial is constant");
    for (const auto& [pi, e] : factor(p).factors) D.add(ClosedPoint::finite(pi), sign * mult * e);
    i = j;
  }
  return D;
}

inline std::optional<Line> parse_line(const std::string& s, const FqField& k) {
  const BiPoly L = eval_bipoly(*parse(s), k);
  if (L.total_degree() != 1) throw DomainError("'" + s + "' is not a line");
  return Line{L.coeff(1, 0), L.coeff(0, 1), L.coeff(0, 0)};
}

inline json rank2_json(const Rank2Val& v) { return valuation_json(v); }

inline json locus_json(const LocusRow& r) {
  json l;
  l["locus"] = r.locus;
  l["t1"] = r.t1;
  l["degree"] = r.degree;
  l["valuations"] = json::array({rank2_json(r.vf), rank2_json(r.vg), rank2_json(r.vh)});
  l["nu"] = r.nu;
  l["value"] = r.symbol.to_string();
  if (r.degree > 1) l["residue"] = r.symbol.field().describe();
  l["normed"] = r.normed.to_string();
  return l;
}

inline void fill_reciprocity(Report& rep, const ReciprocityReport& r) {
  for (const auto& row : r.rows) rep.loci.push_back(locus_json(row));
  rep.aggregate["nu_sum"] = r.nu_sum;
  rep.aggregate["product"] = r.product.to_string();
  rep.verdict = r.pass ? "pass" : "fail";
  rep.stable = r.stable;
}

struct Options {
  std::string field = "5";
  std::optional<int> precision;
  std::optional<std::string> window;
  bool json = false;
  std::uint64_t seed = 1;

  FqField k() const { return parse_field(field); }
  Window win() const { return window ? parse_window(*window) : Window{}; }
};

inline FactoredFunc factored(const std::string& s, const FqField& k) { return eval_factored(*parse(s), k); }

/// Leading-term stable expansion of a bivariate function at the standard
/// flag, compared at w and 2w.
inline Laurent2 flag_expansion(const FactoredFunc& f, const Window& w) {
  return expand_at_flag(f.numerator(), f.denominator(), w);
}

} // namespace cli

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Higher local fields, symbols and adelic cohomology over finite fields", "adelic"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "base field p or p^d")->capture_default_str();
  app.add_option("--precision", o.precision, "series precision");
  app.add_option("--window", o.window, "window ord1:prec1,ord2:prec2");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();

  std::function<Report()> action;
  std::vector<std::string> args;
  std::string at = "0,0", line = "u", point = "t", divisor, method = "restricted", check = "betti";
  int degree = 0;
  std::optional<int> random_pairs;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };
  auto exprs = [&](CLI::App* s, int n) { s->add_option("exprs", args, "functions")->expected(n)->required(); };

  CLI::App* symbol = sub(&app, "symbol", "local symbols");
  symbol->require_subcommand(1);
  CLI::App* verify = sub(&app, "verify", "reciprocity laws");
  verify->require_subcommand(1);
  CLI::App* coh = sub(&app, "cohomology", "line bundle cohomology");
  coh->require_subcommand(1);
  CLI::App* split = sub(&app, "split", "local field decompositions");
  split->require_subcommand(1);
  CLI::App* expand = sub(&app, "expand", "Laurent expansions");
  expand->require_subcommand(1);

  // symbol tame f g [--point P]
  CLI::App* s_tame = sub(symbol, "tame", "tame symbol of f, g in t at a closed point");
  exprs(s_tame, 2);
  s_tame->add_option("--point", point, "closed point: inf or an irreducible polynomial")->capture_default_str();
  s_tame->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const RatFunc f = eval_ratfunc(*parse(args[0]), k), g = eval_ratfunc(*parse(args[1]), k);
      if (f.is_zero() || g.is_zero()) throw DomainError("tame symbol of the zero function");
      const ClosedPoint p = parse_closed_point(point, k);
      const int n = o.precision.value_or(16);
      const LaurentSeries ef = expand_ratfunc_at_point(f, p, n), eg = expand_ratfunc_at_point(g, p, n);
      const SymbolValue v = tame_symbol(ef, eg, p.to_string());
      Report r;
      r.command = "symbol tame";
      r.precision = n;
      json l;
      l["locus"] = p.to_string();
      l["degree"] = p.degree();
      l["valuations"] = json::array({ef.valuation(), eg.valuation()});
      l["value"] = v.value.to_string();
      if (p.degree() > 1) l["residue"] = p.residue_field().describe();
      l["normed"] = (p.degree() > 1 ? v.value.norm_to(k) : v.value).to_string();
      r.loci.push_back(l);
      r.aggregate["value"] = v.value.to_string();
      r.brief = v.value.to_string();
      return r;
    };
  });

  // symbol nu f g / symbol parshin f g h at the standard flag
  CLI::App* s_nu = sub(symbol, "nu", "nu(f, g) at the flag t = 0 > origin");
  exprs(s_nu, 2);
  CLI::App* s_par = sub(symbol, "parshin", "(f, g, h) at the flag t = 0 > origin");
  exprs(s_par, 3);
  auto flag_symbol = [&](bool parshin) {
    return [&, parshin] {
      const FqField k = o.k();
      const Window w = o.win();
      std::vector<FactoredFunc> fs;
      for (const auto& a : args) fs.push_back(factored(a, k));
      auto compute = [&](const Window& ww) {
        std::vector<Laurent2> e;
        for (const auto& f : fs) e.push_back(flag_expansion(f, ww));
        json l;
        l["locus"] = "t = 0 > (0,0)";
        l["t1"] = "t";
        json vals = json::array();
        for (const auto& x : e) vals.push_back(valuation_json(rank2_valuation(x)));
        l["valuations"] = vals;
        l["nu"] = nu_symbol(e[0], e[1]);
        if (parshin) l["value"] = parshin_symbol(e[0], e[1], e[2]).value.to_string();
        return l;
      };
      json a = compute(w);
      Report r;
      r.command = parshin ? "symbol parshin" : "symbol nu";
      r.window = w;
      r.stable = a == compute(w.doubled());
      if (!r.stable) throw WindowUnstableError("flag symbol changed under window doubling");
      r.loci.push_back(a);
      if (parshin) {
        r.aggregate["value"] = a["value"];
        r.brief = a["value"].get<std::string>();
      } else {
        r.aggregate["nu"] = a["nu"];
        r.brief = std::to_string(a["nu"].get<int>());
      }
      return r;
    };
  };
  s_nu->callback([&] { action = flag_symbol(false); });
  s_par->callback([&] { action = flag_symbol(true); });

  // verify weil f g | --random N
  CLI::App* v_weil = sub(verify, "weil", "Weil reciprocity on P^1");
  v_weil->add_option("exprs", args, "f g")->expected(0, 2);
  v_weil->add_option("--random", random_pairs, "check N random pairs of degree <= 6");
  v_weil->callback([&] {
    action = [&] {
      const FqField k = o.k();
      Report r;
      r.command = "verify weil";
      std::mt19937_64 rng(o.seed);
      if (random_pairs) {
        int failures = 0;
        for (int i = 0; i < *random_pairs; ++i) {
          const RatFunc f = random_ratfunc(k, 6, rng), g = random_ratfunc(k, 6, rng);
          const WeilReport w = weil_verify(f, g, rng);
          failures += !w.pass;
          json l;
          l["locus"] = "pair " + std::to_string(i);
          l["f"] = f.to_string();
          l["g"] = g.to_string();
          l["value"] = w.product.to_string();
          r.loci.push_back(l);
        }
        r.aggregate["pairs"] = *random_pairs;
        r.aggregate["failures"] = failures;
        r.verdict = failures == 0 ? "pass" : "fail";
        return r;
      }
      if (args.size() != 2) throw DomainError("verify weil needs two functions or --random N");
      const RatFunc f = eval_ratfunc(*parse(args[0]), k), g = eval_ratfunc(*parse(args[1]), k);
      const WeilReport w = weil_verify(f, g, rng);
      for (const auto& ls : w.locals) {
        json l;
        l["locus"] = ls.point.to_string();
        l["degree"] = ls.point.degree();
        l["valuations"] = json::array({ls.ord_f, ls.ord_g});
        l["value"] = ls.local.to_string();
        if (ls.point.degree() > 1) l["residue"] = ls.point.residue_field().describe();
        l["normed"] = ls.normed.to_string();
        r.loci.push_back(l);
      }
      r.precision = w.precision;
      r.aggregate["product"] = w.product.to_string();
      r.verdict = w.pass ? "pass" : "fail";
      return r;
    };
  });

  // verify point f g h [--at a,b]
  CLI::App* v_point = sub(verify, "point", "Parshin reciprocity around a rational point of A^2");
  exprs(v_point, 3);
  v_point->add_option("--at", at, "rational point a,b")->capture_default_str();
  v_point->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const FactoredFunc f = factored(args[0], k), g = factored(args[1], k), h = factored(args[2], k);
      const auto [a, b] = parse_point2(at, k);
      const ReciprocityReport rr = point_reciprocity(f, g, h, a, b, o.precision.value_or(0));
      Report r;
      r.command = "verify point";
      r.precision = rr.precision;
      fill_reciprocity(r, rr);
      return r;
    };
  });

  // verify curve f g h [--line L]
  CLI::App* v_curve = sub(verify, "curve", "Parshin reciprocity along a line of A^2");
  exprs(v_curve, 3);
  v_curve->add_option("--line", line, "linear equation of the curve")->capture_default_str();
  v_curve->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const FactoredFunc f = factored(args[0], k), g = factored(args[1], k), h = factored(args[2], k);
      const Window w = o.win();
      const ReciprocityReport rr = curve_reciprocity(f, g, h, *parse_line(line, k), w);
      Report r;
      r.command = "verify curve";
      r.window = w;
      fill_reciprocity(r, rr);
      return r;
    };
  });

  // cohomology p1 --divisor D
  CLI::App* c_p1 = sub(coh, "p1", "H^0, H^1 of O(D) on P^1");
  c_p1->add_option("--divisor", divisor, "sum of k*inf and k*(poly) terms")->required();
  c_p1->add_option("--method", method, "adelic or restricted")->check(CLI::IsMember({"adelic", "restricted"}))->capture_default_str();
  c_p1->add_option("--point", point, "distinguished point of the restricted complex");
  c_p1->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const Divisor D = parse_divisor(divisor, k);
      const int win = o.precision.value_or(0);
      const bool at_point = c_p1->count("--point") > 0;
      const H01 h = method == "adelic" ? adelic_h01(D, win)
                                       : restricted_h01(D, at_point ? parse_closed_point(point, k) : ClosedPoint::infinity(k), win);
      Report r;
      r.command = "cohomology p1";
      r.precision = h.window;
      r.stable = h.stable;
      r.aggregate["h0"] = h.h0;
      r.aggregate["h1"] = h.h1;
      r.brief = r.aggregate.dump();
      return r;
    };
  });

  // cohomology p2 --degree d [--check betti|lattice|reconstruction]
  CLI::App* c_p2 = sub(coh, "p2", "H^0, H^1, H^2 of O(d) on P^2");
  c_p2->add_option("--degree", degree, "twist d")->required();
  c_p2->add_option("--check", check, "betti, lattice or reconstruction")
      ->check(CLI::IsMember({"betti", "lattice", "reconstruction"}))
      ->capture_default_str();
  c_p2->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const int W = o.precision.value_or(0);
      Report r;
      r.command = "cohomology p2";
      if (check == "betti") {
        const Betti3 b = restricted_surface_cohomology(degree, W, k);
        r.precision = b.window;
        r.stable = b.stable;
        r.aggregate["h0"] = b.h0;
        r.aggregate["h1"] = b.h1;
        r.aggregate["h2"] = b.h2;
        r.brief = r.aggregate.dump();
      } else if (check == "lattice") {
        const LatticeReport lr = intersection_lattice_check(degree, W, k);
        r.precision = lr.window;
        for (const auto& row : lr.rows) {
          json l;
          l["locus"] = "A_" + face_name(row.s1) + " & A_" + face_name(row.s2);
          l["dim"] = row.dim;
          l["expected"] = row.expected;
          l["ok"] = row.ok;
          r.loci.push_back(l);
        }
        r.aggregate["h0"] = lr.h0_dim;
        r.verdict = lr.pass ? "pass" : "fail";
      } else {
        const ReconstructionReport rr = reconstruction_check(degree, W, k);
        for (const auto& row : rr.rows) {
          json l;
          l["locus"] = "A_" + face_name(row.face);
          l["direct"] = row.direct;
          l["rebuilt"] = row.rebuilt;
          l["ok"] = row.equal;
          r.loci.push_back(l);
        }
        r.aggregate["h0"] = rr.rebuilt.h0;
        r.aggregate["h1"] = rr.rebuilt.h1;
        r.aggregate["h2"] = rr.rebuilt.h2;
        r.verdict = rr.pass ? "pass" : "fail";
      }
      return r;
    };
  });

  // split kdelta C [--at a,b]
  CLI::App* s_kd = sub(split, "kdelta", "branches of a plane curve at a rational point");
  exprs(s_kd, 1);
  s_kd->add_option("--at", at, "rational point a,b")->capture_default_str();
  s_kd->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const BiPoly C = eval_bipoly(*parse(args[0]), k);
      const auto [a, b] = parse_point2(at, k);
      const int n = o.precision.value_or(8);
      Report r;
      r.command = "split kdelta";
      r.precision = n;
      for (const auto& f : k_delta_split(C, a, b, n)) {
        json l;
        l["locus"] = f.field;
        l["t1"] = f.t1;
        l["t2"] = f.t2;
        r.loci.push_back(l);
      }
      r.aggregate["factors"] = static_cast<int>(r.loci.size());
      return r;
    };
  });

  // expand point f --point P / expand flag f
  CLI::App* e_point = sub(expand, "point", "Laurent expansion of f(t) at a closed point");
  exprs(e_point, 1);
  e_point->add_option("--point", point, "closed point")->capture_default_str();
  e_point->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const RatFunc f = eval_ratfunc(*parse(args[0]), k);
      if (f.is_zero()) throw DomainError("expansion of the zero function");
      const ClosedPoint p = parse_closed_point(point, k);
      const int n = o.precision.value_or(8);
      const LaurentSeries s = expand_ratfunc_at_point(f, p, n);
      Report r;
      r.command = "expand point";
      r.precision = n;
      json l;
      l["locus"] = p.to_string();
      l["degree"] = p.degree();
      if (p.degree() > 1) l["residue"] = p.residue_field().describe();
      l["valuations"] = json::array({s.valuation()});
      l["value"] = s.to_string(p.is_infinity() ? "s" : (p.degree() == 1 ? "s" : "tau"));
      r.loci.push_back(l);
      r.brief = l["value"].get<std::string>();
      return r;
    };
  });
  CLI::App* e_flag = sub(expand, "flag", "expansion of f(t, u) in k((u))((t))");
  exprs(e_flag, 1);
  e_flag->callback([&] {
    action = [&] {
      const FqField k = o.k();
      const FactoredFunc f = factored(args[0], k);
      const Window w = o.win();
      const Laurent2 x = flag_expansion(f, w).truncated(w);
      Report r;
      r.command = "expand flag";
      r.window = w;
      json l;
      l["locus"] = "t = 0 > (0,0)";
      l["t1"] = "t";
      l["valuations"] = json::array({valuation_json(rank2_valuation(x))});
      l["value"] = x.to_string("t", "u");
      r.loci.push_back(l);
      r.brief = l["value"].get<std::string>();
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::input;
  }

  try {
    Report r = action();
    const FqField k = o.k();
    r.field = k.describe_short();
    r.modulus = k.describe();
    if (o.json) out << r.to_json().dump(2) << "\n";
    else out << r.to_text();
    if (r.verdict == "fail") return exit_code::fail;
    return exit_code::ok;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  }
}

} // namespace adelic
