#include "ntlc/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ntlc {

namespace {

using json = nlohmann::json;

json int_to_json(const Int& v) {
  // Stay numeric while safely representable, fall back to decimal strings.
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw domain_error("expected an integer or integer string");
}

// Cells of the embedded region that sit in adjacent columns at consecutive
// ranks; for minuscule heaps these are exactly the covering pairs.
std::vector<std::pair<Cell, Cell>> region_covers(const ERegion& reg) {
  std::vector<std::pair<Cell, Cell>> out;
  for (const Cell& x : reg.cells)
    for (const Cell& y : reg.cells)
      if (std::abs(x.a - y.a) == 1 && x.b == y.b + 1) out.push_back({x, y});
  return out;
}

} // namespace

json word_to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("word")) throw domain_error("expected a word document");
    arr = &j.at("word");
  }
  if (!arr->is_array()) throw domain_error("expected a word document");
  Word w;
  for (const auto& x : *arr) {
    if (!x.is_number_integer()) throw domain_error("word letters must be integers");
    w.push_back(x.get<int>());
  }
  return w;
}

json region_to_json(const ERegion& r) {
  json out = json::array();
  for (const Cell& c : r.cells) out.push_back(json::array({c.a, c.b}));
  return out;
}

ERegion region_from_json(int n, const json& j) {
  if (!j.is_array()) throw domain_error("expected a list of [column, rank] pairs");
  std::vector<Cell> cells;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw domain_error("expected a list of [column, rank] pairs");
    cells.push_back(Cell{p.at(0).get<int>(), p.at(1).get<long long>()});
  }
  return make_region(CoxeterData(n), cells);
}

json element_to_json(const TElement& a) {
  if (a.is_zero()) return json{{"zero", true}};
  json out = json::array();
  for (const auto& [w, c] : a.terms) {
    out.push_back(json{{"word", word_to_json(w)},
                       {"num", int_to_json(numerator(c))},
                       {"den", int_to_json(denominator(c))}});
  }
  return out;
}

TElement element_from_json(const CoxeterData& d, const json& j) {
  if (j.is_object() && j.contains("zero") && j.at("zero").get<bool>())
    return t_zero(d);
  if (j.is_object() && j.contains("word"))
    return t_word(d, word_from_json(j));
  if (!j.is_array()) throw domain_error("expected an element document");
  if (!j.empty() && j.front().is_number_integer())
    return t_word(d, word_from_json(j)); // bare word array
  TElement out = t_zero(d);
  for (const auto& term : j) {
    Word w = word_from_json(term.at("word"));
    Int num = int_from_json(term.at("num"));
    Int den = term.contains("den") ? int_from_json(term.at("den")) : Int(1);
    if (den <= 0) throw domain_error("den must be positive");
    out = t_add(out, t_scale(t_word(d, w), Rational(num, den)));
  }
  return out;
}

json poly_to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.coeffs)
    out[std::to_string(e)] = rational_to_string(c);
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object()) throw domain_error("expected a polynomial document");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    long long e = std::stoll(k);
    Rational c = v.is_string() ? rational_from_string(v.get<std::string>())
                               : Rational(int_from_json(v));
    p = lp_add(p, lp_monomial(e, c));
  }
  return p;
}

json matrix_to_json(const WeightMatrix& m) {
  json entries = json::array();
  for (const auto& [pos, poly] : m.entries)
    entries.push_back(json{{"row", pos.first},
                           {"col", pos.second},
                           {"poly", poly_to_json(poly)}});
  return json{{"n", m.n}, {"entries", entries}};
}

WeightMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw domain_error("expected a matrix document");
  CoxeterData d(j.at("n").get<int>());
  WeightMatrix m = wm_zero(d);
  for (const auto& e : j.at("entries")) {
    Weight row = e.at("row").get<Weight>();
    Weight col = e.at("col").get<Weight>();
    check_weight(d, row);
    check_weight(d, col);
    LaurentPoly p = poly_from_json(e.at("poly"));
    if (!p.coeffs.empty())
      m = wm_add(m, wm_unit(d, row, col, p));
  }
  return m;
}

std::string matrix_to_csv(const WeightMatrix& m) {
  std::ostringstream out;
  out << "row,col,exponent\n";
  for (const auto& [pos, poly] : m.entries) {
    auto mono = lp_as_monomial(poly);
    if (!mono || mono->second != Rational(1))
      throw domain_error("csv export requires unit monomial entries");
    out << pos.first << "," << pos.second << "," << mono->first << "\n";
  }
  return out.str();
}

json module_to_json(const FiniteModule& mod) {
  json basis = json::array();
  for (const Weight& w : mod.weights)
    for (int j = 0; j < mod.m; ++j)
      basis.push_back(json{{"weight", w}, {"power", j}});
  json gens = json::array();
  for (const QMatrix& g : mod.gens) {
    json rows = json::array();
    for (std::size_t r = 0; r < g.rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.cols; ++c)
        row.push_back(rational_to_string(g.at(r, c)));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  return json{{"n", mod.n},
              {"c", rational_to_string(mod.c)},
              {"m", mod.m},
              {"dimension", mod.dim},
              {"basis", basis},
              {"generators", gens}};
}

FiniteModule module_from_json(const CoxeterData& d, const json& j) {
  Rational c = rational_from_string(j.at("c").get<std::string>());
  int m = j.at("m").get<int>();
  FiniteModule mod = build_module(d, c, m);
  if (j.contains("n") && j.at("n").get<int>() != mod.n)
    throw domain_error("module document has wrong rank");
  if (j.contains("dimension") && j.at("dimension").get<std::size_t>() != mod.dim)
    throw domain_error("module document has wrong dimension");
  // Validate the stored matrices against a fresh build.
  const json& gens = j.at("generators");
  if (gens.size() != mod.gens.size())
    throw domain_error("module document has wrong generator count");
  for (std::size_t g = 0; g < mod.gens.size(); ++g) {
    const json& rows = gens[g];
    if (rows.size() != mod.dim) throw domain_error("module matrix shape mismatch");
    for (std::size_t r = 0; r < mod.dim; ++r)
      for (std::size_t cidx = 0; cidx < mod.dim; ++cidx)
        if (rational_from_string(rows[r][cidx].get<std::string>()) !=
            mod.gens[g].at(r, cidx))
          throw domain_error("module document disagrees with construction");
  }
  return mod;
}

json enumeration_to_json(const EnumerationReport& rep) {
  json out{{"n", rep.n}, {"max_len", rep.max_len}, {"counts", rep.counts}};
  if (!rep.words.empty()) {
    json words = json::array();
    for (const auto& bucket : rep.words) {
      json level = json::array();
      for (const Word& w : bucket) level.push_back(word_to_json(w));
      words.push_back(level);
    }
    out["words"] = words;
  }
  return out;
}

json verify_to_json(const VerifyReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    json item{{"check_name", c.name},
              {"ref", c.ref},
              {"status", c.pass ? "pass" : "fail"},
              {"witness", c.witness},
              {"seconds", c.seconds}};
    checks.push_back(item);
  }
  return json{{"n", rep.n},
              {"level", level_to_string(rep.level)},
              {"seed", rep.seed},
              {"fault", rep.fault == Fault::arrow_flip ? "arrow_flip" : "none"},
              {"status", rep.all_pass() ? "pass" : "fail"},
              {"checks", checks}};
}

std::string heap_to_dot(const CoxeterData& d, const Word& w) {
  ERegion reg = rank_and_embed(d, w);
  std::ostringstream out;
  out << "digraph heap {\n  rankdir=BT;\n";
  for (const Cell& c : reg.cells)
    out << "  \"(" << c.a << "," << c.b << ")\" [label=\"" << c.a << "\"];\n";
  for (const auto& [up, lo] : region_covers(reg))
    out << "  \"(" << up.a << "," << up.b << ")\" -> \"(" << lo.a << ","
        << lo.b << ")\";\n";
  out << "}\n";
  return out.str();
}

std::string heap_to_tikz(const CoxeterData& d, const Word& w) {
  ERegion reg = rank_and_embed(d, w);
  std::ostringstream out;
  out << "\\begin{tikzpicture}[xscale=2,yscale=2]\n";
  auto id = [](const Cell& c) {
    std::ostringstream s;
    s << "c" << c.a << "x" << (c.b < 0 ? "m" : "") << std::abs(c.b);
    return s.str();
  };
  for (const Cell& c : reg.cells)
    out << "  \\node[draw] (" << id(c) << ") at (" << (0.5 * c.a) << ","
        << (0.5 * c.b) << ") {$" << c.a << "$};\n";
  for (const auto& [up, lo] : region_covers(reg))
    out << "  \\draw (" << id(up) << ") -- (" << id(lo) << ");\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

json heap_to_json(const CoxeterData& d, const Word& w) {
  ERegion reg = rank_and_embed(d, w);
  json covers = json::array();
  for (const auto& [up, lo] : region_covers(reg))
    covers.push_back(json::array(
        {json::array({up.a, up.b}), json::array({lo.a, lo.b})}));
  return json{{"n", d.rank()},
              {"word", word_to_json(w)},
              {"cells", region_to_json(reg)},
              {"covers", covers}};
}

} // namespace ntlc
