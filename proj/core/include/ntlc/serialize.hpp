// JSON/CSV/DOT/TikZ import and export for all public value types.
#pragma once

#include "ntlc/verify.hpp"
#include "ntlc/weightrep.hpp"

#include <json.hpp>

#include <string>

namespace ntlc {

// Words: JSON array of letters.  Documents wrapping a word as {"word": [...]}
// are accepted on input.
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// Regions: JSON list of [column, rank] pairs.
nlohmann::json region_to_json(const ERegion& r);
ERegion region_from_json(int n, const nlohmann::json& j);

// Elements: {"zero": true} for 0, otherwise a list of
// {"word": [...], "num": ..., "den": ...} terms.  Input also accepts a bare
// word document, read as the basis element of that word.
nlohmann::json element_to_json(const TElement& a);
TElement element_from_json(const CoxeterData& d, const nlohmann::json& j);

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

// Matrices: {"n": n, "entries": [{"row": w, "col": w, "poly": {exp: coeff}}]}.
nlohmann::json matrix_to_json(const WeightMatrix& m);
WeightMatrix matrix_from_json(const nlohmann::json& j);

// CSV lines "row,col,exponent" for matrices whose entries are all monomials
// with unit coefficient; anything else is a domain error.
std::string matrix_to_csv(const WeightMatrix& m);

nlohmann::json module_to_json(const FiniteModule& mod);
FiniteModule module_from_json(const CoxeterData& d, const nlohmann::json& j);

nlohmann::json enumeration_to_json(const EnumerationReport& rep);

nlohmann::json verify_to_json(const VerifyReport& rep);

// Heap drawings over the embedded region; vertices are cells, edges the
// covering pairs (upper -> lower).
std::string heap_to_dot(const CoxeterData& d, const Word& w);
std::string heap_to_tikz(const CoxeterData& d, const Word& w);
nlohmann::json heap_to_json(const CoxeterData& d, const Word& w);

} // namespace ntlc
