#pragma once

#include <string>

#include <json.hpp>

#include "hermlat/represent.hpp"

namespace hermlat {

// AlgInt as [a, b].
nlohmann::json to_json(const AlgInt& x);
nlohmann::json to_json(const AlgMatrix& x);
// {"m": int, "pseudo": bool, "gram": [[[a, b], ...], ...]}
nlohmann::json to_json(const HermLattice& lattice);
// {"rows": [[[a, b], ...], ...]}
nlohmann::json to_json(const Witness& witness);

// Accepts [a, b], a plain integer, or an expression string such as "-1+w".
AlgInt algint_from_json(const nlohmann::json& j);
AlgMatrix matrix_from_json(const nlohmann::json& j);
// Validates Hermitian symmetry and positivity; m must match when given.
HermLattice lattice_from_json(const nlohmann::json& j);
Witness witness_from_json(const nlohmann::json& j);

// "3", "w", "-w", "2+3w", "1-w", "-1+2w"; whitespace ignored.
AlgInt parse_algint(const std::string& text);

// Inline lattice syntax: "<1,1,2>" or "⟨1,1,2⟩" for diagonal lattices, a JSON
// matrix "[[2,1],[1,2]]" whose entries are integers, [a,b] pairs or strings
// like "-1+w", or a full lattice JSON object.
HermLattice parse_lattice(const Field& field, const std::string& text);

// Shorthand that parse_lattice reads back: "<1,1,2>" when diagonal, the
// matrix form with w-expressions otherwise.
std::string format_gram(const AlgMatrix& gram);

}  // namespace hermlat
