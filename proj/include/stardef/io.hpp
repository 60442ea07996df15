#ifndef STARDEF_IO_HPP
#define STARDEF_IO_HPP

// JSON reports and input files.

#include <string>

#include <json.hpp>

#include "stardef/positivity_bridge.hpp"

namespace stardef {

using Json = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string& path);

Json to_json(const Series& s);
Json to_json(const Sign& s);
Json to_json(const Point& x);
Json to_json(const LawReport& r);
Json to_json(const PositivityReport& r);
Json to_json(const CauchySchwarzReport& r);
/// Sparse form: [[output index, input indices..., value], ...].
Json to_json(const Cochain& c);
Json to_json(const CohomologyReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const ObstructionClass& o);
Json to_json(const DeformationCandidate& c);
Json to_json(const FinitePositivityReport& r);
Json to_json(const ManyPositiveReport& r);

/// `weyl:n=2`, `wick:n=1`, `expderiv:file=path`.
StarProduct parse_product(const std::string& spec, std::size_t order);
/// Derivation file: {"frame": "real:1", "scale": "1", "degree_bound": 3,
/// "derivations": [{"q1": "1", "p1": "q1"}, ...]} with D = sum coeff_v d_v.
StarProduct product_from_json(const Json& j, std::size_t order);

/// `matrix:2`, `grassmann:3`, `dual`, or a JSON file path.
FiniteStarAlgebra parse_algebra(const std::string& spec);
/// {"name": .., "dim": d, "labels": [..], "constants": [[i, j, k, "c"], ..],
///  "involution": [[i, k, "c"], ..] meaning e_i* = sum c e_k, "unit": ["1", "0", ..]}.
FiniteStarAlgebra algebra_from_json(const Json& j);

/// [{"point": ["0", "0"], "op": [{"alpha": [0, 0], "coeff": "1"}], "weight": "1"}, ..]
/// wrapped as {"frame": "real:1", "terms": [..]}. A missing op means evaluation.
ClassicalFunctional functional_from_json(const Json& j);

Cochain cochain_from_json(const FiniteStarAlgebra& a, std::size_t arity, const Json& j);
/// {"algebra": spec or object, "terms": [sparse 2-cochain, ..]}.
DeformationCandidate candidate_from_json(const Json& j);

}  // namespace stardef

#endif
