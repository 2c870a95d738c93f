#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ecid/algebra.hpp"
#include "ecid/classify.hpp"
#include "ecid/codes.hpp"
#include "ecid/cyclotomic.hpp"

namespace ecid {

using Json = nlohmann::ordered_json;

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
/// Throws ParseError on unreadable files and malformed JSON.
Json load_json_arg(const std::string& arg);

/// {"p":5,"degree":2,"modulus":[2,4,1]}; degree defaults to 1, modulus is optional.
FieldPtr field_from_json(const Json& j);
Json field_to_json(const FiniteField& f);

/// One of {"abelian":[...]}, {"permutations":[...], "degree":m, "elements":[...]},
/// {"cayley":[[...]], "labels":[...]}. Permutations are one-line image lists or cycle strings.
Group group_from_json(const Json& j, std::size_t cap = Group::kDefaultOrderCap);

/// {"invariants":{"order":..,"abelianization_order":..,"class_count":..,"t_w":..,"phi_exponent":..}}
/// describes a non-abelian group only through its arithmetic.
bool is_invariants_group(const Json& j);
NonabelianInvariants invariants_from_json(const Json& j);

/// {"coeffs":[...]} (integers or coefficient lists), {"digits":"1122..."}, {"hat":"group"|"commutator"},
/// {"one_minus_hat":"group"|"commutator"}.
AlgebraElement element_from_json(const Json& j, FieldPtr field, const Group& g);
Json element_to_json(const AlgebraElement& e);

/// {"r":3,"noncommutative":[[2,1],[3,1]]}
WedderburnData wedderburn_from_json(const Json& j);
Json to_json(const WedderburnData& wd);

Json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const Json& j);

Json to_json(const CodeReport& r);
CodeReport code_report_from_json(const Json& j);

Json to_json(const QOrbitData& d);
Json to_json(const SplittingVerdict& v);

}  // namespace ecid
