#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tothom/obstruct.hpp"

namespace tothom::io {

using Json = nlohmann::json;

/// Raised on malformed files; the message carries path/position context.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kFormatVersion = 1;

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

Json mat_to_json(const SparseMat& m);
SparseMat mat_from_json(const Json& j);

Json complex_to_json(const ComplexPtr& c);
ComplexPtr complex_from_json(const Json& j);

Json chain_map_to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j);

Json graded_map_to_json(const GradedMap& g);
GradedMap graded_map_from_json(const Json& j);

Json bicomplex_to_json(const Bicomplex& b);
Bicomplex bicomplex_from_json(const Json& j);

Json filtered_to_json(const FilteredComplex& f);
FilteredComplex filtered_from_json(const Json& j);

Json hsmap_to_json(const HomotopySimplicialMap& m);
HomotopySimplicialMap hsmap_from_json(const Json& j);

Json hco_to_json(const HomotopyChainObject& x);
HomotopyChainObject hco_from_json(const Json& j);

/// Canonical text rendering; serializing a parsed canonical file reproduces
/// it byte for byte.
std::string render(const Json& j);
Json load_file(const std::string& path);
void save_file(const std::string& path, const Json& j);

}  // namespace tothom::io
