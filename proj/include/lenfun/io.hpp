#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "lenfun/ideals.hpp"
#include "lenfun/lengths.hpp"
#include "lenfun/spectrum.hpp"
#include "lenfun/zmod.hpp"

namespace lenfun {

/// Malformed input file (bad JSON or wrong schema). Semantic problems in
/// well-formed files (unknown primes, invalid cuts, inconsistent class
/// data) surface as std::invalid_argument instead.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json spectrum_to_json(const SpectrumTree& tree);
SpectrumTree parse_spectrum(const Json& j);

Json ideal_to_json(const IdealDescriptor& i);
IdealDescriptor parse_ideal(const Json& j);

Json lengthfn_to_json(const CanonicalLengthFn& l);
Json lengthfn_to_json(const ZLengthFn& l);

/// A length-function file holds canonical tree data, an integer-backend
/// descriptor, or the prime set of a spectral operation.
using LengthFnFile = std::variant<CanonicalLengthFn, ZLengthFn, std::set<PrimeId>>;
LengthFnFile parse_lengthfn(const Json& j);

/// Integer-backend module file: a presentation matrix with its generator
/// count.
struct ZModuleFile {
    int generators = 0;
    IntMatrix presentation;
};
ZModuleFile parse_zmodule(const Json& j);

/// Integer-backend principal ideal file.
ZIdeal parse_zideal(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace lenfun
