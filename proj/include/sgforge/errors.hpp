#pragma once

#include <stdexcept>
#include <string>

namespace sgforge {

// Every failure the library can signal.  CLI maps these to exit code 2.
enum class errc {
    empty_generators,
    zero_or_negative,
    generator_too_large,
    not_numerical,
    m_not_in_semigroup,
    table_too_large,
    overflow,

    wrong_multiplicity,
    invalid_kunz_point,
    outside_cone,
    not_interior,

    not_increasing,
    invalid_characteristic,
    not_planar,
    not_minimal_generators,

    not_well_parameterized,
    divergence,
    invalid_curve,
    nonzero_constant_term,

    precondition_failed,
    witness_verification_failed,
    wrong_family,

    parse_error,
    duplicate_coordinate,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_generators:            return "EmptyGenerators";
        case errc::zero_or_negative:            return "ZeroOrNegative";
        case errc::generator_too_large:         return "GeneratorTooLarge";
        case errc::not_numerical:               return "NotNumerical";
        case errc::m_not_in_semigroup:          return "MNotInSemigroup";
        case errc::table_too_large:             return "TableTooLarge";
        case errc::overflow:                    return "Overflow";
        case errc::wrong_multiplicity:          return "WrongMultiplicity";
        case errc::invalid_kunz_point:          return "InvalidKunzPoint";
        case errc::outside_cone:                return "OutsideCone";
        case errc::not_interior:                return "NotInterior";
        case errc::not_increasing:              return "NotIncreasing";
        case errc::invalid_characteristic:      return "InvalidCharacteristic";
        case errc::not_planar:                  return "NotPlanar";
        case errc::not_minimal_generators:      return "NotMinimalGenerators";
        case errc::not_well_parameterized:      return "NotWellParameterized";
        case errc::divergence:                  return "Divergence";
        case errc::invalid_curve:               return "InvalidCurve";
        case errc::nonzero_constant_term:       return "NonzeroConstantTerm";
        case errc::precondition_failed:         return "PreconditionFailed";
        case errc::witness_verification_failed: return "WitnessVerificationFailed";
        case errc::wrong_family:                return "WrongFamily";
        case errc::parse_error:                 return "ParseError";
        case errc::duplicate_coordinate:        return "DuplicateCoordinate";
        case errc::io_error:                    return "IoError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace sgforge
