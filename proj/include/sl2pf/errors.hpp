#pragma once

#include <stdexcept>
#include <string>

namespace sl2pf {

enum class Errc {
    // field / polynomial arithmetic
    NotPrime,
    EvenCharacteristic,
    ReducibleModulus,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    InexactDivision,
    BothZero,
    NotConstant,
    ParseError,
    // residue arithmetic
    ZeroOrConstant,
    NotCoprime,
    SearchExhausted,
    InvalidD,
    NonConstantResidue,
    NotAnRthPower,
    NotPrimePoly,
    // matrices and words
    NonUnitDeterminant,
    FamilyMismatch,
    BadArity,
    ZeroUnit,
    NotUnipotent,
    NoUnitAdjustment,
    NotSL2,
    QuintupleNotSL2,
    // decomposition pipeline
    PreconditionShape,
    PreconditionViolated,
    NotCoprimeExponents,
    ArityMismatch,
    BadLength,
    NotUnimodular,
    DegreeCapExceeded,
    InternalCheck,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace sl2pf
