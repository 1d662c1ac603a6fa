#pragma once

#include <stdexcept>
#include <string>

namespace hsd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MixedRings : Error {
    MixedRings() : Error("operands belong to different rings") {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& what) : Error("not a unit: " + what) {}
};

struct BadSymbol : Error {
    explicit BadSymbol(char c) : Error(std::string("bad hex symbol '") + c + "'") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct NotUnitaryLambda : Error {
    NotUnitaryLambda() : Error("lambda*conj(lambda) != 1") {}
};

struct ConditionsNotMet : Error {
    explicit ConditionsNotMet(const std::string& which) : Error("construction conditions not met: " + which) {}
};

struct BadEpsilon : Error {
    BadEpsilon() : Error("epsilon*conj(epsilon) != 1") {}
};

struct BadDelta : Error {
    BadDelta() : Error("<delta,delta>_H != 1") {}
};

struct InputNotSelfDual : Error {
    InputNotSelfDual() : Error("input generator matrix is not Hermitian self-dual") {}
};

struct NotStandardForm : Error {
    NotStandardForm() : Error("generator matrix is not in standard form (I | X)") {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

struct NoProgress : Error {
    NoProgress() : Error("information-set bound cannot be raised") {}
};

struct UnknownEnumeratorLength : Error {
    explicit UnknownEnumeratorLength(int n)
        : Error("no weight enumerator formula for length " + std::to_string(n)) {}
};

struct UnknownFixture : Error {
    explicit UnknownFixture(const std::string& id) : Error("unknown fixture table: " + id) {}
};

struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& what) : Error("invalid search config: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace hsd
