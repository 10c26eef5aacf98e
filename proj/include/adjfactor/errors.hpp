#ifndef ADJFACTOR_ERRORS_HPP
#define ADJFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace af {

enum class Err {
    FieldMismatch,
    DivisionByZero,
    NotInvertible,
    NonSquarefree,
    CharacteristicTooSmall,
    TruncationInsufficient,
    HprimeViolated,
    NotCoprime,
    LiftMismatch,
    NotSeparating,
    VerificationFailed,
    RetryExhausted,
    UnsupportedField,
    RootMismatch,
    SingularTraceForm,
    Parse,
    BadInput,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

inline void check(bool cond, Err code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

}  // namespace af

#endif
