#pragma once

#include <stdexcept>
#include <string>

namespace frob {

enum class Errc {
    DivisionByZero,
    RingMismatch,
    BadFrobeniusPower,
    CapExceeded,
    ZeroModule,
    UnsupportedNonReduced,
    NonStabilized,
    InternalInconsistency,
    SaturationCapExceeded,
    ParseError,
    UnknownName,
    CompositeCharacteristic,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/// Parse errors carry a 1-based line/column of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(Errc::ParseError, msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace frob
