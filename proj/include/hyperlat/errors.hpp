#pragma once

#include <stdexcept>
#include <string>

namespace hyperlat {

// Error kinds map onto CLI exit codes: input errors exit 2, violated
// mathematical assertions exit 1, exceeded iteration caps exit 3.
enum class ErrorKind {
    input,
    math_assertion,
    cap_exceeded,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

    int exit_code() const {
        switch (kind_) {
            case ErrorKind::math_assertion: return 1;
            case ErrorKind::input: return 2;
            case ErrorKind::cap_exceeded: return 3;
        }
        return 1;
    }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error input_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::input, code, what);
}
inline Error math_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::math_assertion, code, what);
}
inline Error cap_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::cap_exceeded, code, what);
}

}  // namespace hyperlat
