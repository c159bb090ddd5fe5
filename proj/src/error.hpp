// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wsnet {

enum class ErrorCode {
    Usage,       // invalid arguments, flags or configuration
    Io,          // file system failure
    Parse,       // malformed input document (XML/JSON/CSV syntax)
    Schema,      // well-formed input violating a structural rule
    EmptyInput,  // nothing to work on
    Mismatch,    // incompatible operands (e.g. diff across metrics)
    Undefined,   // result undefined for this input
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace wsnet
