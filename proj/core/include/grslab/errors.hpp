#pragma once

#include <stdexcept>
#include <string>

namespace grslab {

// Exit-code taxonomy used by the CLI: parameter 2, format 3, attack 4,
// decryption 5.  Everything else is an internal error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

// Structured attack failure; `stage` names the pipeline stage that gave up.
struct AttackError : Error {
    std::string stage;
    AttackError(std::string stage_, const std::string& what_)
        : Error(stage_ + ": " + what_), stage(std::move(stage_)) {}
};

struct DecryptionError : Error {
    using Error::Error;
};

struct MathError : Error {
    using Error::Error;
};

#define GRSLAB_CHECK(cond, msg)                      \
    do {                                             \
        if (!(cond)) throw ::grslab::MathError(msg); \
    } while (0)

}  // namespace grslab
