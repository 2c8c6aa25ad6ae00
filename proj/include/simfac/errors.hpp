#ifndef SIMFAC_ERRORS_HPP
#define SIMFAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simfac {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& msg = "zero input where a nonzero rational is required")
        : Error(msg) {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& msg = "degenerate quadratic form (zero coefficient)")
        : Error(msg) {}
};

struct NotRepresented : Error {
    explicit NotRepresented(const std::string& msg) : Error(msg) {}
};

// A constructive search hit its configured bound. Always distinguishable
// from a negative decision: decisions are exact and never raise this.
struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

struct Undecided : Error {
    explicit Undecided(const std::string& msg) : Error(msg) {}
};

struct InvalidPresentation : Error {
    explicit InvalidPresentation(const std::string& msg) : Error(msg) {}
};

struct NotASimilarityFactor : Error {
    explicit NotASimilarityFactor(const std::string& msg) : Error(msg) {}
};

struct NotAMultiplier : Error {
    explicit NotAMultiplier(const std::string& msg) : Error(msg) {}
};

struct MalformedCertificate : Error {
    explicit MalformedCertificate(const std::string& msg) : Error(msg) {}
};

struct GenerationExhausted : Error {
    explicit GenerationExhausted(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Internal consistency violation: a cross-check between two independent
// computation routes failed. Indicates a library bug, never bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace simfac

#endif
