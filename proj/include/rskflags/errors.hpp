#pragma once

#include <stdexcept>
#include <string>

namespace rskflags {

struct MalformedTableau : std::runtime_error {
    explicit MalformedTableau(const std::string& what) : std::runtime_error(what) {}
};

struct GappedContent : std::runtime_error {
    explicit GappedContent(const std::string& what) : std::runtime_error(what) {}
};

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotAntilexOrdered : std::runtime_error {
    explicit NotAntilexOrdered(const std::string& what) : std::runtime_error(what) {}
};

struct NotLexOrdered : std::runtime_error {
    explicit NotLexOrdered(const std::string& what) : std::runtime_error(what) {}
};

struct NotSemistandard : std::runtime_error {
    explicit NotSemistandard(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct MembershipError : std::runtime_error {
    explicit MembershipError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeConflict : std::runtime_error {
    explicit ShapeConflict(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct NotStable : std::runtime_error {
    explicit NotStable(const std::string& what) : std::runtime_error(what) {}
};

struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rskflags
