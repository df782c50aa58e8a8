#pragma once

#include <stdexcept>
#include <string>

namespace sl3 {

enum class ErrorKind {
    FrozenMutation,
    IndexOutOfRange,
    FlavorMismatch,
    InvalidPermutation,
    InvalidSeed,
    InvalidTriangulation,
    BoundaryEdge,
    SelfGluedQuadrilateral,
    RoleNotFound,
    ChartMismatch,
    MissingChart,
    InvalidTag,
    InvalidKind,
    ParseError,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sl3
