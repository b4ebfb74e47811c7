#pragma once

#include <stdexcept>
#include <string>

namespace goldentiles {

// Error taxonomy for the exact-arithmetic pipeline. Everything derives from
// std::runtime_error so callers can catch broadly; the distinct types exist
// because tests and the CLI report them individually.

struct NotRepresentable : std::runtime_error {
    explicit NotRepresentable(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedExpr : std::runtime_error {
    explicit UnsupportedExpr(const std::string& what) : std::runtime_error(what) {}
};

struct NotIdentified : std::runtime_error {
    explicit NotIdentified(const std::string& what) : std::runtime_error(what) {}
};

struct Degenerate : std::runtime_error {
    explicit Degenerate(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct UnderDetermined : std::runtime_error {
    explicit UnderDetermined(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct SearchTooLarge : std::runtime_error {
    explicit SearchTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPair : std::runtime_error {
    explicit InvalidPair(const std::string& what) : std::runtime_error(what) {}
};

struct CatalogIncomplete : std::runtime_error {
    explicit CatalogIncomplete(const std::string& what) : std::runtime_error(what) {}
};

struct NotInjective : std::runtime_error {
    explicit NotInjective(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousNaming : std::runtime_error {
    explicit AmbiguousNaming(const std::string& what) : std::runtime_error(what) {}
};

struct NoMatch : std::runtime_error {
    explicit NoMatch(const std::string& what) : std::runtime_error(what) {}
};

struct MatrixMismatch : std::runtime_error {
    size_t row, col;
    MatrixMismatch(size_t r, size_t c, const std::string& what)
        : std::runtime_error(what + " at cell (" + std::to_string(r + 1) + "," +
                             std::to_string(c + 1) + ")"),
          row(r), col(c) {}
};

} // namespace goldentiles
