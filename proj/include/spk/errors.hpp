#pragma once

#include <stdexcept>
#include <string>

namespace spk {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact arithmetic
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};
struct VariableMismatch : Error {
    explicit VariableMismatch(const std::string& what) : Error(what) {}
};

// shapes and tableaux
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};
struct ContainmentError : Error {
    explicit ContainmentError(const std::string& what) : Error(what) {}
};

// plactic
struct InconsistentSign : Error {
    explicit InconsistentSign(const std::string& what) : Error(what) {}
};
struct AlphabetMismatch : Error {
    explicit AlphabetMismatch(const std::string& what) : Error(what) {}
};
struct SizeGuardExceeded : Error {
    explicit SizeGuardExceeded(const std::string& what) : Error(what) {}
};

// free algebra
struct InhomogeneousError : Error {
    explicit InhomogeneousError(const std::string& what) : Error(what) {}
};

// Hecke algebra
struct RankMismatch : Error {
    explicit RankMismatch(const std::string& what) : Error(what) {}
};

// input handling
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace spk
