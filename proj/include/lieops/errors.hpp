#pragma once

#include <stdexcept>
#include <string>

namespace lieops {

struct UnsupportedAlgebra : std::runtime_error {
    explicit UnsupportedAlgebra(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotInLevi : std::runtime_error {
    explicit NotInLevi(const std::string& what) : std::runtime_error(what) {}
};

struct NotInVplus : std::runtime_error {
    explicit NotInVplus(const std::string& what) : std::runtime_error(what) {}
};

struct NotInVminus : std::runtime_error {
    explicit NotInVminus(const std::string& what) : std::runtime_error(what) {}
};

struct LetterNotInNbar : std::runtime_error {
    explicit LetterNotInNbar(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCharacterEquation : std::runtime_error {
    explicit DegenerateCharacterEquation(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lieops
