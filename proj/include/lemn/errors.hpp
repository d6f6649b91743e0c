#pragma once

#include <stdexcept>
#include <string>

namespace lemn {

// Base class for all domain errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand must be odd (coprime to 1+i) and nonzero.
struct not_odd_error : error {
    explicit not_odd_error(const std::string& what) : error(what) {}
};

struct zero_error : error {
    explicit zero_error(const std::string& what) : error(what) {}
};

struct not_coprime_error : error {
    explicit not_coprime_error(const std::string& what) : error(what) {}
};

struct not_divisible_error : error {
    explicit not_divisible_error(const std::string& what) : error(what) {}
};

struct not_separable_error : error {
    explicit not_separable_error(const std::string& what) : error(what) {}
};

struct not_squarefree_error : error {
    explicit not_squarefree_error(const std::string& what) : error(what) {}
};

struct degenerate_pair_error : error {
    explicit degenerate_pair_error(const std::string& what) : error(what) {}
};

struct pole_error : error {
    explicit pole_error(const std::string& what) : error(what) {}
};

struct precision_failure_error : error {
    explicit precision_failure_error(const std::string& what) : error(what) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// A computed object violates a structural theorem it is required to satisfy.
// This signals a bug in the library, never bad input.
struct internal_inconsistency_error : error {
    explicit internal_inconsistency_error(const std::string& what) : error(what) {}
};

}  // namespace lemn
