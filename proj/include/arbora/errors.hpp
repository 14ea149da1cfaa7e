#ifndef ARBORA_ERRORS_HPP
#define ARBORA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arbora {

/// A configured effort limit (degree budget, recombination budget, ...)
/// was exhausted before the requested computation finished.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace arbora

#endif
