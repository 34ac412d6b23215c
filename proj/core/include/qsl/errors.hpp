// Exception types shared across the library. Plain std exceptions are used
// for shape/domain/index violations; the subclasses below exist where callers
// need to tell failure modes apart.

#pragma once

#include <stdexcept>
#include <string>

namespace qsl {

// Matrix is singular within the pivot tolerance of the eliminator.
class singular_error : public std::runtime_error {
public:
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// Ancilla post-selection retained almost no probability mass.
class post_selection_error : public std::runtime_error {
public:
    explicit post_selection_error(const std::string& what) : std::runtime_error(what) {}
};

// Training loss became non-finite; carries the offending epoch.
class divergence_error : public std::runtime_error {
public:
    divergence_error(const std::string& what, int epoch)
        : std::runtime_error(what), epoch(epoch) {}
    int epoch;
};

// Malformed input file; carries the 1-based line number.
class data_format_error : public std::runtime_error {
public:
    data_format_error(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    long line;
};

} // namespace qsl
