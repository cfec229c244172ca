// errors.hpp: error taxonomy and resource budgets shared by all components.
#ifndef NULLKIT_ERRORS_HPP
#define NULLKIT_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nullkit {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text. `line`/`column` are 1-based; column 0 means "whole line".
struct parse_error : error {
    parse_error(std::string msg, int line_, int column_ = 0)
        : error(std::move(msg)), line(line_), column(column_) {}
    int line;
    int column;
};

// Operands live in different polynomial rings.
struct ring_error : error {
    using error::error;
};

// A configured budget (pair count, matrix size, enumeration size) was exhausted.
struct resource_error : error {
    using error::error;
};

// An enumeration cap was too small for complete output.
struct cap_error : error {
    using error::error;
};

// The operation requires a different class of input (e.g. monomial generators).
struct input_class_error : error {
    using error::error;
};

// Tripwire for conditions that indicate a bug, never expected on valid input.
struct internal_error : error {
    using error::error;
};

struct Budgets {
    std::size_t max_pairs = 100000;            // Buchberger S-pair budget
    std::size_t max_matrix_entries = 10000000; // dense exact-elimination budget
    std::size_t max_enumeration = 2000000;     // monomial enumeration budget

    void check_matrix(std::size_t rows, std::size_t cols) const {
        if (rows != 0 && cols != 0 && rows > max_matrix_entries / cols)
            throw resource_error("matrix budget exceeded: " + std::to_string(rows) + " x " +
                                 std::to_string(cols) + " entries (budget " +
                                 std::to_string(max_matrix_entries) + ")");
    }
};

} // namespace nullkit

#endif
