#pragma once

#include <stdexcept>
#include <string>

namespace fdsat {

// Error classes map 1:1 onto the CLI exit-code contract:
//   1 = validation (bad input values, bad config, bad ranges)
//   2 = I/O (unreadable or unwritable files)
//   3 = no common visibility (geometry constraint unsatisfiable)
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoVisibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Validation error with a source location inside a scenario document.
struct ParseError : ValidationError {
    ParseError(const std::string& message, int line_no, int column_no)
        : ValidationError(message + " (line " + std::to_string(line_no) +
                          ", column " + std::to_string(column_no) + ")"),
          line(line_no),
          column(column_no) {}

    int line;
    int column;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitIo = 2,
    kExitNoVisibility = 3,
};

}  // namespace fdsat
