#pragma once

#include <stdexcept>
#include <string>

namespace laurent {

// Precondition or invariant violation: bad grid size, out-of-range index,
// evaluation outside the admissible region, quadrature proximity guard, ...
class guard_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The inputs parsed and passed the guards, but the numbers do not hang
// together (e.g. boundary traces that are not restrictions of one function).
class inconsistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File-level trouble: missing file, malformed JSON, schema mismatch.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace laurent
