#ifndef QWALK_ERRORS_HPP
#define QWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwalk {

// Rejected construction input: bad edge lists, out-of-range parameters,
// non-unitary custom operators. Maps to CLI exit code 1.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A runtime invariant broke: norm drift, probability leak, ancilla leak,
// or an oracle tally that disagrees with its closed form. Maps to CLI
// exit code 2.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qwalk

#endif
