#pragma once

#include <stdexcept>
#include <string>

namespace trilab {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySpan : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidTriple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidSize : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidQuery : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trilab
