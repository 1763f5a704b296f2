#ifndef SPLITROOT_ERROR_HPP
#define SPLITROOT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace splitroot {

// Malformed input text (edge list, graph6, class names).
class parse_error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// A documented precondition was violated: disconnected input, size guard,
// invalid partition, out-of-range vertex.
class precondition_error : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// A self-check failed. Always an implementation bug.
class internal_error : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace splitroot

#endif
