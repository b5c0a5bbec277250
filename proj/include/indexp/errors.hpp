#ifndef INDEXP_ERRORS_HPP
#define INDEXP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace indexp {

// Invalid user input: bad files, non-groups, violated preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A verified mathematical identity failed; signals a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void check_input(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw InternalError(msg);
}

} // namespace indexp

#endif
