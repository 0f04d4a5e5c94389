#pragma once

#include <stdexcept>
#include <string>

namespace scae {

/// Malformed input: bad arguments, unparsable files, unknown labels.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition or consistency check failed
/// (non-invertible object, coprimality gate, inconsistent category data).
class MathError : public std::domain_error {
public:
    explicit MathError(const std::string& what) : std::domain_error(what) {}
};

} // namespace scae
