#ifndef HIPROP_ERRORS_HPP
#define HIPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hiprop {

// A caller-supplied value violates a precondition (bad range, bad geometry).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// The closed-form chain is singular for these parameters (e.g. no reverse-lane
// traffic, so the stop state can never be entered and 1/sigma1 diverges).
class degenerate_model : public std::domain_error {
public:
    explicit degenerate_model(const std::string& what) : std::domain_error(what) {}
};

// The slot budget is too small to exit warm-up and measure anything.
class under_budget : public std::runtime_error {
public:
    explicit under_budget(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem write failed; message carries the path.
class io_failure : public std::runtime_error {
public:
    explicit io_failure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hiprop

#endif // HIPROP_ERRORS_HPP
