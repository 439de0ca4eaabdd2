#ifndef EVSIM_ERRORS_HPP
#define EVSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evsim {

// Thrown when a computation leaves its mathematical domain (e.g. the
// continued permittivity becomes non-positive so kappa would be complex).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Thrown on malformed configuration input.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace evsim

#endif
