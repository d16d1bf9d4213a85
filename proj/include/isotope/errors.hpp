#ifndef ISOTOPE_ERRORS_HPP
#define ISOTOPE_ERRORS_HPP

#include <stdexcept>

namespace isotope {

// Invalid arguments or violated preconditions. CLI exit code 2.
class invalid_input : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured resource bound was hit. CLI exit code 3.
class cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A verified mathematical property failed to hold. CLI exit code 1.
class check_failure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace isotope

#endif
