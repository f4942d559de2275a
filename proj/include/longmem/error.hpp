#pragma once

#include <stdexcept>
#include <string>

namespace longmem {

// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the set where the model or kernel is defined.
class domain_error : public error {
public:
  using error::error;
};

// An index, bandwidth or size argument is out of the admissible range.
class range_error : public error {
public:
  using error::error;
};

// Two inputs that must have equal length do not.
class shape_error : public error {
public:
  using error::error;
};

// A request for zero items (e.g. K = 0 coefficients).
class empty_request_error : public error {
public:
  using error::error;
};

// Input data cannot support the computation (constant series, zero ordinates).
class degenerate_input_error : public error {
public:
  using error::error;
};

// Loss of positive definiteness or a failed numerical routine.
class numerical_error : public error {
public:
  using error::error;
};

// Regressor matrix does not have full column rank.
class rank_error : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class io_error : public error {
public:
  using error::error;
};

// Malformed file contents. Carries the 1-based data row when known.
class parse_error : public io_error {
public:
  parse_error(const std::string &what, std::size_t row = 0)
      : io_error(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

class missing_column_error : public io_error {
public:
  using io_error::io_error;
};

// A bundled resource is absent or fails its integrity check.
class resource_error : public io_error {
public:
  using io_error::io_error;
};

} // namespace longmem
