#ifndef BROCARD_ERRORS_HPP_
#define BROCARD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace brocard {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateInput : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class UnsupportedCenter : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OutOfRange : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateFamily : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateFit : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OpenCurveError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class PorismClosureError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace brocard

#endif
