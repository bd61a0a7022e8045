#pragma once

#include <stdexcept>
#include <string>

namespace negcurv {

// Root of every failure raised by the library. Subclasses name the
// contract that was broken so callers can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class DegeneratePlane : public Error {
 public:
  using Error::Error;
};

class DomainExited : public Error {
 public:
  DomainExited(const std::string& what, double exit_time)
      : Error(what), exit_time_(exit_time) {}
  double exit_time() const { return exit_time_; }

 private:
  double exit_time_;
};

class StepTooLarge : public Error {
 public:
  StepTooLarge(const std::string& what, double drift)
      : Error(what), drift_(drift) {}
  double drift() const { return drift_; }

 private:
  double drift_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_length, double residual)
      : Error(what), best_length_(best_length), residual_(residual) {}
  double best_length() const { return best_length_; }
  double residual() const { return residual_; }

 private:
  double best_length_;
  double residual_;
};

class NotAGeodesic : public Error {
 public:
  using Error::Error;
};

}  // namespace negcurv
