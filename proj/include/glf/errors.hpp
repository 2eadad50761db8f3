#pragma once

#include <stdexcept>
#include <string>

namespace glf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define GLF_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                        \
  public:                                                            \
    explicit Name(const std::string& what) : Error(what) {}         \
    const char* kind() const noexcept override { return #Name; }     \
  };

GLF_DEFINE_ERROR(PoleError)
GLF_DEFINE_ERROR(DomainError)
GLF_DEFINE_ERROR(AccuracyError)
GLF_DEFINE_ERROR(BranchError)
GLF_DEFINE_ERROR(OverflowError)
GLF_DEFINE_ERROR(ConvergenceError)
GLF_DEFINE_ERROR(SingularSetError)
GLF_DEFINE_ERROR(PoleProximityError)
GLF_DEFINE_ERROR(OrbitProximityError)
GLF_DEFINE_ERROR(SingularityError)
GLF_DEFINE_ERROR(StepError)
GLF_DEFINE_ERROR(ParameterError)
GLF_DEFINE_ERROR(FitError)

#undef GLF_DEFINE_ERROR

}  // namespace glf
