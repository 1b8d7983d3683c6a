#pragma once

#include <stdexcept>
#include <string>

namespace hsl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class AdmissibilityError : public Error { public: using Error::Error; };
class NotFoundError : public Error { public: using Error::Error; };
class UnsupportedModelError : public Error { public: using Error::Error; };
class DegeneracyError : public Error { public: using Error::Error; };
class PoleError : public Error { public: using Error::Error; };
class ConvergenceError : public Error { public: using Error::Error; };
class QuadratureError : public Error { public: using Error::Error; };
class CompositionError : public Error { public: using Error::Error; };
class SupportError : public Error { public: using Error::Error; };
class SamplingError : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class EvaluationError : public Error { public: using Error::Error; };

}  // namespace hsl
