#ifndef SSKM_ERRORS_HPP
#define SSKM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sskm {

// Base for library-specific failures. Precondition violations on plain
// arguments throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pairwise separator could not reach zero training error.
class NonSeparableError : public Error {
 public:
  using Error::Error;
};

// train_all_pairs failed on a specific ordered label pair.
class TrainingError : public Error {
 public:
  TrainingError(const std::string& msg, int label_a, int label_b)
      : Error(msg), label_a(label_a), label_b(label_b) {}
  int label_a = 0;
  int label_b = 0;
};

class DegenerateRadiusError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace sskm

#endif  // SSKM_ERRORS_HPP
