#pragma once

#include <stdexcept>
#include <string>

namespace walkmeg {

/// Raised for out-of-domain inputs: non-finite angles, unknown coin names,
/// malformed density or process matrices.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// A process matrix with an eigenvalue below -1e-6.
class NotCompletelyPositive : public std::domain_error {
 public:
  explicit NotCompletelyPositive(const std::string& what) : std::domain_error(what) {}
};

/// Requests whose cost exceeds a hard guard (e.g. 2^T enumeration with T > 24).
class ResourceLimit : public std::length_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::length_error(what) {}
};

/// Maximal entanglement for every initial coin state is impossible below three steps.
class NoMegPossible : public std::domain_error {
 public:
  explicit NoMegPossible(const std::string& what) : std::domain_error(what) {}
};

}  // namespace walkmeg
