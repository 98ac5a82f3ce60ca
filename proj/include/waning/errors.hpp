#pragma once

#include <stdexcept>
#include <string>

namespace waning {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A value outside the domain of an operation (e.g. inverse reindexing of a
  // removed point, a malformed partial bijection).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class NotWaning : public Error {
   public:
    using Error::Error;
  };

  class OmegaEntries : public Error {
   public:
    using Error::Error;
  };

  class InvalidDescriptor : public Error {
   public:
    using Error::Error;
  };

  class NotMember : public Error {
   public:
    using Error::Error;
  };

  class InvalidR : public Error {
   public:
    using Error::Error;
  };

  class NoWitness : public Error {
   public:
    using Error::Error;
  };

  class BadBase : public Error {
   public:
    using Error::Error;
  };

  class InvalidPoset : public Error {
   public:
    using Error::Error;
  };

  class BoundTooLarge : public Error {
   public:
    using Error::Error;
  };

  class UnknownSuite : public Error {
   public:
    using Error::Error;
  };

  // Malformed serialized input (wrong JSON shape or token).
  class FormatError : public Error {
   public:
    using Error::Error;
  };

}  // namespace waning
