#pragma once

#include <stdexcept>
#include <string>

namespace curate {

/// Coarse error class; the CLI maps it onto its exit status.
enum class ErrorKind { Usage, Data, Internal };

/// Base of every error raised by the toolkit. `code()` is a stable,
/// machine-parsable identifier (e.g. "SchemaError").
class Error : public std::runtime_error {
 public:
  Error(std::string code, ErrorKind kind, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)), kind_(kind) {}

  const std::string& code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string code_;
  ErrorKind kind_;
};

#define CURATE_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, Kind, what) {} \
  };

CURATE_DEFINE_ERROR(UsageError, ErrorKind::Usage)
CURATE_DEFINE_ERROR(IoError, ErrorKind::Data)
CURATE_DEFINE_ERROR(ParseError, ErrorKind::Data)
CURATE_DEFINE_ERROR(SchemaError, ErrorKind::Data)
CURATE_DEFINE_ERROR(DuplicateIdError, ErrorKind::Data)
CURATE_DEFINE_ERROR(EmptyInputError, ErrorKind::Data)
CURATE_DEFINE_ERROR(ZeroMassError, ErrorKind::Data)
CURATE_DEFINE_ERROR(ArityError, ErrorKind::Data)
CURATE_DEFINE_ERROR(RangeError, ErrorKind::Data)
CURATE_DEFINE_ERROR(TooLargeError, ErrorKind::Data)
CURATE_DEFINE_ERROR(SizeError, ErrorKind::Data)
CURATE_DEFINE_ERROR(OneClassError, ErrorKind::Data)
CURATE_DEFINE_ERROR(EmptyError, ErrorKind::Data)
CURATE_DEFINE_ERROR(DuplicateFrameError, ErrorKind::Data)
CURATE_DEFINE_ERROR(DuplicatePairError, ErrorKind::Data)
CURATE_DEFINE_ERROR(LengthMismatchError, ErrorKind::Data)
CURATE_DEFINE_ERROR(MissingCellError, ErrorKind::Data)
CURATE_DEFINE_ERROR(StrictModeError, ErrorKind::Data)
CURATE_DEFINE_ERROR(InvariantError, ErrorKind::Internal)

#undef CURATE_DEFINE_ERROR

}  // namespace curate
