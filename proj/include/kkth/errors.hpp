#pragma once

#include <stdexcept>
#include <string>

namespace kkth {

// Exit-code class of an error, as surfaced by the command line tool.
enum class ErrorKind { Validation, Computation, Bound };

class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail.empty()         ? name
                           : detail.front() == '(' ? name + detail
                                                   : name + ": " + detail),
        name_(std::move(name)),
        kind_(kind) {}

  const std::string& name() const noexcept { return name_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string name_;
  ErrorKind kind_;
};

#define KKTH_DEFINE_ERROR(Name, Kind)                                    \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& detail = {})                        \
        : Error(#Name, ErrorKind::Kind, detail) {}                       \
  };

// exactalg
KKTH_DEFINE_ERROR(DimensionMismatch, Computation)
KKTH_DEFINE_ERROR(IllDefinedHom, Computation)
KKTH_DEFINE_ERROR(CompositionNotZero, Computation)
KKTH_DEFINE_ERROR(NotChainMap, Computation)
KKTH_DEFINE_ERROR(InfiniteInput, Computation)
KKTH_DEFINE_ERROR(BoundExceeded, Bound)

// kgraph
KKTH_DEFINE_ERROR(NonCommutingMatrices, Validation)
KKTH_DEFINE_ERROR(SourceAtVertex, Validation)
KKTH_DEFINE_ERROR(NotInvolutive, Validation)
KKTH_DEFINE_ERROR(IncompatibleInvolution, Validation)
KKTH_DEFINE_ERROR(NegativeEntry, Validation)
KKTH_DEFINE_ERROR(MalformedSpec, Validation)

// spectral
KKTH_DEFINE_ERROR(AmbiguousComplexPart, Computation)
KKTH_DEFINE_ERROR(NoSolution, Computation)

// cli
KKTH_DEFINE_ERROR(ParseError, Validation)

#undef KKTH_DEFINE_ERROR

}  // namespace kkth
