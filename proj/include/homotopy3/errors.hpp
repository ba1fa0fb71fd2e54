#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace h3 {

// Failure categories. The CLI maps these onto exit codes: axiom-style
// failures -> 1, input problems -> 2, size limits -> 3.
enum class Errc {
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotClosed,
    NotHomomorphism,
    NotAction,
    NotNormal,
    NotAbelian,
    C1Violation,
    C2Violation,
    AxiomViolation,
    IdentityViolation,
    DepthTooShallow,
    MooreTooLong,
    HypothesisFailed,
    SizeBound,
    TooLarge,
    ParseError,
    BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string message, std::string axiom = {},
          std::vector<std::string> witnesses = {})
        : std::runtime_error(message),
          code_(code),
          axiom_(std::move(axiom)),
          witnesses_(std::move(witnesses)) {}

    Errc code() const { return code_; }
    // Axiom identifier ("C2", "square.4", "2CM3(i)", ...) when applicable.
    const std::string& axiom() const { return axiom_; }
    // Witness elements, already rendered with labels.
    const std::vector<std::string>& witnesses() const { return witnesses_; }

    bool is_axiom_failure() const;
    bool is_size_failure() const {
        return code_ == Errc::SizeBound || code_ == Errc::TooLarge;
    }

  private:
    Errc code_;
    std::string axiom_;
    std::vector<std::string> witnesses_;
};

}  // namespace h3
