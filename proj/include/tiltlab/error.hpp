#pragma once

#include <stdexcept>
#include <string>

namespace tiltlab {

enum class ErrorKind {
  NonAdmissibleIdeal,
  InconsistentRewriting,
  InhomogeneousRelations,
  InvalidGraph,
  UnknownName,
  AlgebraMismatch,
  NotASummand,
  NotBasic,
  NotKleshchev,
  NonAlternatingWord,
  NoSolution,
  WrongAlgebra,
  InvalidComplex,
  InvalidArgument,
  ParseError,
  DivisionByZero,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonAdmissibleIdeal: return "NonAdmissibleIdeal";
    case ErrorKind::InconsistentRewriting: return "InconsistentRewriting";
    case ErrorKind::InhomogeneousRelations: return "InhomogeneousRelations";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotASummand: return "NotASummand";
    case ErrorKind::NotBasic: return "NotBasic";
    case ErrorKind::NotKleshchev: return "NotKleshchev";
    case ErrorKind::NonAlternatingWord: return "NonAlternatingWord";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::WrongAlgebra: return "WrongAlgebra";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tiltlab
