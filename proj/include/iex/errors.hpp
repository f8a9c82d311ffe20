#pragma once

#include <stdexcept>
#include <string>

namespace iex {

// Error classes, grouped by the exit code the CLI maps them to.
enum class errc { parse = 2, domain = 3, not_admissible = 4, connection = 5, budget = 6 };

class Error : public std::runtime_error {
public:
  Error(errc cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  errc cls() const noexcept { return cls_; }

private:
  errc cls_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(errc::parse, w) {}
};

struct NonSquareFreeRadicand : Error {
  explicit NonSquareFreeRadicand(const std::string& w) : Error(errc::domain, w) {}
};
struct NegativeRadicand : Error {
  explicit NegativeRadicand(const std::string& w) : Error(errc::domain, w) {}
};
struct RadicandMismatch : Error {
  explicit RadicandMismatch(const std::string& w) : Error(errc::domain, w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error(errc::domain, w) {}
};
struct NonIntegralCoefficients : Error {
  explicit NonIntegralCoefficients(const std::string& w) : Error(errc::domain, w) {}
};
struct NonPositiveLength : Error {
  explicit NonPositiveLength(const std::string& w) : Error(errc::domain, w) {}
};
struct AlphabetMismatch : Error {
  explicit AlphabetMismatch(const std::string& w) : Error(errc::domain, w) {}
};
struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& w) : Error(errc::domain, w) {}
};
struct DecomposablePermutation : Error {
  explicit DecomposablePermutation(const std::string& w) : Error(errc::domain, w) {}
};
struct WordNotInLanguage : Error {
  explicit WordNotInLanguage(const std::string& w) : Error(errc::domain, w) {}
};
struct NotACodingMorphism : Error {
  explicit NotACodingMorphism(const std::string& w) : Error(errc::domain, w) {}
};
struct DegenerateTransformation : Error {
  explicit DegenerateTransformation(const std::string& w) : Error(errc::domain, w) {}
};

// Exact coincidence of separation-point boundaries; doubles as a
// non-regularity certificate, so it carries the offending point.
struct ConnectionDetected : Error {
  ConnectionDetected(const std::string& w, std::string boundary_text)
      : Error(errc::connection, w), boundary(std::move(boundary_text)) {}
  std::string boundary;
};

struct NotRegular : Error {
  NotRegular(const std::string& w, std::string certificate_text)
      : Error(errc::connection, w), certificate(std::move(certificate_text)) {}
  std::string certificate;
};

struct NotAdmissible : Error {
  explicit NotAdmissible(const std::string& w) : Error(errc::not_admissible, w) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& w) : Error(errc::budget, w) {}
};
struct VertexBudgetExceeded : Error {
  explicit VertexBudgetExceeded(const std::string& w) : Error(errc::budget, w) {}
};

}  // namespace iex
