#pragma once

#include <stdexcept>
#include <string>

namespace effectus {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : Error {
  explicit OverflowError(const std::string& w) : Error("overflow: " + w) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error("shape mismatch: " + w) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& w) : Error("not hermitian: " + w) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& w) : Error("no convergence: " + w) {}
};

struct NotProjection : Error {
  explicit NotProjection(const std::string& w) : Error("not a projection: " + w) {}
};

struct NotUnitary : Error {
  explicit NotUnitary(const std::string& w) : Error("not unitary: " + w) {}
};

struct NotTotal : Error {
  explicit NotTotal(const std::string& w) : Error("not total: " + w) {}
};

struct NotOrthogonal : Error {
  explicit NotOrthogonal(const std::string& w) : Error("not orthogonal: " + w) {}
};

struct NotATest : Error {
  explicit NotATest(const std::string& w) : Error("not a test: " + w) {}
};

struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& w) : Error("precondition failed: " + w) {}
};

struct UnsupportedCarrier : Error {
  explicit UnsupportedCarrier(const std::string& w) : Error("unsupported carrier: " + w) {}
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& w) : Error("unknown suite: " + w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

}  // namespace effectus
