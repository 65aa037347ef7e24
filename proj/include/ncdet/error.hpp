#pragma once

#include <stdexcept>
#include <string>

namespace ncdet {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (quaternion text, matrix or system documents).
class parse_error : public error {
public:
  using error::error;
};

/// Operands built over different algebras H(a,b).
class algebra_mismatch : public error {
public:
  using error::error;
};

/// Degenerate algebra parameters (a = 0 or b = 0).
class invalid_algebra : public error {
public:
  using error::error;
};

/// Dimension, index or shape violations.
class shape_error : public error {
public:
  using error::error;
};

/// An element with zero norm was asked for its inverse.
class not_invertible : public error {
public:
  using error::error;
};

/// ddet A = 0, or a Hermitian determinant is zero where a nonzero one is required.
class singular_matrix : public error {
public:
  using error::error;
};

class not_hermitian : public error {
public:
  using error::error;
};

/// The permutation engine refuses orders above its configured bound.
class enumeration_limit : public error {
public:
  using error::error;
};

/// Elimination over a non-division algebra found nonzero candidates but none invertible.
class elimination_stall : public error {
public:
  elimination_stall(const std::string& what, std::string certificate)
      : error(what), certificate_(std::move(certificate)) {}

  /// Textual dump of the submatrix on which elimination stalled.
  const std::string& certificate() const noexcept { return certificate_; }

private:
  std::string certificate_;
};

/// Two evaluation paths that must agree did not. Signals an implementation bug.
class internal_disagreement : public error {
public:
  using error::error;
};

} // namespace ncdet
