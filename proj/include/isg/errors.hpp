#pragma once

#include <stdexcept>
#include <string>

namespace isg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Cayley table failed one of the inverse-semigroup axioms.
struct ValidationError : Error {
  using Error::Error;
};

struct EmptySemigroup : ValidationError {
  EmptySemigroup() : ValidationError("semigroup must have at least one element") {}
};

struct NotClosed : ValidationError {
  int row, col, value;
  NotClosed(int r, int c, int v)
      : ValidationError("table entry [" + std::to_string(r) + "][" + std::to_string(c) +
                        "] = " + std::to_string(v) + " is out of range"),
        row(r), col(c), value(v) {}
};

struct NotAssociative : ValidationError {
  int a, b, c;
  NotAssociative(int a_, int b_, int c_)
      : ValidationError("(ab)c != a(bc) for a=" + std::to_string(a_) + ", b=" + std::to_string(b_) +
                        ", c=" + std::to_string(c_)),
        a(a_), b(b_), c(c_) {}
};

struct NotRegular : ValidationError {
  int element;
  explicit NotRegular(int a)
      : ValidationError("element " + std::to_string(a) + " has no inverse (axa=a, xax=x unsolvable)"),
        element(a) {}
};

struct IdempotentsDoNotCommute : ValidationError {
  int e, f;
  IdempotentsDoNotCommute(int e_, int f_)
      : ValidationError("idempotents " + std::to_string(e_) + " and " + std::to_string(f_) +
                        " do not commute"),
        e(e_), f(f_) {}
};

// Subset passed to substructure() escapes under product or inverse.
struct NotClosedSubset : Error {
  int a, b;
  NotClosedSubset(int a_, int b_, const std::string& detail)
      : Error("subset not closed: " + detail), a(a_), b(b_) {}
};

// Partition is not compatible with the multiplication.
struct NotACongruence : Error {
  int a, b, c;
  NotACongruence(int a_, int b_, int c_)
      : Error("partition is not a congruence: " + std::to_string(a_) + " ~ " + std::to_string(b_) +
              " but translation by " + std::to_string(c_) + " separates them"),
        a(a_), b(b_), c(c_) {}
};

struct InvalidWord : Error {
  explicit InvalidWord(const std::string& word)
      : Error("subscript word \"" + word + "\" must be nonempty over {t,k}") {}
};

struct ParentMismatch : Error {
  ParentMismatch() : Error("operands live on different semigroups") {}
};

// push_congruence called with rho not below theta.
struct NotAbove : Error {
  int a, b;
  NotAbove(int a_, int b_)
      : Error("congruence is not above the quotienting one: witness pair (" + std::to_string(a_) +
              ", " + std::to_string(b_) + ")"),
        a(a_), b(b_) {}
};

struct IndexOrder : Error {
  int i, n;
  IndexOrder(int i_, int n_)
      : Error("network index i=" + std::to_string(i_) + " exceeds quotient level n=" + std::to_string(n_)),
        i(i_), n(n_) {}
};

// Two formulas that are provably equal disagreed, or a structural fact
// failed to hold. Always an implementation bug or a genuine counterexample
// to a verified identity, never bad user input.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct EnumerationCapExceeded : Error {
  long cap;
  explicit EnumerationCapExceeded(long cap_)
      : Error("congruence enumeration exceeded cap " + std::to_string(cap_)), cap(cap_) {}
};

struct DepthExceeded : Error {
  int depth;
  explicit DepthExceeded(int d)
      : Error("min network did not stabilize within depth " + std::to_string(d)), depth(d) {}
};

struct ParseError : Error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_ = 0)
      : Error("parse error at line " + std::to_string(line_) +
              (col_ > 0 ? ", column " + std::to_string(col_) : "") + ": " + msg),
        line(line_), col(col_) {}
};

struct SizeUnsupported : Error {
  using Error::Error;
};

struct SizeExceeded : Error {
  using Error::Error;
};

struct LinkingMapNotHomomorphism : Error {
  using Error::Error;
};

}  // namespace isg
