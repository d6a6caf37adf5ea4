#pragma once

#include <stdexcept>
#include <string>

namespace operadlab {

// Base class for everything this library throws on bad input.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (words, trees, terms).
struct parse_error : error {
  using error::error;
};

// Value outside the operation's domain: empty word where a nonempty one is
// required, a letter that does not occur, a term that is not an l-factor,
// a pair that is not a weak-order cover.
struct domain_error : error {
  using error::error;
};

// A letter occurs twice where distinctness is required.
struct duplicate_letter_error : error {
  using error::error;
};

// A composition position or leaf index out of range.
struct position_error : error {
  using error::error;
};

// Two terms being composed share a generator index.
struct index_clash_error : error {
  using error::error;
};

// Operands of a comparison have different sizes.
struct size_mismatch_error : error {
  using error::error;
};

// Enumeration request above the configured maximum.
struct resource_limit_error : error {
  using error::error;
};

// Rewrite engine errors, one type per failure mode so traces can be
// diagnosed precisely.
struct rewrite_error : error {
  using error::error;
};
struct path_error : rewrite_error {
  using rewrite_error::rewrite_error;
};
struct pattern_error : rewrite_error {
  using rewrite_error::rewrite_error;
};
struct side_condition_error : rewrite_error {
  using rewrite_error::rewrite_error;
};

}  // namespace operadlab
