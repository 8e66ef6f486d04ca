#pragma once

#include <stdexcept>
#include <string>

namespace leancut {

/** Malformed caller input: bad ids, subset preconditions, invalid partitions. */
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** Input file could not be parsed. */
struct parse_error : input_error {
  using input_error::input_error;
};

/** A documented operation precondition does not hold for the given arguments. */
struct precondition_error : input_error {
  using input_error::input_error;
};

/** An internal invariant failed; indicates a bug, never a caller mistake. */
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

/** A configured resource limit (time budget, size cap) was exceeded. */
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * The leanness search could not decide within the configured subset
 * enumeration bound.  Raised instead of returning a possibly wrong answer.
 */
struct undecided_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace leancut
