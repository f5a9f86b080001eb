#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// Malformed input: bad files, shape mismatches, unknown ids. CLI exit code 1.
struct InputError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : InputError {
	using InputError::InputError;
};

/// Well-formed input that the mathematics refuses (non-ideal, invalid
/// algebra, polarization in characteristic 2). CLI exit code 2.
struct MathRejection : std::domain_error {
	using std::domain_error::domain_error;
};

struct NotAnIdeal : MathRejection {
	NotAnIdeal() : MathRejection("subspace is not an ideal") {}
	using MathRejection::MathRejection;
};

/// A postcondition that holds as a theorem has failed; always a bug.
struct InternalInvariant : std::logic_error {
	using std::logic_error::logic_error;
};

inline void require_invariant(bool ok, const std::string &what)
{
	if (!ok)
		throw InternalInvariant(what);
}

} // namespace leibniz
