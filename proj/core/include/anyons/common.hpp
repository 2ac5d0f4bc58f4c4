#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace anyons {

using cx = std::complex<double>;

// Labels are indices into an AnyonModel's label list.
using Label = int;

// Base error for domain failures (missing symbols, basis mismatches, numeric
// verification failures). The CLI maps these to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Errors caused by bad user-supplied input: malformed files, unknown labels,
// unparsable words or shapes, inadmissible arguments. CLI exit code 2.
struct InputError : Error {
  using Error::Error;
};

}  // namespace anyons
