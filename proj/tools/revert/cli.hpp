#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revert::cli
{

// Exit statuses. These are part of the command-line contract.
enum Exit : int {
    Ok = 0,
    VerificationFailed = 1, // methods disagree or a round trip failed
    Usage = 2,              // bad flags or an unparsable expression
    Expansion = 3,          // PoleAtCenter, NonRationalExpansion, DomainError
    VanishingDerivative = 4,
    NotEnoughTerms = 5, // InsufficientOrder, InsufficientData
    Numeric = 6,        // any other numeric failure
};

// Runs one command line. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace revert::cli
