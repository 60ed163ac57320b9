#pragma once

#include <iosfwd>

namespace malcolmson::cli {

/// Exit codes: 0 ok, 1 failed check (verify, axioms-check, selftest),
/// 2 parse error, 3 precondition violation, 4 bound overflow.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace malcolmson::cli
