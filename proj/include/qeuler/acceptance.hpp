#pragma once

#include <iosfwd>

namespace qeuler::acceptance {

/// Runs the eight acceptance criteria end to end, printing one
/// "PASS criterion N: ..." or "FAIL criterion N: ..." line per criterion
/// to out.  Returns true when every criterion passed.
bool run_all(std::ostream& out);

}  // namespace qeuler::acceptance
