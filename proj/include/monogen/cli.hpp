#ifndef MONOGEN_CLI_HPP
#define MONOGEN_CLI_HPP

#include <ostream>

namespace monogen::cli {

/* Exit codes: 0 success, 1 input error, 2 result rests on a bounded
 * search (or the family proof is inconclusive). */
int run(int argc, char const * const * argv, std::ostream & out, std::ostream & err);

}  // namespace monogen::cli

#endif  // MONOGEN_CLI_HPP
