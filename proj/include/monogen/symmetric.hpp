#ifndef MONOGEN_SYMMETRIC_HPP
#define MONOGEN_SYMMETRIC_HPP

#include <string>
#include <vector>

#include "monogen/multipoly.hpp"

namespace monogen {

/* e_k(r_1, ..., r_n) as a polynomial over the ring `variables`, which must
 * contain every name in `roots` */
MultiPoly elementary_symmetric(std::vector<std::string> const & variables,
                               std::vector<std::string> const & roots, unsigned k);

/* Rewrites a polynomial symmetric in `roots` as a polynomial in the
 * elementary symmetric functions of those roots, using the classical
 * leading-term algorithm. Variables of `p` not listed in `roots` are
 * passengers and are carried through unchanged.
 *
 * The result lives over `elementary` (one name per root, e_1 first)
 * followed by the passengers in their original order, and satisfies
 *     result(e_1(r), ..., e_n(r), passengers) == p(r, passengers).
 *
 * Throws NonSymmetricError carrying a permutation of the roots that
 * changes `p` if the input is not symmetric. */
MultiPoly symmetric_reduce(MultiPoly const & p, std::vector<std::string> const & roots,
                           std::vector<std::string> const & elementary);

}  // namespace monogen

#endif  // MONOGEN_SYMMETRIC_HPP
