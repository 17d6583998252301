#ifndef MONOGEN_THUE_HPP
#define MONOGEN_THUE_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "monogen/fields.hpp"
#include "monogen/parallel.hpp"

namespace monogen {

struct ThueSolution {
    Integer x, y, value;
    friend bool operator==(ThueSolution const &, ThueSolution const &) = default;
};

/* Exhaustive only for max(|x|, |y|) <= bound. */
struct BoundedSearch {
    Integer bound;
};

/* Complete as asserted by an external solver, re-verified entry by entry. */
struct ExternalCertified {
    std::string source;
};

using Completeness = std::variant<BoundedSearch, ExternalCertified>;

std::string describe(Completeness const & c);

struct ThueSolutionSet {
    BinaryCubicForm form;
    Integer max_abs_rhs;
    /* sorted by (y, x), closed under (x, y) -> (-x, -y) */
    std::vector<ThueSolution> solutions;
    Completeness completeness;
    /* right hand sides whose solution lists are complete (certified sets only) */
    std::set<Integer> certified_rhs;

    bool is_bounded() const { return std::holds_alternative<BoundedSearch>(completeness); }
    /* Whether this set lists every solution of |form| <= cap. For bounded
     * searches that is true within the bound only. */
    bool covers(Integer const & cap) const;
    std::vector<ThueSolution> with_abs_value_at_most(Integer const & cap) const;
};

/* Approximations of the real parts of all roots of F(X, 1) with absolute
 * error at most 2^-precision_bits. Requires c3 != 0 and disc != 0. */
std::vector<mpq_class> root_real_parts(BinaryCubicForm const & form, unsigned precision_bits);

/* All (x, y) with |form(x, y)| <= max_abs_rhs and max(|x|, |y|) <= bound. */
ThueSolutionSet solve_thue_range(BinaryCubicForm const & form, Integer const & max_abs_rhs,
                                 Integer const & bound);

/* All y0 with N_{L/Q}(y0 + y1 theta + y2 theta^2) in rhs, ascending. */
std::vector<Integer> solve_norm_pm(CubicFieldSpec const & cubic, Integer const & y1, Integer const & y2,
                                   std::set<Integer> const & rhs);

/* hex SHA-256 of form.canonical_encoding() */
std::string form_checksum(BinaryCubicForm const & form);

/* Reads a certified solution file:
 *
 *     #form c3 c2 c1 c0 sha256:<hex>
 *     #rhs 1            optional: right hand sides the list is complete for
 *     # free comments
 *     rhs x y
 *
 * Without a #rhs line the list is taken to be complete for the right hand
 * sides that occur in it. Every entry is re-evaluated. */
ThueSolutionSet ingest_certified(std::istream & in, BinaryCubicForm const & form, std::string const & source_id);
ThueSolutionSet ingest_certified_file(std::string const & path, BinaryCubicForm const & form);

/* Reads only the "#form" header of a certified file. */
BinaryCubicForm certified_file_form(std::string const & path);

void write_certified(std::ostream & out, ThueSolutionSet const & set);

/* Maps solutions of N(x - theta y) to solutions of the shifted norm form
 * via (x, y) -> (x + a2 y, y). */
ThueSolutionSet theta_to_shifted(ThueSolutionSet const & set, CubicFieldSpec const & cubic);

}  // namespace monogen

#endif  // MONOGEN_THUE_HPP
