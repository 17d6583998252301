#ifndef MONOGEN_INDEX_FORM_HPP
#define MONOGEN_INDEX_FORM_HPP

#include <string>

#include "monogen/fields.hpp"
#include "monogen/multipoly.hpp"

namespace monogen {

/* The degree-6 form F(x1, x2, y0, y1, y2): the product of the six mixed
 * conjugate differences alpha^(omega, j) - alpha^(omega', k), j != k.
 * Parametric variants additionally carry the variables t and d. */
struct IndexFormF {
    MultiPoly poly;
    QuadCase provenance_case = QuadCase::A;
    std::string source;
};

/* F over (e1, e2, e3, s1, s2, x1, x2, y0, y1, y2) for a generic cubic with
 * elementary symmetric functions e_k of its roots and a generic quadratic
 * with omega + omega' = s1, omega omega' = s2. Computed once, then cached. */
MultiPoly const & generic_index_form();

IndexFormF build_F(CubicFieldSpec const & cubic, ImagQuadSpec const & quad);

/* F over (x1, x2, y0, y1, y2, t, d) for the cubic family
 * x^3 + a2(t) x^2 + a1(t) x + a0(t) and omega = i sqrt(d), d symbolic.
 * Only case A is supported; `kase` = B throws DomainError. */
IndexFormF build_F_parametric(UniPoly const & a2, UniPoly const & a1, UniPoly const & a0,
                              QuadCase kase = QuadCase::A);

/* Integer caps on |norm| for the x- and y-inequalities. */
struct InequalityBounds {
    Integer x_rhs_max;
    Integer y_rhs_max;
    friend bool operator==(InequalityBounds const &, InequalityBounds const &) = default;
};

InequalityBounds inequality_bounds(ImagQuadSpec const & quad);

}  // namespace monogen

#endif  // MONOGEN_INDEX_FORM_HPP
