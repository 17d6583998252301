#ifndef MONOGEN_FIELDS_HPP
#define MONOGEN_FIELDS_HPP

#include <string>

#include "monogen/integer.hpp"
#include "monogen/unipoly.hpp"

namespace monogen {

/* L = Q(theta), theta a root of the monic totally real cubic
 * x^3 + a2 x^2 + a1 x + a0. */
struct CubicFieldSpec {
    Integer a2, a1, a0;
    Integer disc;

    UniPoly polynomial(std::string variable = "x") const
    {
        return UniPoly({a0, a1, a2, 1}, std::move(variable));
    }
};

/* Throws DomainError if f has an integer root or disc(f) <= 0. */
CubicFieldSpec make_cubic_field(Integer a2, Integer a1, Integer a0);

/* N_{L/Q}(y0 + y1 theta + y2 theta^2) = Res_X(f, y0 + y1 X + y2 X^2) */
Integer norm_L_element(CubicFieldSpec const & cubic, Integer const & y0, Integer const & y1,
                       Integer const & y2);

/* N_{L/Q}(Y + y1 theta + y2 theta^2) as a monic cubic in Y */
UniPoly norm_polynomial_in_y0(CubicFieldSpec const & cubic, Integer const & y1, Integer const & y2,
                              std::string variable = "y0");

enum class QuadCase {
    A,  // -d = 2, 3 mod 4, omega = i sqrt(d)
    B,  // -d = 1 mod 4, omega = (1 + i sqrt(d)) / 2
};

inline char const * to_string(QuadCase c) { return c == QuadCase::A ? "A" : "B"; }

/* M = Q(i sqrt(d)) with Z_M = Z[omega]; omega^2 = trace*omega - norm. */
struct ImagQuadSpec {
    Integer d;
    QuadCase kase = QuadCase::A;
    Integer omega_trace;
    Integer omega_norm;
    Integer disc;
};

/* Throws DomainError unless d >= 1 is square-free. */
ImagQuadSpec make_imaginary_quadratic(Integer d);

/* a + b*omega in Z_M */
struct QuadInt {
    Integer a = 0, b = 0;
    friend bool operator==(QuadInt const &, QuadInt const &) = default;
};

QuadInt add(QuadInt const & x, QuadInt const & y);
QuadInt multiply(ImagQuadSpec const & quad, QuadInt const & x, QuadInt const & y);
/* N_{M/Q}(a + b omega) = a^2 + trace*a*b + norm*b^2 */
Integer norm(ImagQuadSpec const & quad, QuadInt const & x);

/* c3 x^3 + c2 x^2 y + c1 x y^2 + c0 y^3 */
struct BinaryCubicForm {
    Integer c3, c2, c1, c0;

    Integer operator()(Integer const & x, Integer const & y) const;
    /* the same form evaluated over Z_M */
    QuadInt evaluate(ImagQuadSpec const & quad, QuadInt const & x, QuadInt const & y) const;
    Integer discriminant() const;
    /* no linear factor over Q (requires c3 != 0 and c0 != 0) */
    bool is_irreducible() const;
    /* F(X, 1) */
    UniPoly dehomogenized(std::string variable = "x") const;
    /* "c3,c2,c1,c0" in decimal, the canonical encoding used for checksums */
    std::string canonical_encoding() const;

    friend bool operator==(BinaryCubicForm const &, BinaryCubicForm const &) = default;
};

/* prod_j (u - (a2 + theta_j) v), i.e. the homogenization of f(X - a2) */
BinaryCubicForm norm_form_shifted(CubicFieldSpec const & cubic);

/* prod_j (x - theta_j y) = y^3 f(x/y) */
BinaryCubicForm norm_form_theta(CubicFieldSpec const & cubic);

}  // namespace monogen

#endif  // MONOGEN_FIELDS_HPP
