#include "monogen/fields.hpp"

#include "monogen/errors.hpp"
#include "monogen/matrix.hpp"

namespace monogen {

CubicFieldSpec make_cubic_field(Integer a2, Integer a1, Integer a0)
{
    CubicFieldSpec field{std::move(a2), std::move(a1), std::move(a0), 0};
    UniPoly f = field.polynomial();
    // a monic cubic is reducible over Q iff it has an integer root
    if (!integer_roots(f).empty())
        throw DomainError("cubic " + f.to_string() + " is reducible");
    field.disc = discriminant(f);
    if (field.disc <= 0)
        throw DomainError("cubic " + f.to_string() + " is not totally real (disc " + field.disc.get_str() + ")");
    return field;
}

Integer norm_L_element(CubicFieldSpec const & cubic, Integer const & y0, Integer const & y1,
                       Integer const & y2)
{
    UniPoly g({y0, y1, y2});
    if (g.is_zero())
        return 0;
    return resultant(cubic.polynomial(), g);
}

UniPoly norm_polynomial_in_y0(CubicFieldSpec const & cubic, Integer const & y1, Integer const & y2,
                              std::string variable)
{
    // multiplication by -(y1 theta + y2 theta^2) on (1, theta, theta^2)
    Integer const & a2 = cubic.a2;
    Integer const & a1 = cubic.a1;
    Integer const & a0 = cubic.a0;
    // theta^3 and theta^4 in the power basis
    Integer t3[3] = {-a0, -a1, -a2};
    Integer t4[3] = {-a2 * t3[0], t3[0] - a2 * t3[1], t3[1] - a2 * t3[2]};
    Integer powers[5][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {t3[0], t3[1], t3[2]}, {t4[0], t4[1], t4[2]}};
    IntMatrix m(3);
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row)
            m(row, col) = -(y1 * powers[col + 1][row] + y2 * powers[col + 2][row]);
    return characteristic_polynomial(m, std::move(variable));
}

ImagQuadSpec make_imaginary_quadratic(Integer d)
{
    if (d <= 0)
        throw DomainError("d must be positive, got " + d.get_str());
    for (Integer p = 2; p * p <= d; ++p)
        if (mpz_divisible_p(d.get_mpz_t(), Integer(p * p).get_mpz_t()))
            throw DomainError("d = " + d.get_str() + " is not square-free");
    ImagQuadSpec q;
    q.d = d;
    Integer r = d % 4;
    if (r == 3) {
        q.kase = QuadCase::B;
        q.omega_trace = 1;
        q.omega_norm = (1 + d) / 4;
        q.disc = -d;
    } else {
        q.kase = QuadCase::A;
        q.omega_trace = 0;
        q.omega_norm = d;
        q.disc = -4 * d;
    }
    return q;
}

QuadInt add(QuadInt const & x, QuadInt const & y)
{
    return {x.a + y.a, x.b + y.b};
}

QuadInt multiply(ImagQuadSpec const & quad, QuadInt const & x, QuadInt const & y)
{
    Integer bb = x.b * y.b;
    return {x.a * y.a - quad.omega_norm * bb, x.a * y.b + x.b * y.a + quad.omega_trace * bb};
}

Integer norm(ImagQuadSpec const & quad, QuadInt const & x)
{
    return x.a * x.a + quad.omega_trace * x.a * x.b + quad.omega_norm * x.b * x.b;
}

Integer BinaryCubicForm::operator()(Integer const & x, Integer const & y) const
{
    // Horner in x with y-weighted coefficients
    Integer acc = c3;
    acc = acc * x + c2 * y;
    acc = acc * x + c1 * y * y;
    acc = acc * x + c0 * y * y * y;
    return acc;
}

QuadInt BinaryCubicForm::evaluate(ImagQuadSpec const & quad, QuadInt const & x, QuadInt const & y) const
{
    QuadInt y2 = multiply(quad, y, y);
    QuadInt y3 = multiply(quad, y2, y);
    QuadInt acc{c3, 0};
    acc = add(multiply(quad, acc, x), QuadInt{c2 * y.a, c2 * y.b});
    acc = add(multiply(quad, acc, x), QuadInt{c1 * y2.a, c1 * y2.b});
    acc = add(multiply(quad, acc, x), QuadInt{c0 * y3.a, c0 * y3.b});
    return acc;
}

Integer BinaryCubicForm::discriminant() const
{
    return c2 * c2 * c1 * c1 - 4 * c3 * c1 * c1 * c1 - 4 * c2 * c2 * c2 * c0 - 27 * c3 * c3 * c0 * c0
        + 18 * c3 * c2 * c1 * c0;
}

bool BinaryCubicForm::is_irreducible() const
{
    if (c3 == 0 || c0 == 0)
        return false;
    // X = Z / c3 turns rational roots of F(X, 1) into integer roots of a monic cubic
    UniPoly monic({c0 * c3 * c3, c1 * c3, c2, 1});
    return integer_roots(monic).empty();
}

UniPoly BinaryCubicForm::dehomogenized(std::string variable) const
{
    return UniPoly({c0, c1, c2, c3}, std::move(variable));
}

std::string BinaryCubicForm::canonical_encoding() const
{
    return c3.get_str() + "," + c2.get_str() + "," + c1.get_str() + "," + c0.get_str();
}

BinaryCubicForm norm_form_theta(CubicFieldSpec const & cubic)
{
    return {1, cubic.a2, cubic.a1, cubic.a0};
}

BinaryCubicForm norm_form_shifted(CubicFieldSpec const & cubic)
{
    // f(X - a2) expanded, then homogenized
    UniPoly g = cubic.polynomial().taylor_shift(-cubic.a2);
    return {g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0)};
}

}  // namespace monogen
