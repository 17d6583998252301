#ifndef MONOGEN_UNIPOLY_HPP
#define MONOGEN_UNIPOLY_HPP

#include <string>
#include <vector>

#include "monogen/integer.hpp"

namespace monogen {

/* Dense univariate polynomial over Z, coefficients in ascending degree.
 * The zero polynomial has no coefficients and degree -1. */
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Integer> ascending, std::string variable = "x");

    static UniPoly constant(Integer c, std::string variable = "x");
    /* c * var^deg */
    static UniPoly monomial(Integer c, unsigned deg, std::string variable = "x");
    static UniPoly identity(std::string variable = "x") { return monomial(1, 1, std::move(variable)); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::vector<Integer> const & coefficients() const { return coeffs_; }
    std::string const & variable() const { return var_; }

    /* coefficient of var^i, zero past the degree */
    Integer coeff(std::size_t i) const;
    Integer const & leading() const;
    Integer content() const;

    Integer operator()(Integer const & at) const;

    UniPoly derivative() const;
    /* p(var + shift) */
    UniPoly taylor_shift(Integer const & shift) const;
    /* p(inner) */
    UniPoly compose(UniPoly const & inner) const;
    /* divides every coefficient by c, which must divide them exactly */
    UniPoly divide_exact(Integer const & c) const;

    UniPoly operator-() const;
    UniPoly & operator+=(UniPoly const & o);
    UniPoly & operator-=(UniPoly const & o);
    UniPoly & operator*=(Integer const & c);
    friend UniPoly operator+(UniPoly a, UniPoly const & b) { return a += b; }
    friend UniPoly operator-(UniPoly a, UniPoly const & b) { return a -= b; }
    friend UniPoly operator*(UniPoly const & a, UniPoly const & b);
    friend UniPoly operator*(UniPoly a, Integer const & c) { return a *= c; }
    friend UniPoly operator*(Integer const & c, UniPoly a) { return a *= c; }
    friend bool operator==(UniPoly const & a, UniPoly const & b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(UniPoly const & a, UniPoly const & b) { return !(a == b); }

    /* e.g. "x^3 - x^2 - 2*x + 1" */
    std::string to_string() const;

  private:
    void normalize();
    std::string const & merged_variable(UniPoly const & o) const;

    std::vector<Integer> coeffs_;
    std::string var_ = "x";
};

/* lc(B)^(deg A - deg B + 1) * A mod B */
UniPoly pseudo_remainder(UniPoly const & a, UniPoly const & b);

/* Res(f, g) with the Sylvester-matrix sign convention, computed by the
 * subresultant PRS. Throws DomainError on a zero input. */
Integer resultant(UniPoly const & f, UniPoly const & g);

/* (-1)^(n(n-1)/2) Res(f, f') / lc(f); requires deg f >= 2 */
Integer discriminant(UniPoly const & f);

/* All integer roots, ascending. Throws DomainError for the zero polynomial. */
std::vector<Integer> integer_roots(UniPoly const & p);

}  // namespace monogen

#endif  // MONOGEN_UNIPOLY_HPP
