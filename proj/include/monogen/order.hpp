#ifndef MONOGEN_ORDER_HPP
#define MONOGEN_ORDER_HPP

#include <array>
#include <optional>
#include <string>

#include "monogen/fields.hpp"
#include "monogen/matrix.hpp"

namespace monogen {

/* alpha = x0 + x1 theta + x2 theta^2 + y0 omega + y1 omega theta + y2 omega theta^2 */
struct ElementCoords {
    Integer x0 = 0, x1 = 0, x2 = 0, y0 = 0, y1 = 0, y2 = 0;

    std::array<Integer, 6> as_array() const { return {x0, x1, x2, y0, y1, y2}; }
    static ElementCoords from_array(std::array<Integer, 6> const & v)
    {
        return {v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    /* (x1, x2, y0, y1, y2) with x0 = 0 */
    static ElementCoords from5(Integer x1, Integer x2, Integer y0, Integer y1, Integer y2)
    {
        return {0, std::move(x1), std::move(x2), std::move(y0), std::move(y1), std::move(y2)};
    }
    friend bool operator==(ElementCoords const &, ElementCoords const &) = default;
};

using Coords6 = std::array<Integer, 6>;

/* O = Z[1, theta, theta^2, omega, omega theta, omega theta^2] */
class CompositeOrder {
  public:
    CompositeOrder(CubicFieldSpec cubic, ImagQuadSpec quad);

    CubicFieldSpec const & cubic() const { return cubic_; }
    ImagQuadSpec const & quad() const { return quad_; }
    /* coordinates of b_i * b_j */
    Coords6 const & product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    /* disc(f)^2 * D_M^3 */
    Integer const & discriminant() const { return disc_; }

    Coords6 multiply(Coords6 const & a, Coords6 const & b) const;
    /* column j holds the coordinates of alpha * b_j */
    IntMatrix multiplication_matrix(ElementCoords const & alpha) const;
    /* det(Tr(b_i b_j)), computed from the structure constants alone */
    Integer trace_form_discriminant() const;

  private:
    CubicFieldSpec cubic_;
    ImagQuadSpec quad_;
    std::array<std::array<Coords6, 6>, 6> table_;
    Integer disc_;
};

inline CompositeOrder composite_order(CubicFieldSpec cubic, ImagQuadSpec quad)
{
    return CompositeOrder(std::move(cubic), std::move(quad));
}

/* characteristic polynomial of multiplication by alpha, degree 6 */
UniPoly char_poly(CompositeOrder const & order, ElementCoords const & alpha);

/* I(alpha) = sqrt|D(alpha) / D_O|, or nullopt when alpha does not
 * generate K (its characteristic polynomial is inseparable). Throws
 * InvariantViolation when the quotient is not an integer square. */
std::optional<Integer> element_index(CompositeOrder const & order, ElementCoords const & alpha);

struct IndexFactors {
    Integer n1;  // N_{M/Q}(N_{K/M}(X1 - (a2 + theta) X2))
    Integer n2;  // N_{L/Q}(y0 + y1 theta + y2 theta^2)
};

IndexFactors index_factors(CompositeOrder const & order, ElementCoords const & alpha);

}  // namespace monogen

#endif  // MONOGEN_ORDER_HPP
