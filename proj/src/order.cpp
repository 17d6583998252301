#include "monogen/order.hpp"

#include "monogen/errors.hpp"

namespace monogen {

CompositeOrder::CompositeOrder(CubicFieldSpec cubic, ImagQuadSpec quad)
    : cubic_(std::move(cubic))
    , quad_(std::move(quad))
{
    // theta^k in the power basis for k = 0..4
    std::array<std::array<Integer, 3>, 5> tp;
    tp[0] = {1, 0, 0};
    tp[1] = {0, 1, 0};
    tp[2] = {0, 0, 1};
    for (int k = 3; k < 5; ++k) {
        auto const & prev = tp[k - 1];
        // theta * (p0 + p1 theta + p2 theta^2), theta^3 = -a0 - a1 theta - a2 theta^2
        tp[k] = {-cubic_.a0 * prev[2], prev[0] - cubic_.a1 * prev[2], prev[1] - cubic_.a2 * prev[2]};
    }
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            std::size_t wpow = i / 3 + j / 3;
            auto const & v = tp[i % 3 + j % 3];
            Coords6 c{};
            for (auto & x : c)
                x = 0;
            for (int k = 0; k < 3; ++k) {
                switch (wpow) {
                case 0:
                    c[k] = v[k];
                    break;
                case 1:
                    c[3 + k] = v[k];
                    break;
                default:  // omega^2 = trace*omega - norm
                    c[k] = -quad_.omega_norm * v[k];
                    c[3 + k] = quad_.omega_trace * v[k];
                }
            }
            table_[i][j] = c;
        }
    }
    disc_ = cubic_.disc * cubic_.disc * quad_.disc * quad_.disc * quad_.disc;
}

Coords6 CompositeOrder::multiply(Coords6 const & a, Coords6 const & b) const
{
    Coords6 out;
    for (auto & x : out)
        x = 0;
    Integer ab;
    for (std::size_t i = 0; i < 6; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < 6; ++j) {
            if (b[j] == 0)
                continue;
            ab = a[i] * b[j];
            for (std::size_t k = 0; k < 6; ++k)
                mpz_addmul(out[k].get_mpz_t(), ab.get_mpz_t(), table_[i][j][k].get_mpz_t());
        }
    }
    return out;
}

IntMatrix CompositeOrder::multiplication_matrix(ElementCoords const & alpha) const
{
    Coords6 a = alpha.as_array();
    IntMatrix m(6);
    for (std::size_t j = 0; j < 6; ++j) {
        for (std::size_t i = 0; i < 6; ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t k = 0; k < 6; ++k)
                mpz_addmul(m(k, j).get_mpz_t(), a[i].get_mpz_t(), table_[i][j][k].get_mpz_t());
        }
    }
    return m;
}

Integer CompositeOrder::trace_form_discriminant() const
{
    // Tr(b_k) is the trace of its multiplication matrix
    std::array<Integer, 6> tr;
    for (std::size_t k = 0; k < 6; ++k) {
        Coords6 e{};
        for (auto & x : e)
            x = 0;
        e[k] = 1;
        tr[k] = multiplication_matrix(ElementCoords::from_array(e)).trace();
    }
    IntMatrix t(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k)
                t(i, j) += table_[i][j][k] * tr[k];
    return determinant(t);
}

UniPoly char_poly(CompositeOrder const & order, ElementCoords const & alpha)
{
    return characteristic_polynomial(order.multiplication_matrix(alpha));
}

std::optional<Integer> element_index(CompositeOrder const & order, ElementCoords const & alpha)
{
    Integer dalpha = discriminant(char_poly(order, alpha));
    if (dalpha == 0)
        return std::nullopt;
    Integer const & dO = order.discriminant();
    if (!mpz_divisible_p(dalpha.get_mpz_t(), dO.get_mpz_t()))
        throw InvariantViolation("D(alpha) = " + dalpha.get_str() + " is not a multiple of D_O = " + dO.get_str());
    Integer q = abs(dalpha / dO);
    if (!is_perfect_square(q))
        throw InvariantViolation("|D(alpha)/D_O| = " + q.get_str() + " is not a square");
    return isqrt(q);
}

IndexFactors index_factors(CompositeOrder const & order, ElementCoords const & alpha)
{
    ImagQuadSpec const & quad = order.quad();
    QuadInt big_x1{alpha.x1, alpha.y1};
    QuadInt big_x2{alpha.x2, alpha.y2};
    QuadInt rel = norm_form_shifted(order.cubic()).evaluate(quad, big_x1, big_x2);
    return {norm(quad, rel), norm_L_element(order.cubic(), alpha.y0, alpha.y1, alpha.y2)};
}

}  // namespace monogen
