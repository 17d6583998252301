#include "monogen/matrix.hpp"

#include <utility>

namespace monogen {

Integer IntMatrix::trace() const
{
    Integer t = 0;
    for (std::size_t i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

Integer determinant(IntMatrix m)
{
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

UniPoly characteristic_polynomial(IntMatrix const & m, std::string variable)
{
    std::size_t n = m.size();
    // descending coefficients of the char poly of the leading r x r block
    std::vector<Integer> c{1};
    for (std::size_t r = 0; r < n; ++r) {
        // column q of the Toeplitz factor: 1, -a_rr, -R C, -R A C, ...
        std::vector<Integer> q(r + 2);
        q[0] = 1;
        q[1] = -m(r, r);
        std::vector<Integer> v(r);  // A_r^k * C, starting with C
        for (std::size_t i = 0; i < r; ++i)
            v[i] = m(i, r);
        for (std::size_t k = 2; k < r + 2; ++k) {
            Integer dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                mpz_addmul(dot.get_mpz_t(), m(r, i).get_mpz_t(), v[i].get_mpz_t());
            q[k] = -dot;
            std::vector<Integer> w(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    mpz_addmul(w[i].get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
            v = std::move(w);
        }
        std::vector<Integer> next(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < c.size(); ++j)
                mpz_addmul(next[i].get_mpz_t(), q[i - j].get_mpz_t(), c[j].get_mpz_t());
        c = std::move(next);
    }
    std::vector<Integer> ascending(c.rbegin(), c.rend());
    return UniPoly(std::move(ascending), std::move(variable));
}

}  // namespace monogen
