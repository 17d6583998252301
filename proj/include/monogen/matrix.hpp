#ifndef MONOGEN_MATRIX_HPP
#define MONOGEN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/unipoly.hpp"

namespace monogen {

/* Dense square integer matrix, row-major. */
class IntMatrix {
  public:
    explicit IntMatrix(std::size_t n = 0)
        : n_(n)
        , data_(n * n)
    {}

    std::size_t size() const { return n_; }
    Integer & operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    Integer const & operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    Integer trace() const;

  private:
    std::size_t n_;
    std::vector<Integer> data_;
};

/* fraction-free Gaussian elimination */
Integer determinant(IntMatrix m);

/* det(x*I - m) by the division-free Berkowitz algorithm */
UniPoly characteristic_polynomial(IntMatrix const & m, std::string variable = "x");

}  // namespace monogen

#endif  // MONOGEN_MATRIX_HPP
