#ifndef MONOGEN_MULTIPOLY_HPP
#define MONOGEN_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/unipoly.hpp"

namespace monogen {

inline constexpr std::size_t kMaxVariables = 16;

/* Exponent vector over a ring's ordered variable list. Exponents are
 * bounded by 255; overflowing products throw DomainError. */
struct Monomial {
    std::array<std::uint8_t, kMaxVariables> exp{};

    unsigned total_degree() const
    {
        unsigned d = 0;
        for (auto e : exp)
            d += e;
        return d;
    }
    friend bool operator==(Monomial const &, Monomial const &) = default;
};

/* graded lexicographic: higher total degree first, ties broken by the
 * exponent of the first variable, then the second, ... */
bool grlex_greater(Monomial const & a, Monomial const & b);

struct MonomialHash {
    std::size_t operator()(Monomial const & m) const noexcept;
};

using Term = std::pair<Monomial, Integer>;

/* Sparse polynomial over Z in an ordered set of named variables. Terms
 * are kept sorted in decreasing graded-lex order with no zero
 * coefficients, so equal polynomials have equal term vectors. */
class MultiPoly {
  public:
    explicit MultiPoly(std::vector<std::string> variables = {});

    static MultiPoly constant(std::vector<std::string> variables, Integer c);
    static MultiPoly variable(std::vector<std::string> variables, std::string const & name);
    /* sums duplicate monomials and drops zeros */
    static MultiPoly from_terms(std::vector<std::string> variables, std::vector<Term> terms);

    std::vector<std::string> const & variables() const { return vars_; }
    std::vector<Term> const & terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /* index of a variable name; throws DomainError if absent */
    std::size_t index_of(std::string const & name) const;
    bool has_variable(std::string const & name) const;

    unsigned total_degree() const;
    unsigned degree_in(std::string const & name) const;
    /* the constant term (coefficient of the empty monomial) */
    Integer constant_term() const;

    MultiPoly operator-() const;
    MultiPoly & operator+=(MultiPoly const & o);
    MultiPoly & operator-=(MultiPoly const & o);
    MultiPoly & operator*=(Integer const & c);
    friend MultiPoly operator+(MultiPoly a, MultiPoly const & b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const & b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly const & a, MultiPoly const & b);
    friend MultiPoly operator*(MultiPoly a, Integer const & c) { return a *= c; }
    friend bool operator==(MultiPoly const & a, MultiPoly const & b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(MultiPoly const & a, MultiPoly const & b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;

    /* values given in ring variable order */
    Integer evaluate(std::span<Integer const> values) const;
    Integer evaluate(std::map<std::string, Integer> const & values) const;

    /* replace a variable by an integer; the variable stays in the ring */
    MultiPoly substitute(std::string const & name, Integer const & value) const;
    /* replace a variable by a polynomial over the same ring */
    MultiPoly substitute(std::string const & name, MultiPoly const & value) const;

    /* Re-express over another variable list. Every variable that occurs
     * in a term must be present in the new list. */
    MultiPoly with_variables(std::vector<std::string> variables) const;
    /* with_variables minus the named ones, which must not occur */
    MultiPoly drop_variables(std::vector<std::string> const & names) const;

    /* coefficient of name^k, as a polynomial over the same ring */
    MultiPoly coefficient_in(std::string const & name, unsigned k) const;
    /* requires every other variable to be absent */
    UniPoly to_univariate(std::string const & name) const;

    /* "x1^2*y0" style, "1" for the constant monomial */
    std::string monomial_string(Monomial const & m) const;
    /* one term per line: "<coeff> <monomial>", graded-lex order */
    std::string to_canonical_text() const;
    /* single-line infix form */
    std::string to_string() const;

  private:
    void sort_terms();

    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

/* embed a univariate polynomial as a MultiPoly over `variables` */
MultiPoly from_univariate(UniPoly const & p, std::vector<std::string> variables);

}  // namespace monogen

#endif  // MONOGEN_MULTIPOLY_HPP
