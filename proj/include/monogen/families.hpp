#ifndef MONOGEN_FAMILIES_HPP
#define MONOGEN_FAMILIES_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "monogen/fields.hpp"
#include "monogen/index_form.hpp"

namespace monogen {

/* (x(t), y(t)) with N(x - theta_t y) = 1 identically in t */
struct ParametricSolution {
    UniPoly x, y;
};

/* x^3 + a2(t) x^2 + a1(t) x + a0(t), valid (totally real) for t >= t_min */
struct FamilySpec {
    std::string name;
    UniPoly a2, a1, a0;
    Integer t_min;
    std::vector<ParametricSolution> solutions;

    CubicFieldSpec specialize(Integer const & t) const;
};

/* x^3 - (t^4 - t) x^2 + (t^5 - 2 t^2) x + 1 with its five known solutions
 * of N(x - theta_t y) = 1 */
FamilySpec quartic_trace_family();

/* N(x - theta_t y) at (x(t), y(t)), as a polynomial in t */
UniPoly theta_form_at(FamilySpec const & family, ParametricSolution const & s);
/* the shifted norm form at (u(t), v(t)) */
UniPoly shifted_form_at(FamilySpec const & family, UniPoly const & u, UniPoly const & v);

/* Throws DomainError unless every listed solution is an identity. */
void verify_family_solutions(FamilySpec const & family);

struct ParametricPair {
    UniPoly x1, x2;
};

/* (x, y) -> (x + a2(t) y, y); each lift is checked against the shifted form */
std::vector<ParametricPair> lift_thue_solutions(FamilySpec const & family);

/* Sufficient test for p(t) < 0 on t >= t0: every coefficient of p(s + t0)
 * is <= 0 and the constant one is < 0. */
bool certified_negative(UniPoly const & p, Integer const & t0);

enum class FamilyVerdict { NonMonogenic, Inconclusive };

struct CandidateVerdict {
    std::string id;
    ParametricPair x;
    Integer y0;
    /* coefficient of d^k in F(x1, x2, y0, 0, 0), k = 0, 1, ... */
    std::vector<UniPoly> d_coefficients;
    std::vector<bool> negative;
    std::string diagnostic;
    bool all_negative() const;
};

struct FamilyProof {
    std::string family;
    Integer t0;
    std::vector<CandidateVerdict> candidates;
    /* x-inequality solutions not covered by the lifts, with the reason they are excluded */
    std::vector<std::string> excluded;
    FamilyVerdict verdict = FamilyVerdict::Inconclusive;
};

/* Substitutes every lifted candidate (both signs, y0 = +-1, y1 = y2 = 0)
 * into the parametric index form and certifies that all coefficients of
 * the resulting polynomial in d are negative for t >= t0. */
FamilyProof prove_family_nonmonogenic(FamilySpec const & family, Integer const & t0);

nlohmann::ordered_json proof_to_json(FamilyProof const & proof);

}  // namespace monogen

#endif  // MONOGEN_FAMILIES_HPP
