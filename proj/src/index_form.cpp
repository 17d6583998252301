#include "monogen/index_form.hpp"

#include "monogen/errors.hpp"
#include "monogen/symmetric.hpp"

namespace monogen {

namespace {

std::vector<std::string> const kCoordVars{"x1", "x2", "y0", "y1", "y2"};

MultiPoly expand_generic_form()
{
    std::vector<std::string> const ring{"r1", "r2", "r3", "w1", "w2", "x0", "x1", "x2", "y0", "y1", "y2"};
    auto var = [&](char const * name) { return MultiPoly::variable(ring, name); };
    MultiPoly const x0 = var("x0"), x1 = var("x1"), x2 = var("x2");
    MultiPoly const y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    MultiPoly const roots[3] = {var("r1"), var("r2"), var("r3")};

    // alpha with omega -> w and theta -> r
    auto conjugate = [&](MultiPoly const & w, MultiPoly const & r) {
        MultiPoly r2 = r * r;
        return x0 + x1 * r + x2 * r2 + y0 * w + y1 * w * r + y2 * w * r2;
    };
    MultiPoly const w1 = var("w1"), w2 = var("w2");

    MultiPoly f = MultiPoly::constant(ring, 1);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (j != k)
                f = f * (conjugate(w1, roots[j]) - conjugate(w2, roots[k]));

    MultiPoly in_e = symmetric_reduce(f, {"r1", "r2", "r3"}, {"e1", "e2", "e3"});
    MultiPoly in_s = symmetric_reduce(in_e, {"w1", "w2"}, {"s1", "s2"});
    if (in_s.degree_in("x0") != 0)
        throw InvariantViolation("x0 did not cancel from the index form");
    return in_s.with_variables({"e1", "e2", "e3", "s1", "s2", "x1", "x2", "y0", "y1", "y2"});
}

}  // namespace

MultiPoly const & generic_index_form()
{
    static MultiPoly const form = expand_generic_form();
    return form;
}

IndexFormF build_F(CubicFieldSpec const & cubic, ImagQuadSpec const & quad)
{
    MultiPoly p = generic_index_form()
                      .substitute("e1", Integer(-cubic.a2))
                      .substitute("e2", cubic.a1)
                      .substitute("e3", Integer(-cubic.a0))
                      .substitute("s1", quad.omega_trace)
                      .substitute("s2", quad.omega_norm);
    IndexFormF out;
    out.poly = p.with_variables(kCoordVars);
    out.provenance_case = quad.kase;
    out.source = "cubic [" + cubic.a2.get_str() + "," + cubic.a1.get_str() + "," + cubic.a0.get_str()
        + "], d = " + quad.d.get_str();
    return out;
}

IndexFormF build_F_parametric(UniPoly const & a2, UniPoly const & a1, UniPoly const & a0, QuadCase kase)
{
    if (kase != QuadCase::A)
        throw DomainError("parametric index form supports only omega = i sqrt(d)");
    std::vector<std::string> ring{"e1", "e2", "e3", "s1", "s2", "x1", "x2", "y0", "y1", "y2", "t", "d"};
    auto in_t = [&](UniPoly const & p) {
        if (!p.is_constant() && p.variable() != "t")
            throw DomainError("family coefficients must be polynomials in t");
        return from_univariate(UniPoly(p.coefficients(), "t"), ring);
    };
    MultiPoly p = generic_index_form().with_variables(ring);
    p = p.substitute("e1", -in_t(a2));
    p = p.substitute("e2", in_t(a1));
    p = p.substitute("e3", -in_t(a0));
    p = p.substitute("s1", Integer(0));
    p = p.substitute("s2", MultiPoly::variable(ring, "d"));

    IndexFormF out;
    out.poly = p.with_variables({"x1", "x2", "y0", "y1", "y2", "t", "d"});
    out.provenance_case = QuadCase::A;
    out.source = "family [" + a2.to_string() + ", " + a1.to_string() + ", " + a0.to_string() + "], d symbolic";
    return out;
}

InequalityBounds inequality_bounds(ImagQuadSpec const & quad)
{
    // |N| <= K / d^(3/2) with integer N  <=>  N^2 d^3 <= K^2
    Integer k = quad.kase == QuadCase::A ? 1 : 8;
    Integer d3 = quad.d * quad.d * quad.d;
    return {k, isqrt(Integer(k * k / d3))};
}

}  // namespace monogen
