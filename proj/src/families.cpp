#include "monogen/families.hpp"

#include <algorithm>

#include "monogen/errors.hpp"
#include "monogen/parallel.hpp"

namespace monogen {

namespace {

UniPoly tpoly(std::vector<long> ascending)
{
    std::vector<Integer> c(ascending.begin(), ascending.end());
    return UniPoly(std::move(c), "t");
}

UniPoly tconst(long c)
{
    return UniPoly::constant(c, "t");
}

}  // namespace

CubicFieldSpec FamilySpec::specialize(Integer const & t) const
{
    return make_cubic_field(a2(t), a1(t), a0(t));
}

FamilySpec quartic_trace_family()
{
    FamilySpec f;
    f.name = "x^3 - (t^4 - t)*x^2 + (t^5 - 2*t^2)*x + 1";
    f.a2 = tpoly({0, 1, 0, 0, -1});
    f.a1 = tpoly({0, 0, -2, 0, 0, 1});
    f.a0 = tconst(1);
    f.t_min = 2;
    f.solutions = {
        {tconst(1), tconst(0)},
        {tconst(0), tconst(1)},
        {tpoly({0, 1}), tconst(1)},
        {tpoly({0, -2, 0, 0, 1}), tconst(1)},
        {tpoly({1, 0, 0, -1}), tpoly({0, 0, 3, 0, 0, -3, 0, 0, 1})},
    };
    return f;
}

UniPoly theta_form_at(FamilySpec const & family, ParametricSolution const & s)
{
    UniPoly const & x = s.x;
    UniPoly const & y = s.y;
    return x * x * x + family.a2 * x * x * y + family.a1 * x * y * y + family.a0 * y * y * y;
}

UniPoly shifted_form_at(FamilySpec const & family, UniPoly const & u, UniPoly const & v)
{
    // homogenization of f(X - a2): X^3 - 2 a2 X^2 + (a2^2 + a1) X + (a0 - a1 a2)
    UniPoly const & a2 = family.a2;
    UniPoly c2 = a2 * Integer(-2);
    UniPoly c1 = a2 * a2 + family.a1;
    UniPoly c0 = family.a0 - family.a1 * a2;
    return u * u * u + c2 * u * u * v + c1 * u * v * v + c0 * v * v * v;
}

void verify_family_solutions(FamilySpec const & family)
{
    for (auto const & s : family.solutions) {
        UniPoly v = theta_form_at(family, s);
        if (v != tconst(1))
            throw DomainError("(" + s.x.to_string() + ", " + s.y.to_string() + ") gives " + v.to_string()
                              + ", not the constant 1");
    }
}

std::vector<ParametricPair> lift_thue_solutions(FamilySpec const & family)
{
    verify_family_solutions(family);
    std::vector<ParametricPair> out;
    for (auto const & s : family.solutions) {
        ParametricPair p{s.x + family.a2 * s.y, s.y};
        UniPoly v = shifted_form_at(family, p.x1, p.x2);
        if (v != tconst(1))
            throw DomainError("lift of (" + s.x.to_string() + ", " + s.y.to_string()
                              + ") does not solve the shifted equation; got " + v.to_string());
        out.push_back(std::move(p));
    }
    return out;
}

bool certified_negative(UniPoly const & p, Integer const & t0)
{
    if (p.is_zero())
        return false;
    UniPoly q = p.taylor_shift(t0);
    if (q.coeff(0) >= 0)
        return false;
    return std::all_of(q.coefficients().begin(), q.coefficients().end(), [](Integer const & c) { return c <= 0; });
}

bool CandidateVerdict::all_negative() const
{
    return !d_coefficients.empty() && std::all_of(negative.begin(), negative.end(), [](bool b) { return b; });
}

FamilyProof prove_family_nonmonogenic(FamilySpec const & family, Integer const & t0)
{
    std::vector<ParametricPair> lifts = lift_thue_solutions(family);
    if (lifts.empty())
        throw DomainError("family has no candidate solutions");

    FamilyProof proof;
    proof.family = family.name;
    proof.t0 = t0;

    MultiPoly const f = build_F_parametric(family.a2, family.a1, family.a0).poly;
    auto const & ring = f.variables();
    auto embed = [&](UniPoly const & p) { return from_univariate(UniPoly(p.coefficients(), "t"), ring); };

    struct Job {
        std::string id;
        ParametricPair x;
        Integer y0;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        for (int sign : {1, -1}) {
            for (int y0 : {1, -1}) {
                ParametricPair x{lifts[i].x1 * Integer(sign), lifts[i].x2 * Integer(sign)};
                std::string id = "solution " + std::to_string(i) + (sign > 0 ? " (+)" : " (-)")
                    + ", y0 = " + std::to_string(y0);
                jobs.push_back({id, x, Integer(y0)});
            }
        }
    }

    std::vector<CandidateVerdict> verdicts(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        Job const & job = jobs[i];
        MultiPoly g = f.substitute("x1", embed(job.x.x1))
                          .substitute("x2", embed(job.x.x2))
                          .substitute("y0", job.y0)
                          .substitute("y1", Integer(0))
                          .substitute("y2", Integer(0))
                          .with_variables({"t", "d"});
        CandidateVerdict v;
        v.id = job.id;
        v.x = job.x;
        v.y0 = job.y0;
        if (g.is_zero()) {
            v.diagnostic = "index form vanishes identically on this candidate";
        } else {
            for (unsigned k = 0; k <= g.degree_in("d"); ++k) {
                UniPoly c = g.coefficient_in("d", k).with_variables({"t"}).to_univariate("t");
                v.negative.push_back(certified_negative(c, t0));
                v.d_coefficients.push_back(std::move(c));
            }
            if (!v.all_negative())
                v.diagnostic = "a coefficient is not certified negative on t >= " + t0.get_str();
        }
        verdicts[i] = std::move(v);
    });

    // F(v) = F(-v): drop candidates whose polynomial in d repeats
    for (auto & v : verdicts) {
        bool dup = std::any_of(proof.candidates.begin(), proof.candidates.end(), [&](CandidateVerdict const & w) {
            return w.d_coefficients == v.d_coefficients && w.diagnostic == v.diagnostic;
        });
        if (!dup)
            proof.candidates.push_back(std::move(v));
    }

    proof.excluded.push_back("(x1, x2) = (0, 0): alpha = x0 + y0*omega lies in the quadratic subfield, "
                             "so it is not primitive");

    bool ok = std::all_of(proof.candidates.begin(), proof.candidates.end(),
                          [](CandidateVerdict const & v) { return v.all_negative(); });
    proof.verdict = ok ? FamilyVerdict::NonMonogenic : FamilyVerdict::Inconclusive;
    return proof;
}

nlohmann::ordered_json proof_to_json(FamilyProof const & proof)
{
    nlohmann::ordered_json j;
    j["family"] = proof.family;
    j["t0"] = proof.t0.get_str();
    j["verdict"] = proof.verdict == FamilyVerdict::NonMonogenic ? "NonMonogenic" : "Inconclusive";
    auto cands = nlohmann::ordered_json::array();
    for (auto const & v : proof.candidates) {
        nlohmann::ordered_json c;
        c["id"] = v.id;
        c["x1"] = v.x.x1.to_string();
        c["x2"] = v.x.x2.to_string();
        c["y0"] = v.y0.get_str();
        auto coeffs = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < v.d_coefficients.size(); ++k)
            coeffs.push_back({{"power_of_d", std::to_string(k)},
                              {"polynomial", v.d_coefficients[k].to_string()},
                              {"negative", v.negative[k]}});
        c["d_coefficients"] = coeffs;
        if (!v.diagnostic.empty())
            c["diagnostic"] = v.diagnostic;
        cands.push_back(c);
    }
    j["candidates"] = cands;
    j["excluded"] = proof.excluded;
    return j;
}

}  // namespace monogen
