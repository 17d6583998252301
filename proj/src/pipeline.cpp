#include "monogen/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>

#include "monogen/errors.hpp"
#include "monogen/parallel.hpp"

namespace monogen {

Coords5 canonicalize(Coords5 const & v)
{
    for (auto const & c : v) {
        if (c == 0)
            continue;
        if (c > 0)
            return v;
        Coords5 neg;
        for (std::size_t i = 0; i < 5; ++i)
            neg[i] = -v[i];
        return neg;
    }
    throw DomainError("cannot canonicalize the zero vector");
}

ThueSolutionSet load_certified_for(CubicFieldSpec const & cubic, std::string const & path)
{
    BinaryCubicForm header = certified_file_form(path);
    if (header == norm_form_shifted(cubic))
        return ingest_certified_file(path, header);
    if (header == norm_form_theta(cubic))
        return theta_to_shifted(ingest_certified_file(path, header), cubic);
    throw DomainError("certified file '" + path + "' is for form " + header.canonical_encoding()
                      + ", which belongs to neither norm form of the cubic");
}

bool GeneratorReport::is_complete() const
{
    return std::none_of(stages.begin(), stages.end(),
                        [](StageReport const & s) { return s.completeness.rfind("bounded", 0) == 0; });
}

std::string GeneratorReport::completeness() const
{
    for (auto const & s : stages)
        if (s.completeness.rfind("bounded", 0) == 0)
            return s.completeness;
    return "certified";
}

namespace {

struct StageResult {
    std::vector<ThueSolution> solutions;
    std::string completeness;
};

class StageSolver {
  public:
    StageSolver(BinaryCubicForm form, PipelineConfig const & config)
        : form_(std::move(form))
        , config_(config)
    {}

    StageResult const & solve(Integer const & cap)
    {
        auto it = cache_.find(cap);
        if (it != cache_.end())
            return it->second;
        StageResult r;
        if (cap == 0 && form_.is_irreducible()) {
            r.solutions = {{0, 0, 0}};
            r.completeness = "proven";
        } else if (auto const * cert = find_certified(cap)) {
            r.solutions = cert->with_abs_value_at_most(cap);
            r.completeness = "certified";
        } else {
            ThueSolutionSet s = solve_thue_range(form_, cap, config_.bound);
            r.solutions = s.solutions;
            r.completeness = describe(s.completeness);
        }
        return cache_.emplace(cap, std::move(r)).first->second;
    }

  private:
    ThueSolutionSet const * find_certified(Integer const & cap) const
    {
        for (auto const & c : config_.certified)
            if (c.form == form_ && c.covers(cap))
                return &c;
        return nullptr;
    }

    BinaryCubicForm form_;
    PipelineConfig const & config_;
    std::map<Integer, StageResult> cache_;
};

}  // namespace

GeneratorReport find_generators(CompositeOrder const & order, PipelineConfig const & config)
{
    auto start = std::chrono::steady_clock::now();
    GeneratorReport rep;
    rep.cubic = order.cubic();
    rep.quad = order.quad();
    rep.bounds = inequality_bounds(order.quad());
    BinaryCubicForm shifted = norm_form_shifted(order.cubic());
    StageSolver solver(shifted, config);

    // (y1, y2) from |N(y1 - (a2 + theta) y2)| <= y cap
    StageResult const & ys = solver.solve(rep.bounds.y_rhs_max);
    rep.stages.push_back({"y_pairs", shifted, rep.bounds.y_rhs_max, ys.completeness, ys.solutions.size()});

    // y0 from N(y0 + y1 theta + y2 theta^2) = +-1
    std::vector<std::array<Integer, 3>> y_triples;
    for (auto const & s : ys.solutions)
        for (auto const & y0 : solve_norm_pm(order.cubic(), s.x, s.y, {Integer(1), Integer(-1)}))
            y_triples.push_back({y0, s.x, s.y});
    rep.y_triples = y_triples.size();

    // (x1, x2) from the x-inequality; case B solves for (2x1 + y1, 2x2 + y2)
    StageResult const & xs = solver.solve(rep.bounds.x_rhs_max);
    rep.stages.push_back({"x_pairs", shifted, rep.bounds.x_rhs_max, xs.completeness, xs.solutions.size()});

    std::vector<Coords5> candidates;
    bool case_b = order.quad().kase == QuadCase::B;
    for (auto const & yt : y_triples) {
        for (auto const & s : xs.solutions) {
            Integer x1 = s.x, x2 = s.y;
            if (case_b) {
                Integer u = s.x - yt[1], v = s.y - yt[2];
                if (!mpz_even_p(u.get_mpz_t()) || !mpz_even_p(v.get_mpz_t()))
                    continue;
                x1 = u / 2;
                x2 = v / 2;
            }
            candidates.push_back({x1, x2, yt[0], yt[1], yt[2]});
        }
    }
    rep.candidates = candidates.size();

    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), [&](std::size_t i) {
        auto const & c = candidates[i];
        auto idx = element_index(order, ElementCoords::from5(c[0], c[1], c[2], c[3], c[4]));
        keep[i] = idx && *idx == 1;
    });
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i])
            rep.generators.push_back(canonicalize(candidates[i]));
    std::sort(rep.generators.begin(), rep.generators.end());
    rep.generators.erase(std::unique(rep.generators.begin(), rep.generators.end()), rep.generators.end());

    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace {

nlohmann::ordered_json strings(std::initializer_list<Integer> values)
{
    auto arr = nlohmann::ordered_json::array();
    for (auto const & v : values)
        arr.push_back(v.get_str());
    return arr;
}

}  // namespace

nlohmann::ordered_json report_to_json(GeneratorReport const & r)
{
    nlohmann::ordered_json j;
    j["cubic"] = strings({r.cubic.a2, r.cubic.a1, r.cubic.a0});
    j["d"] = r.quad.d.get_str();
    j["case"] = to_string(r.quad.kase);
    j["bounds"] = {{"x_rhs_max", r.bounds.x_rhs_max.get_str()}, {"y_rhs_max", r.bounds.y_rhs_max.get_str()}};
    auto gens = nlohmann::ordered_json::array();
    for (auto const & g : r.generators)
        gens.push_back(strings({g[0], g[1], g[2], g[3], g[4]}));
    j["generators"] = gens;
    j["x0"] = "free";
    j["completeness"] = r.completeness();
    nlohmann::ordered_json stages;
    for (auto const & s : r.stages) {
        stages[s.name] = {{"form", strings({s.form.c3, s.form.c2, s.form.c1, s.form.c0})},
                          {"max_abs_rhs", s.max_abs_rhs.get_str()},
                          {"completeness", s.completeness},
                          {"solutions", std::to_string(s.solutions)}};
    }
    stages["y_triples"] = std::to_string(r.y_triples);
    stages["candidates"] = std::to_string(r.candidates);
    stages["generators"] = std::to_string(r.generators.size());
    j["stages"] = stages;
    j["elapsed_ms"] = std::to_string(static_cast<long long>(r.elapsed_ms));
    return j;
}

}  // namespace monogen
