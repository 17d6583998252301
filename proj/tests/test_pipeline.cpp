#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "monogen/errors.hpp"
#include "monogen/families.hpp"
#include "monogen/index_form.hpp"
#include "monogen/pipeline.hpp"
#include "oracles.hpp"

using namespace monogen;

namespace {

std::vector<Coords5> const worked_generators{
    {0, 0, 0, 1, 0}, {0, 0, 1, -1, 0}, {0, 0, 1, 0, -1}, {0, 0, 1, 1, -1}, {0, 0, 2, 0, -1}, {0, 0, 2, 1, -1},
};

GeneratorReport analyze(long a2, long a1, long a0, long d, long bound = 100000)
{
    PipelineConfig config;
    config.bound = bound;
    return find_generators(composite_order(make_cubic_field(a2, a1, a0), make_imaginary_quadratic(d)), config);
}

}  // namespace

TEST_CASE("canonical representatives")
{
    CHECK(canonicalize({0, 0, -1, 1, 0}) == Coords5{0, 0, 1, -1, 0});
    CHECK(canonicalize({0, 0, 1, -1, 0}) == Coords5{0, 0, 1, -1, 0});
    CHECK(canonicalize({-2, 5, 0, 0, 0}) == Coords5{2, -5, 0, 0, 0});
    CHECK(canonicalize({0, 0, 0, 0, -3}) == Coords5{0, 0, 0, 0, 3});
    CHECK_THROWS_AS(canonicalize({0, 0, 0, 0, 0}), DomainError);
}

TEST_CASE("worked cubic with the Gaussian integers")
{
    auto r = analyze(-1, -2, 1, 1);
    CHECK(r.generators == worked_generators);
    CHECK_FALSE(r.is_complete());
    CHECK(r.completeness() == "bounded(100000)");
    auto o = composite_order(r.cubic, r.quad);
    auto F = build_F(r.cubic, r.quad);
    for (auto const & g : r.generators) {
        auto a = ElementCoords::from5(g[0], g[1], g[2], g[3], g[4]);
        auto nf = index_factors(o, a);
        CHECK(abs(nf.n1) == 1);
        CHECK(abs(nf.n2) == 1);
        CHECK(abs(F.poly.evaluate(std::vector<Integer>(g.begin(), g.end()))) == 1);
        CHECK(element_index(o, a) == Integer(1));
    }
}

TEST_CASE("worked cubic with other quadratic fields")
{
    for (long d : {2, 3, 5, 7, 11}) {
        CAPTURE(d);
        auto r = analyze(-1, -2, 1, d);
        CHECK(r.generators.empty());
    }
}

TEST_CASE("cap 0 y stage only admits the trivial pair")
{
    auto r = analyze(-1, -2, 1, 2);
    REQUIRE(r.stages.size() == 2);
    CHECK(r.stages[0].name == "y_pairs");
    CHECK(r.stages[0].max_abs_rhs == 0);
    CHECK(r.stages[0].completeness == "proven");
    CHECK(r.stages[0].solutions == 1);
    CHECK(r.y_triples == 2);  // y0 = +-1
}

TEST_CASE("results are stable under doubling the bound")
{
    for (long d : {1, 3}) {
        auto a = analyze(-1, -2, 1, d, 500);
        auto b = analyze(-1, -2, 1, d, 1000);
        CHECK(a.generators == b.generators);
        CHECK(a.candidates == b.candidates);
    }
}

TEST_CASE("pipeline agrees with a direct index scan")
{
    // every small element of index 1 must be reported, up to x0 and sign
    auto r = analyze(-1, -2, 1, 1);
    auto o = composite_order(r.cubic, r.quad);
    std::vector<Coords5> found;
    for (long x1 = -2; x1 <= 2; ++x1)
        for (long x2 = -2; x2 <= 2; ++x2)
            for (long y0 = -2; y0 <= 2; ++y0)
                for (long y1 = -2; y1 <= 2; ++y1)
                    for (long y2 = -2; y2 <= 2; ++y2) {
                        Coords5 v{x1, x2, y0, y1, y2};
                        if (v == Coords5{0, 0, 0, 0, 0})
                            continue;
                        auto k = element_index(o, ElementCoords::from5(x1, x2, y0, y1, y2));
                        if (k && *k == 1)
                            found.push_back(canonicalize(v));
                    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    CHECK(found == worked_generators);
}

TEST_CASE("certified solutions clear the completeness flag")
{
    auto fam = quartic_trace_family();
    auto cubic = fam.specialize(2);
    BinaryCubicForm theta = norm_form_theta(cubic);
    std::string path = "certified_t2_theta.txt";
    {
        std::ofstream out(path);
        out << "#form " << theta.c3 << ' ' << theta.c2 << ' ' << theta.c1 << ' ' << theta.c0 << " sha256:"
            << form_checksum(theta) << "\n#rhs 1\n";
        for (auto const & s : fam.solutions)
            out << "1 " << s.x(2) << ' ' << s.y(2) << '\n';
    }
    PipelineConfig config;
    config.certified.push_back(load_certified_for(cubic, path));
    for (long d : {2, 5, 6}) {
        auto r = find_generators(composite_order(cubic, make_imaginary_quadratic(d)), config);
        CHECK(r.is_complete());
        CHECK(r.completeness() == "certified");
        CHECK(r.generators.empty());
    }
    // a certified list for a smaller cap than needed does not help case B
    auto r7 = find_generators(composite_order(cubic, make_imaginary_quadratic(7)), config);
    CHECK_FALSE(r7.is_complete());
    std::remove(path.c_str());
}

TEST_CASE("certified file for an unrelated form is refused")
{
    auto cubic = make_cubic_field(-1, -2, 1);
    BinaryCubicForm other{1, -14, 24, 1};
    std::string path = "certified_other.txt";
    {
        std::ofstream out(path);
        out << "#form 1 -14 24 1 sha256:" << form_checksum(other) << "\n";
    }
    CHECK_THROWS_AS(load_certified_for(cubic, path), DomainError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_certified_for(cubic, "no_such_file.txt"), DomainError);
}

TEST_CASE("json report round trip")
{
    auto r = analyze(-1, -2, 1, 1);
    auto j = report_to_json(r);
    std::string text = j.dump(2);
    CHECK(nlohmann::ordered_json::parse(text).dump(2) == text);
    CHECK(j["generators"].size() == 6);
    CHECK(j["generators"][0] == nlohmann::ordered_json::array({"0", "0", "0", "1", "0"}));
    CHECK(j["x0"] == "free");
    CHECK(j["completeness"] == "bounded(100000)");
    CHECK(j["case"] == "A");
}
