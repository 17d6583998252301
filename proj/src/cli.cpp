#include "monogen/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "monogen/errors.hpp"
#include "monogen/families.hpp"
#include "monogen/pipeline.hpp"

namespace monogen::cli {

namespace {

enum class Command { analyze, family, thue, build_f };

struct CliConfig {
    Command command = Command::analyze;
    std::string cubic;
    std::string d;
    std::string d_list;
    std::string bound = "100000";
    std::vector<std::string> certified;
    bool json = false;
    std::string out_path;
    std::string t0 = "2";
    std::string t_max;
    std::string form;
    std::string rhs_max = "1";
    bool parametric = false;
};

std::vector<Integer> parse_exact(std::string const & text, std::size_t n, char const * what)
{
    auto v = parse_integer_list(text);
    if (v.size() != n)
        throw DomainError(std::string(what) + " needs " + std::to_string(n) + " comma separated integers");
    return v;
}

std::vector<Integer> d_values(CliConfig const & c)
{
    if (!c.d.empty() && !c.d_list.empty())
        throw DomainError("give either --d or --d-list, not both");
    if (c.d.empty() && c.d_list.empty())
        throw DomainError("missing --d or --d-list");
    std::vector<Integer> ds = c.d.empty() ? parse_integer_list(c.d_list) : std::vector<Integer>{parse_integer(c.d)};
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

CubicFieldSpec cubic_from(CliConfig const & c)
{
    if (c.cubic.empty())
        throw DomainError("missing --cubic a2,a1,a0");
    auto v = parse_exact(c.cubic, 3, "--cubic");
    return make_cubic_field(v[0], v[1], v[2]);
}

std::string text_report(GeneratorReport const & r)
{
    std::ostringstream s;
    s << "cubic x^3 + (" << r.cubic.a2 << ")x^2 + (" << r.cubic.a1 << ")x + (" << r.cubic.a0 << "), disc "
      << r.cubic.disc << "\n";
    s << "d = " << r.quad.d << " (case " << to_string(r.quad.kase) << "), D_M = " << r.quad.disc << "\n";
    s << "caps: x " << r.bounds.x_rhs_max << ", y " << r.bounds.y_rhs_max << "\n";
    for (auto const & st : r.stages)
        s << "stage " << st.name << ": " << st.solutions << " solutions, " << st.completeness << "\n";
    s << "candidates " << r.candidates << ", generators " << r.generators.size() << " (x0 free)\n";
    for (auto const & g : r.generators)
        s << "  (" << g[0] << ", " << g[1] << ", " << g[2] << ", " << g[3] << ", " << g[4] << ")\n";
    s << "completeness: " << r.completeness() << "\n";
    return s.str();
}

int analyze(CliConfig const & c, std::ostream & out)
{
    CubicFieldSpec cubic = cubic_from(c);
    std::vector<Integer> ds = d_values(c);
    PipelineConfig config;
    config.bound = parse_integer(c.bound);
    for (auto const & path : c.certified)
        config.certified.push_back(load_certified_for(cubic, path));

    std::vector<GeneratorReport> reports;
    for (auto const & d : ds)
        reports.push_back(find_generators(composite_order(cubic, make_imaginary_quadratic(d)), config));

    bool complete = std::all_of(reports.begin(), reports.end(), [](auto const & r) { return r.is_complete(); });
    if (c.json) {
        if (c.d_list.empty()) {
            out << report_to_json(reports.front()).dump(2) << "\n";
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (auto const & r : reports)
                arr.push_back(report_to_json(r));
            out << arr.dump(2) << "\n";
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i)
            out << (i ? "\n" : "") << text_report(reports[i]);
    }
    return complete ? 0 : 2;
}

int family(CliConfig const & c, std::ostream & out)
{
    FamilySpec fam = quartic_trace_family();
    Integer t0 = parse_integer(c.t0);
    FamilyProof proof = prove_family_nonmonogenic(fam, t0);
    nlohmann::ordered_json j = proof_to_json(proof);

    // optional numeric spot check of the certified signs
    bool numeric_ok = true;
    if (!c.t_max.empty()) {
        Integer t_max = parse_integer(c.t_max);
        for (auto const & v : proof.candidates)
            for (std::size_t k = 0; k < v.d_coefficients.size(); ++k)
                if (v.negative[k])
                    for (Integer t = t0; t <= t_max; ++t)
                        if (v.d_coefficients[k](t) >= 0)
                            numeric_ok = false;
        j["numeric_check"] = {{"t_from", t0.get_str()}, {"t_to", t_max.get_str()}, {"consistent", numeric_ok}};
    }
    if (!numeric_ok)
        throw InvariantViolation("certified-negative coefficient failed numeric evaluation");

    if (c.json) {
        out << j.dump(2) << "\n";
    } else {
        out << "family " << proof.family << ", t >= " << proof.t0 << "\n";
        for (auto const & v : proof.candidates) {
            out << v.id << ": (x1, x2) = (" << v.x.x1.to_string() << ", " << v.x.x2.to_string() << ")\n";
            for (std::size_t k = 0; k < v.d_coefficients.size(); ++k)
                out << "  d^" << k << ": " << v.d_coefficients[k].to_string()
                    << (v.negative[k] ? "  [negative]" : "  [not certified]") << "\n";
        }
        for (auto const & e : proof.excluded)
            out << "excluded " << e << "\n";
        out << "verdict: " << j["verdict"].get<std::string>() << "\n";
    }
    return proof.verdict == FamilyVerdict::NonMonogenic ? 0 : 2;
}

int thue(CliConfig const & c, std::ostream & out)
{
    if (c.form.empty())
        throw DomainError("missing --form c3,c2,c1,c0");
    auto v = parse_exact(c.form, 4, "--form");
    BinaryCubicForm form{v[0], v[1], v[2], v[3]};
    Integer rhs_max = parse_integer(c.rhs_max);
    ThueSolutionSet set = c.certified.empty() ? solve_thue_range(form, rhs_max, parse_integer(c.bound))
                                              : ingest_certified_file(c.certified.front(), form);
    if (c.json) {
        nlohmann::ordered_json j;
        j["form"] = {form.c3.get_str(), form.c2.get_str(), form.c1.get_str(), form.c0.get_str()};
        j["max_abs_rhs"] = set.max_abs_rhs.get_str();
        j["completeness"] = describe(set.completeness);
        auto sols = nlohmann::ordered_json::array();
        for (auto const & s : set.solutions)
            if (abs(s.value) <= rhs_max)
                sols.push_back({s.x.get_str(), s.y.get_str(), s.value.get_str()});
        j["solutions"] = sols;
        out << j.dump(2) << "\n";
    } else {
        out << "# completeness " << describe(set.completeness) << "\n";
        for (auto const & s : set.solutions)
            if (abs(s.value) <= rhs_max)
                out << s.value << ' ' << s.x << ' ' << s.y << "\n";
    }
    return set.is_bounded() ? 2 : 0;
}

int build_f(CliConfig const & c, std::ostream & out)
{
    if (c.parametric) {
        FamilySpec fam = quartic_trace_family();
        out << build_F_parametric(fam.a2, fam.a1, fam.a0).poly.to_canonical_text();
        return 0;
    }
    CubicFieldSpec cubic = cubic_from(c);
    if (c.d.empty())
        throw DomainError("missing --d");
    out << build_F(cubic, make_imaginary_quadratic(parse_integer(c.d))).poly.to_canonical_text();
    return 0;
}

}  // namespace

int run(int argc, char const * const * argv, std::ostream & out, std::ostream & err)
{
    CliConfig c;
    CLI::App app{"Power integral bases in composites of a totally real cubic and an imaginary quadratic field"};
    app.require_subcommand(1);

    auto * analyze_cmd = app.add_subcommand("analyze", "list all generators of power integral bases of the order");
    analyze_cmd->add_option("--cubic", c.cubic, "a2,a1,a0 of x^3 + a2 x^2 + a1 x + a0")->allow_extra_args(false);
    analyze_cmd->add_option("--d", c.d, "square-free d > 0, M = Q(sqrt(-d))");
    analyze_cmd->add_option("--d-list", c.d_list, "comma separated d values, reported in ascending order");
    analyze_cmd->add_option("--bound", c.bound, "Thue search bound on max(|x|, |y|)");
    analyze_cmd->add_option("--certified", c.certified, "certified Thue solution file (repeatable)");
    analyze_cmd->add_flag("--json", c.json);
    analyze_cmd->add_option("--out", c.out_path);

    auto * family_cmd = app.add_subcommand("family", "prove non-monogenity of the parametric family");
    family_cmd->add_option("--t0", c.t0, "lower end of the parameter range");
    family_cmd->add_option("--t-max", c.t_max, "numerically spot check signs up to this t");
    family_cmd->add_flag("--json", c.json);
    family_cmd->add_option("--out", c.out_path);

    auto * thue_cmd = app.add_subcommand("thue", "solve |F(x, y)| <= m for a binary cubic form");
    thue_cmd->add_option("--form", c.form, "c3,c2,c1,c0 of c3 x^3 + c2 x^2 y + c1 x y^2 + c0 y^3");
    thue_cmd->add_option("--rhs-max", c.rhs_max, "m");
    thue_cmd->add_option("--bound", c.bound, "search bound on max(|x|, |y|)");
    thue_cmd->add_option("--certified", c.certified, "read and verify a certified solution file instead");
    thue_cmd->add_flag("--json", c.json);
    thue_cmd->add_option("--out", c.out_path);

    auto * build_cmd = app.add_subcommand("build-f", "print the index form F as canonical text");
    build_cmd->add_option("--cubic", c.cubic, "a2,a1,a0");
    build_cmd->add_option("--d", c.d, "square-free d > 0");
    build_cmd->add_flag("--parametric", c.parametric, "the family form over (x1, x2, y0, y1, y2, t, d)");
    build_cmd->add_option("--out", c.out_path);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 1;
    }

    if (analyze_cmd->parsed())
        c.command = Command::analyze;
    else if (family_cmd->parsed())
        c.command = Command::family;
    else if (thue_cmd->parsed())
        c.command = Command::thue;
    else
        c.command = Command::build_f;

    try {
        std::ofstream file;
        if (!c.out_path.empty()) {
            file.open(c.out_path);
            if (!file)
                throw DomainError("cannot write '" + c.out_path + "'");
        }
        std::ostream & sink = c.out_path.empty() ? out : file;
        switch (c.command) {
        case Command::analyze:
            return analyze(c, sink);
        case Command::family:
            return family(c, sink);
        case Command::thue:
            return thue(c, sink);
        case Command::build_f:
            return build_f(c, sink);
        }
    } catch (DomainError const & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (ParseError const & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (IntegrityError const & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace monogen::cli
