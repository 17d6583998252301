#ifndef MONOGEN_PIPELINE_HPP
#define MONOGEN_PIPELINE_HPP

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "monogen/index_form.hpp"
#include "monogen/order.hpp"
#include "monogen/thue.hpp"

namespace monogen {

/* (x1, x2, y0, y1, y2); x0 is a free translation parameter */
using Coords5 = std::array<Integer, 5>;

/* v or -v, whichever has a positive first nonzero entry. Throws
 * DomainError for the zero vector. */
Coords5 canonicalize(Coords5 const & v);

struct PipelineConfig {
    Integer bound = 100000;
    /* solution sets for the shifted norm form of the cubic */
    std::vector<ThueSolutionSet> certified;
};

/* Reads a certified file written either for the shifted norm form or
 * for N(x - theta y); the latter is mapped onto the shifted form. */
ThueSolutionSet load_certified_for(CubicFieldSpec const & cubic, std::string const & path);

struct StageReport {
    std::string name;
    BinaryCubicForm form;
    Integer max_abs_rhs;
    std::string completeness;  // "proven", "certified" or "bounded(B)"
    std::size_t solutions = 0;
};

struct GeneratorReport {
    CubicFieldSpec cubic;
    ImagQuadSpec quad;
    InequalityBounds bounds;
    std::vector<StageReport> stages;
    std::size_t y_triples = 0;
    std::size_t candidates = 0;
    /* canonical, ascending, duplicate-free, each of index 1 */
    std::vector<Coords5> generators;
    double elapsed_ms = 0;

    bool is_complete() const;
    /* "certified" or "bounded(B)" */
    std::string completeness() const;
};

GeneratorReport find_generators(CompositeOrder const & order, PipelineConfig const & config);

nlohmann::ordered_json report_to_json(GeneratorReport const & report);

}  // namespace monogen

#endif  // MONOGEN_PIPELINE_HPP
