#include "monogen/thue.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "monogen/errors.hpp"

namespace monogen {

std::string describe(Completeness const & c)
{
    if (auto const * b = std::get_if<BoundedSearch>(&c))
        return "bounded(" + b->bound.get_str() + ")";
    return "certified";
}

bool ThueSolutionSet::covers(Integer const & cap) const
{
    if (is_bounded())
        return max_abs_rhs >= cap;
    for (Integer r = 1; r <= cap; ++r)
        if (!certified_rhs.count(r) && !certified_rhs.count(Integer(-r)))
            return false;
    return certified_rhs.count(0) != 0 || form.is_irreducible();
}

std::vector<ThueSolution> ThueSolutionSet::with_abs_value_at_most(Integer const & cap) const
{
    std::vector<ThueSolution> out;
    for (auto const & s : solutions)
        if (abs(s.value) <= cap)
            out.push_back(s);
    // an irreducible form vanishes only at the origin
    if (!is_bounded() && !certified_rhs.count(0) && form.is_irreducible()) {
        ThueSolution origin{0, 0, 0};
        if (std::find(out.begin(), out.end(), origin) == out.end())
            out.insert(out.begin(), origin);
    }
    return out;
}

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, no trailing zeros

void trim(QPoly & p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly remainder(QPoly a, QPoly const & b)
{
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_at(QPoly const & p, mpq_class const & x)
{
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return sgn(acc);
}

class SturmChain {
  public:
    explicit SturmChain(UniPoly const & p)
    {
        QPoly p0(p.coefficients().begin(), p.coefficients().end());
        QPoly p1;
        for (std::size_t i = 1; i < p0.size(); ++i)
            p1.push_back(p0[i] * static_cast<unsigned long>(i));
        chain_.push_back(p0);
        chain_.push_back(p1);
        while (chain_.back().size() > 1) {
            QPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
            if (r.empty())
                break;
            for (auto & c : r)
                c = -c;
            chain_.push_back(std::move(r));
        }
    }

    int variations(mpq_class const & x) const
    {
        int v = 0, last = 0;
        for (auto const & p : chain_) {
            int s = sign_at(p, x);
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++v;
            last = s;
        }
        return v;
    }

  private:
    std::vector<QPoly> chain_;
};

/* nonnegative integer R minimal with c * R^3 >= m */
Integer window_radius(Integer const & m, Integer const & c)
{
    Integer r = 0;
    while (c * r * r * r < m)
        ++r;
    return r;
}

struct SearchPlan {
    BinaryCubicForm form;
    Integer m;
    long bound;
    long radius;                   // half-width of the window around a center
    std::vector<Integer> centers;  // numerators over 2^(bits)
    unsigned bits;
    bool use_int128;
};

constexpr long kExhaustiveY = 8;

template <typename T>
struct FormKernel;

template <>
struct FormKernel<__int128> {
    __int128 c3, c2, c1, c0, m;
    explicit FormKernel(SearchPlan const & p)
        : c3(p.form.c3.get_si()), c2(p.form.c2.get_si()), c1(p.form.c1.get_si()), c0(p.form.c0.get_si())
        , m(p.m.get_si())
    {}
    // returns true and sets value when |F(x, y)| <= m
    bool test(long x, __int128 cy2, __int128 cy1, __int128 cy0, Integer & value) const
    {
        __int128 v = ((c3 * x + cy2) * x + cy1) * x + cy0;
        if (v > m || v < -m)
            return false;
        value = Integer(static_cast<long>(v));
        return true;
    }
    void prepare(long y, __int128 & cy2, __int128 & cy1, __int128 & cy0) const
    {
        __int128 yy = y;
        cy2 = c2 * yy;
        cy1 = c1 * yy * yy;
        cy0 = c0 * yy * yy * yy;
    }
};

template <>
struct FormKernel<Integer> {
    BinaryCubicForm const & f;
    Integer m;
    mutable Integer acc;
    explicit FormKernel(SearchPlan const & p)
        : f(p.form), m(p.m)
    {}
    bool test(long x, Integer const & cy2, Integer const & cy1, Integer const & cy0, Integer & value) const
    {
        acc = f.c3 * x + cy2;
        acc = acc * x + cy1;
        acc = acc * x + cy0;
        if (abs(acc) > m)
            return false;
        value = acc;
        return true;
    }
    void prepare(long y, Integer & cy2, Integer & cy1, Integer & cy0) const
    {
        Integer yy = y;
        cy2 = f.c2 * yy;
        cy1 = f.c1 * yy * yy;
        cy0 = f.c0 * yy * yy * yy;
    }
};

template <typename T>
void scan_rows(SearchPlan const & plan, long y_from, long y_to, std::vector<ThueSolution> & out)
{
    FormKernel<T> kernel(plan);
    T cy2, cy1, cy0;
    Integer value, scaled;
    Integer const half = Integer(1) << (plan.bits - 1);
    std::vector<std::pair<long, long>> windows;
    for (long y = y_from; y <= y_to; ++y) {
        kernel.prepare(y, cy2, cy1, cy0);
        windows.clear();
        for (auto const & c : plan.centers) {
            // round(c * y / 2^bits)
            scaled = c * y + half;
            mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), plan.bits);
            if (scaled > plan.bound + plan.radius || scaled < -plan.bound - plan.radius)
                continue;
            long center = scaled.get_si();
            windows.emplace_back(center - plan.radius, center + plan.radius);
        }
        if (windows.empty())
            continue;
        std::sort(windows.begin(), windows.end());
        if (y <= kExhaustiveY) {
            long hi = windows.front().second;
            for (auto const & w : windows)
                hi = std::max(hi, w.second);
            windows = {{windows.front().first, hi}};
        }
        long next = std::numeric_limits<long>::min();
        for (auto const & [lo_raw, hi_raw] : windows) {
            long lo = std::max({lo_raw, -plan.bound, next});
            long hi = std::min(hi_raw, plan.bound);
            for (long x = lo; x <= hi; ++x)
                if (kernel.test(x, cy2, cy1, cy0, value))
                    out.push_back({Integer(x), Integer(y), value});
            next = std::max(next, hi + 1);
        }
    }
}

bool solution_less(ThueSolution const & a, ThueSolution const & b)
{
    if (a.y != b.y)
        return a.y < b.y;
    return a.x < b.x;
}

void normalize_solutions(std::vector<ThueSolution> & sols)
{
    std::size_t n = sols.size();
    for (std::size_t i = 0; i < n; ++i)
        sols.push_back({-sols[i].x, -sols[i].y, -sols[i].value});
    std::sort(sols.begin(), sols.end(), solution_less);
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
}

}  // namespace

std::vector<mpq_class> root_real_parts(BinaryCubicForm const & form, unsigned precision_bits)
{
    if (form.c3 == 0)
        throw DomainError("root approximation needs a nonzero leading coefficient");
    if (form.discriminant() == 0)
        throw DomainError("degenerate form (zero discriminant)");
    UniPoly p = form.dehomogenized();
    SturmChain sturm(p);

    Integer cauchy = 0;
    for (int i = 0; i < 3; ++i) {
        Integer q = abs(p.coeff(i)) / abs(form.c3) + 2;
        cauchy = std::max(cauchy, q);
    }
    Integer denom = Integer(1) << precision_bits;
    auto point = [&](Integer const & n) {
        mpq_class q(n, denom);
        q.canonicalize();
        return q;
    };

    std::vector<mpq_class> real_roots;
    // isolation by Sturm counts on the integer grid n / 2^bits
    std::vector<std::pair<Integer, Integer>> stack{{-cauchy * denom, cauchy * denom}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int count = sturm.variations(point(lo)) - sturm.variations(point(hi));
        if (count == 0)
            continue;
        if (hi - lo == 1) {
            // root in (lo, hi], midpoint is within half a grid step
            for (int k = 0; k < count; ++k)
                real_roots.emplace_back(Integer(2 * lo + 1), Integer(2 * denom));
            continue;
        }
        Integer mid;
        mpz_fdiv_q_2exp(mid.get_mpz_t(), Integer(lo + hi).get_mpz_t(), 1);
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    for (auto & r : real_roots)
        r.canonicalize();
    std::sort(real_roots.begin(), real_roots.end());

    std::vector<mpq_class> parts = real_roots;
    if (real_roots.size() == 1) {
        // the complex pair has real part (-c2/c3 - r) / 2
        mpq_class lead(-form.c2, form.c3);
        lead.canonicalize();
        mpq_class re = (lead - real_roots[0]) / 2;
        parts.push_back(re);
    }
    return parts;
}

ThueSolutionSet solve_thue_range(BinaryCubicForm const & form, Integer const & max_abs_rhs, Integer const & bound)
{
    if (form.discriminant() == 0)
        throw DomainError("degenerate form (zero discriminant): " + form.canonical_encoding());
    if (max_abs_rhs < 0)
        throw DomainError("max_abs_rhs must be nonnegative");
    if (bound < 1 || bound > Integer(1) << 40)
        throw DomainError("search bound must lie in [1, 2^40]");

    if (form.c3 == 0) {
        if (form.c0 == 0)
            throw DomainError("form vanishes on both coordinate axes: " + form.canonical_encoding());
        BinaryCubicForm swapped{form.c0, form.c1, form.c2, form.c3};
        ThueSolutionSet s = solve_thue_range(swapped, max_abs_rhs, bound);
        for (auto & sol : s.solutions)
            std::swap(sol.x, sol.y);
        std::sort(s.solutions.begin(), s.solutions.end(), solution_less);
        s.form = form;
        return s;
    }

    SearchPlan plan{form, max_abs_rhs, bound.get_si(), 0, {}, 0, false};
    // rounding error of center * y stays below 1/2 once 2^bits >= 2 * bound
    plan.bits = std::max<unsigned>(20, static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2)) + 2);
    plan.radius = window_radius(max_abs_rhs, abs(form.c3)).get_si() + 1;
    for (auto const & c : root_real_parts(form, plan.bits + 1)) {
        // numerator over 2^bits, error at most 2^-(bits+1) + 2^-(bits+1)
        mpq_class scaled = c * mpq_class(Integer(1) << plan.bits);
        Integer n;
        mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        plan.centers.push_back(n);
    }

    Integer cmax = std::max<Integer>({Integer(abs(form.c3)), Integer(abs(form.c2)), Integer(abs(form.c1)), Integer(abs(form.c0)), max_abs_rhs});
    Integer reach = bound + plan.radius;
    plan.use_int128 = mpz_sizeinbase(cmax.get_mpz_t(), 2) + 3 * mpz_sizeinbase(reach.get_mpz_t(), 2) + 4 < 120
        && cmax.fits_slong_p();

    long const y_max = plan.bound;
    unsigned threads = std::max(1u, std::min<unsigned>(worker_threads(), static_cast<unsigned>(y_max / 2048 + 1)));
    std::vector<std::vector<ThueSolution>> parts(threads);
    auto work = [&](unsigned t) {
        long from = y_max * static_cast<long>(t) / threads + (t == 0 ? 0 : 1);
        long to = y_max * static_cast<long>(t + 1) / threads;
        if (plan.use_int128)
            scan_rows<__int128>(plan, from, to, parts[t]);
        else
            scan_rows<Integer>(plan, from, to, parts[t]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
        for (auto & th : pool)
            th.join();
    }

    ThueSolutionSet result{form, max_abs_rhs, {}, BoundedSearch{bound}, {}};
    for (auto & p : parts)
        result.solutions.insert(result.solutions.end(), p.begin(), p.end());
    normalize_solutions(result.solutions);
    return result;
}

std::vector<Integer> solve_norm_pm(CubicFieldSpec const & cubic, Integer const & y1, Integer const & y2,
                                   std::set<Integer> const & rhs)
{
    UniPoly p = norm_polynomial_in_y0(cubic, y1, y2);
    std::set<Integer> found;
    for (auto const & r : rhs) {
        UniPoly q = p - UniPoly::constant(r, p.variable());
        if (q.is_constant()) {
            if (q.is_zero())
                throw DomainError("norm polynomial is constant and equal to the target");
            continue;
        }
        for (auto const & y0 : integer_roots(q))
            found.insert(y0);
    }
    std::vector<Integer> out(found.begin(), found.end());
    for (auto const & y0 : out)
        if (!rhs.count(norm_L_element(cubic, y0, y1, y2)))
            throw InvariantViolation("y0 = " + y0.get_str() + " fails re-evaluation of the norm");
    return out;
}

std::string form_checksum(BinaryCubicForm const & form)
{
    std::string msg = form.canonical_encoding();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(msg.data(), msg.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

namespace {

std::vector<std::string> split_ws(std::string const & line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok)
        out.push_back(tok);
    return out;
}

BinaryCubicForm parse_header(std::string const & line, std::size_t lineno)
{
    auto tok = split_ws(line);
    if (tok.size() != 6 || tok[0] != "#form" || tok[5].rfind("sha256:", 0) != 0)
        throw ParseError(lineno, "expected '#form c3 c2 c1 c0 sha256:<hex>'");
    BinaryCubicForm f;
    try {
        f = {parse_integer(tok[1]), parse_integer(tok[2]), parse_integer(tok[3]), parse_integer(tok[4])};
    } catch (DomainError const & e) {
        throw ParseError(lineno, e.what());
    }
    if (tok[5].substr(7) != form_checksum(f))
        throw IntegrityError("checksum in header does not match the form " + f.canonical_encoding());
    return f;
}

}  // namespace

ThueSolutionSet ingest_certified(std::istream & in, BinaryCubicForm const & form, std::string const & source_id)
{
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    bool declared_rhs = false;
    ThueSolutionSet set{form, 0, {}, ExternalCertified{source_id}, {}};
    std::set<Integer> seen_rhs;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = split_ws(line);
        if (tok.empty())
            continue;
        if (!have_header) {
            BinaryCubicForm header = parse_header(line, lineno);
            if (!(header == form))
                throw IntegrityError("certified file is for form " + header.canonical_encoding() + ", expected "
                                     + form.canonical_encoding());
            have_header = true;
            continue;
        }
        if (tok[0] == "#rhs") {
            declared_rhs = true;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                try {
                    set.certified_rhs.insert(parse_integer(tok[i]));
                } catch (DomainError const & e) {
                    throw ParseError(lineno, e.what());
                }
            }
            continue;
        }
        if (tok[0][0] == '#')
            continue;
        if (tok.size() != 3)
            throw ParseError(lineno, "expected 'rhs x y'");
        ThueSolution s;
        try {
            s = {parse_integer(tok[1]), parse_integer(tok[2]), parse_integer(tok[0])};
        } catch (DomainError const & e) {
            throw ParseError(lineno, e.what());
        }
        Integer actual = form(s.x, s.y);
        if (actual != s.value)
            throw IntegrityError("entry (" + s.x.get_str() + ", " + s.y.get_str() + ") on line "
                                 + std::to_string(lineno) + " claims value " + s.value.get_str() + " but the form gives "
                                 + actual.get_str());
        seen_rhs.insert(s.value);
        set.solutions.push_back(std::move(s));
    }
    if (!have_header)
        throw ParseError(lineno + 1, "missing '#form' header");
    if (!declared_rhs)
        set.certified_rhs = seen_rhs;
    for (auto const & s : set.solutions)
        if (!set.certified_rhs.count(s.value) && !set.certified_rhs.count(Integer(-s.value)))
            throw IntegrityError("entry (" + s.x.get_str() + ", " + s.y.get_str() + ") has an undeclared right hand side");
    for (auto const & r : std::set<Integer>(set.certified_rhs))
        set.certified_rhs.insert(Integer(-r));
    for (auto const & r : set.certified_rhs)
        set.max_abs_rhs = std::max(set.max_abs_rhs, Integer(abs(r)));
    normalize_solutions(set.solutions);
    return set;
}

ThueSolutionSet ingest_certified_file(std::string const & path, BinaryCubicForm const & form)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open certified file '" + path + "'");
    return ingest_certified(in, form, path);
}

BinaryCubicForm certified_file_form(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open certified file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!split_ws(line).empty())
            return parse_header(line, lineno);
    }
    throw ParseError(lineno + 1, "missing '#form' header");
}

void write_certified(std::ostream & out, ThueSolutionSet const & set)
{
    auto const & f = set.form;
    out << "#form " << f.c3 << ' ' << f.c2 << ' ' << f.c1 << ' ' << f.c0 << " sha256:" << form_checksum(f) << '\n';
    if (!set.certified_rhs.empty()) {
        out << "#rhs";
        for (auto const & r : set.certified_rhs)
            out << ' ' << r;
        out << '\n';
    }
    for (auto const & s : set.solutions)
        out << s.value << ' ' << s.x << ' ' << s.y << '\n';
}

ThueSolutionSet theta_to_shifted(ThueSolutionSet const & set, CubicFieldSpec const & cubic)
{
    if (!(set.form == norm_form_theta(cubic)))
        throw DomainError("solution set is not for the theta norm form of this cubic");
    ThueSolutionSet out = set;
    out.form = norm_form_shifted(cubic);
    for (auto & s : out.solutions) {
        s.x = s.x + cubic.a2 * s.y;
        if (out.form(s.x, s.y) != s.value)
            throw InvariantViolation("shift (x, y) -> (x + a2 y, y) broke a solution");
    }
    std::sort(out.solutions.begin(), out.solutions.end(), solution_less);
    return out;
}

}  // namespace monogen
