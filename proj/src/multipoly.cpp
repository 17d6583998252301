#include "monogen/multipoly.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "monogen/errors.hpp"

namespace monogen {

bool grlex_greater(Monomial const & a, Monomial const & b)
{
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da > db;
    return a.exp > b.exp;
}

std::size_t MonomialHash::operator()(Monomial const & m) const noexcept
{
    std::uint64_t w[2];
    std::memcpy(w, m.exp.data(), sizeof(w));
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (w[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

Monomial multiply(Monomial const & a, Monomial const & b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        unsigned s = unsigned(a.exp[i]) + b.exp[i];
        if (s > 255)
            throw DomainError("monomial exponent overflow");
        r.exp[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> variables)
    : vars_(std::move(variables))
{
    if (vars_.size() > kMaxVariables)
        throw DomainError("too many variables");
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, Integer c)
{
    MultiPoly p(std::move(variables));
    if (c != 0)
        p.terms_.emplace_back(Monomial{}, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string const & name)
{
    MultiPoly p(std::move(variables));
    Monomial m;
    m.exp[p.index_of(name)] = 1;
    p.terms_.emplace_back(m, Integer(1));
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> variables, std::vector<Term> terms)
{
    MultiPoly p(std::move(variables));
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    for (auto & [m, c] : terms) {
        for (std::size_t i = p.vars_.size(); i < kMaxVariables; ++i)
            if (m.exp[i] != 0)
                throw DomainError("exponent on an undeclared variable");
        acc[m] += c;
    }
    for (auto & [m, c] : acc)
        if (c != 0)
            p.terms_.emplace_back(m, std::move(c));
    p.sort_terms();
    return p;
}

void MultiPoly::sort_terms()
{
    std::sort(terms_.begin(), terms_.end(),
              [](Term const & a, Term const & b) { return grlex_greater(a.first, b.first); });
}

std::size_t MultiPoly::index_of(std::string const & name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw DomainError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::has_variable(std::string const & name) const
{
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

unsigned MultiPoly::total_degree() const
{
    return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

unsigned MultiPoly::degree_in(std::string const & name) const
{
    std::size_t i = index_of(name);
    unsigned d = 0;
    for (auto const & t : terms_)
        d = std::max<unsigned>(d, t.first.exp[i]);
    return d;
}

Integer MultiPoly::constant_term() const
{
    if (!terms_.empty() && terms_.back().first == Monomial{})
        return terms_.back().second;
    return 0;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto & t : r.terms_)
        t.second = -t.second;
    return r;
}

namespace {

template <typename Op>
std::vector<Term> merge(std::vector<Term> const & a, std::vector<Term> const & b, Op op)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
            out.emplace_back(b[j].first, op(Integer(0), b[j].second));
            ++j;
        } else {
            Integer c = op(a[i].second, b[j].second);
            if (c != 0)
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly & MultiPoly::operator+=(MultiPoly const & o)
{
    if (vars_ != o.vars_)
        throw DomainError("adding polynomials over different rings");
    terms_ = merge(terms_, o.terms_, [](Integer const & x, Integer const & y) { return Integer(x + y); });
    return *this;
}

MultiPoly & MultiPoly::operator-=(MultiPoly const & o)
{
    if (vars_ != o.vars_)
        throw DomainError("subtracting polynomials over different rings");
    terms_ = merge(terms_, o.terms_, [](Integer const & x, Integer const & y) { return Integer(x - y); });
    return *this;
}

MultiPoly & MultiPoly::operator*=(Integer const & c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto & t : terms_)
        t.second *= c;
    return *this;
}

MultiPoly operator*(MultiPoly const & a, MultiPoly const & b)
{
    if (a.vars_ != b.vars_)
        throw DomainError("multiplying polynomials over different rings");
    MultiPoly r(a.vars_);
    if (a.is_zero() || b.is_zero())
        return r;
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (auto const & [ma, ca] : a.terms_)
        for (auto const & [mb, cb] : b.terms_)
            mpz_addmul(acc[multiply(ma, mb)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    r.terms_.reserve(acc.size());
    for (auto & [m, c] : acc)
        if (c != 0)
            r.terms_.emplace_back(m, std::move(c));
    r.sort_terms();
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Integer MultiPoly::evaluate(std::span<Integer const> values) const
{
    if (values.size() != vars_.size())
        throw DomainError("evaluation needs one value per variable");
    std::vector<std::vector<Integer>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        unsigned d = 0;
        for (auto const & t : terms_)
            d = std::max<unsigned>(d, t.first.exp[i]);
        powers[i].resize(d + 1);
        powers[i][0] = 1;
        for (unsigned k = 1; k <= d; ++k)
            powers[i][k] = powers[i][k - 1] * values[i];
    }
    Integer sum = 0, prod;
    for (auto const & [m, c] : terms_) {
        prod = c;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (m.exp[i] != 0)
                prod *= powers[i][m.exp[i]];
        sum += prod;
    }
    return sum;
}

Integer MultiPoly::evaluate(std::map<std::string, Integer> const & values) const
{
    std::vector<Integer> v(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end())
            throw DomainError("no value for variable '" + vars_[i] + "'");
        v[i] = it->second;
    }
    return evaluate(v);
}

MultiPoly MultiPoly::substitute(std::string const & name, Integer const & value) const
{
    std::size_t idx = index_of(name);
    std::vector<Integer> powers{1};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto const & [m, c] : terms_) {
        while (powers.size() <= m.exp[idx])
            powers.push_back(powers.back() * value);
        Monomial mm = m;
        mm.exp[idx] = 0;
        out.emplace_back(mm, c * powers[m.exp[idx]]);
    }
    return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::string const & name, MultiPoly const & value) const
{
    if (value.vars_ != vars_)
        throw DomainError("substituted value lives in a different ring");
    std::size_t idx = index_of(name);
    // group by exponent of the substituted variable
    std::map<unsigned, std::vector<Term>> groups;
    for (auto const & [m, c] : terms_) {
        Monomial mm = m;
        mm.exp[idx] = 0;
        groups[m.exp[idx]].emplace_back(mm, c);
    }
    MultiPoly result(vars_);
    MultiPoly power = constant(vars_, 1);
    unsigned at = 0;
    for (auto & [k, ts] : groups) {
        while (at < k) {
            power = power * value;
            ++at;
        }
        MultiPoly part = from_terms(vars_, std::move(ts));
        result += k == 0 ? part : part * power;
    }
    return result;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> variables) const
{
    MultiPoly r(std::move(variables));
    std::vector<int> target(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(r.vars_.begin(), r.vars_.end(), vars_[i]);
        if (it != r.vars_.end())
            target[i] = static_cast<int>(it - r.vars_.begin());
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto const & [m, c] : terms_) {
        Monomial mm;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.exp[i] == 0)
                continue;
            if (target[i] < 0)
                throw DomainError("variable '" + vars_[i] + "' occurs but is not in the target ring");
            mm.exp[target[i]] = m.exp[i];
        }
        out.emplace_back(mm, c);
    }
    return from_terms(r.vars_, std::move(out));
}

MultiPoly MultiPoly::drop_variables(std::vector<std::string> const & names) const
{
    std::vector<std::string> keep;
    for (auto const & v : vars_)
        if (std::find(names.begin(), names.end(), v) == names.end())
            keep.push_back(v);
    return with_variables(std::move(keep));
}

MultiPoly MultiPoly::coefficient_in(std::string const & name, unsigned k) const
{
    std::size_t idx = index_of(name);
    std::vector<Term> out;
    for (auto const & [m, c] : terms_) {
        if (m.exp[idx] != k)
            continue;
        Monomial mm = m;
        mm.exp[idx] = 0;
        out.emplace_back(mm, c);
    }
    return from_terms(vars_, std::move(out));
}

UniPoly MultiPoly::to_univariate(std::string const & name) const
{
    std::size_t idx = index_of(name);
    std::vector<Integer> coeffs(degree_in(name) + 1);
    for (auto const & [m, c] : terms_) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (i != idx && m.exp[i] != 0)
                throw DomainError("polynomial is not univariate in '" + name + "'");
        coeffs[m.exp[idx]] += c;
    }
    return UniPoly(std::move(coeffs), name);
}

std::string MultiPoly::monomial_string(Monomial const & m) const
{
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (m.exp[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += vars_[i];
        if (m.exp[i] > 1)
            s += "^" + std::to_string(m.exp[i]);
    }
    return s.empty() ? "1" : s;
}

std::string MultiPoly::to_canonical_text() const
{
    std::string s;
    for (auto const & [m, c] : terms_)
        s += c.get_str() + " " + monomial_string(m) + "\n";
    return s;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto const & [m, c] : terms_) {
        Integer a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        bool unit_monomial = m == Monomial{};
        if (unit_monomial || a != 1)
            s += a.get_str();
        if (!unit_monomial) {
            if (a != 1)
                s += "*";
            s += monomial_string(m);
        }
    }
    return s;
}

MultiPoly from_univariate(UniPoly const & p, std::vector<std::string> variables)
{
    MultiPoly r(std::move(variables));
    if (p.is_constant())
        return MultiPoly::constant(r.variables(), p.coeff(0));
    std::size_t idx = r.index_of(p.variable());
    std::vector<Term> terms;
    auto const & c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0)
            continue;
        Monomial m;
        m.exp[idx] = static_cast<std::uint8_t>(k);
        terms.emplace_back(m, c[k]);
    }
    return MultiPoly::from_terms(r.variables(), std::move(terms));
}

}  // namespace monogen
