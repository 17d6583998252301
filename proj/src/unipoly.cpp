#include "monogen/unipoly.hpp"

#include <algorithm>
#include <utility>

#include "monogen/errors.hpp"

namespace monogen {

UniPoly::UniPoly(std::vector<Integer> ascending, std::string variable)
    : coeffs_(std::move(ascending))
    , var_(std::move(variable))
{
    normalize();
}

UniPoly UniPoly::constant(Integer c, std::string variable)
{
    return UniPoly({std::move(c)}, std::move(variable));
}

UniPoly UniPoly::monomial(Integer c, unsigned deg, std::string variable)
{
    std::vector<Integer> v(deg + 1);
    v[deg] = std::move(c);
    return UniPoly(std::move(v), std::move(variable));
}

void UniPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::string const & UniPoly::merged_variable(UniPoly const & o) const
{
    if (is_constant())
        return o.var_;
    if (!o.is_constant() && o.var_ != var_)
        throw DomainError("polynomials in different variables: " + var_ + ", " + o.var_);
    return var_;
}

Integer UniPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer const & UniPoly::leading() const
{
    if (coeffs_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer UniPoly::content() const
{
    Integer g = 0;
    for (auto const & c : coeffs_)
        g = gcd(g, c);
    return g;
}

Integer UniPoly::operator()(Integer const & at) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return UniPoly({}, var_);
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::taylor_shift(Integer const & shift) const
{
    // in-place synthetic division, O(n^2)
    std::vector<Integer> c = coeffs_;
    std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            c[j] += shift * c[j + 1];
    return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::compose(UniPoly const & inner) const
{
    UniPoly acc({}, inner.var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc += UniPoly::constant(*it, inner.var_);
    }
    return acc;
}

UniPoly UniPoly::divide_exact(Integer const & c) const
{
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), c.get_mpz_t()))
            throw InvariantViolation("inexact polynomial division");
        mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
    }
    return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto & c : r.coeffs_)
        c = -c;
    return r;
}

UniPoly & UniPoly::operator+=(UniPoly const & o)
{
    var_ = merged_variable(o);
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly & UniPoly::operator-=(UniPoly const & o)
{
    var_ = merged_variable(o);
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly & UniPoly::operator*=(Integer const & c)
{
    for (auto & x : coeffs_)
        x *= c;
    normalize();
    return *this;
}

UniPoly operator*(UniPoly const & a, UniPoly const & b)
{
    std::string const & var = a.merged_variable(b);
    if (a.is_zero() || b.is_zero())
        return UniPoly({}, var);
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    return UniPoly(std::move(out), var);
}

std::string UniPoly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        Integer const & c = coeffs_[k];
        if (c == 0)
            continue;
        Integer a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (k == 0 || a != 1)
            s += a.get_str();
        if (k > 0) {
            if (a != 1)
                s += "*";
            s += var_;
            if (k > 1)
                s += "^" + std::to_string(k);
        }
    }
    return s;
}

UniPoly pseudo_remainder(UniPoly const & a, UniPoly const & b)
{
    if (b.is_zero())
        throw DomainError("pseudo-remainder by zero");
    int db = b.degree();
    if (a.degree() < db)
        return a;
    Integer const & lb = b.leading();
    int e = a.degree() - db + 1;
    UniPoly r = a;
    while (!r.is_zero() && r.degree() >= db) {
        UniPoly t = UniPoly::monomial(r.leading(), static_cast<unsigned>(r.degree() - db), a.variable());
        r = r * lb - t * b;
        --e;
    }
    return r * ipow(lb, static_cast<unsigned long>(e));
}

Integer resultant(UniPoly const & f, UniPoly const & g)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("resultant with the zero polynomial");
    if (!f.is_constant() && !g.is_constant() && f.variable() != g.variable())
        throw DomainError("resultant of polynomials in different variables");

    Integer ca = f.content(), cb = g.content();
    UniPoly a = f.divide_exact(ca), b = g.divide_exact(cb);
    Integer t = ipow(ca, g.degree()) * ipow(cb, f.degree());
    int s = 1;
    if (a.degree() < b.degree()) {
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1)
            s = -s;
        std::swap(a, b);
    }
    if (b.degree() == 0)
        return s * t * ipow(b.leading(), a.degree());

    Integer g_ = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1)
            s = -s;
        UniPoly r = pseudo_remainder(a, b);
        if (r.is_zero())
            return 0;
        a = std::move(b);
        b = r.divide_exact(g_ * ipow(h, delta));
        g_ = a.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            Integer num = ipow(g_, delta);
            Integer den = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0)
            break;
    }
    Integer num = ipow(b.leading(), a.degree());
    Integer den = ipow(h, a.degree() - 1);
    Integer last;
    mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * last;
}

Integer discriminant(UniPoly const & f)
{
    int n = f.degree();
    if (n < 2)
        throw DomainError("discriminant needs degree >= 2");
    Integer r = resultant(f, f.derivative());
    Integer q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    return ((n * (n - 1) / 2) % 2 == 0) ? q : Integer(-q);
}

std::vector<Integer> integer_roots(UniPoly const & p)
{
    if (p.is_zero())
        throw DomainError("the zero polynomial has infinitely many roots");
    std::vector<Integer> roots;
    auto const & c = p.coefficients();
    std::size_t low = 0;
    while (c[low] == 0)
        ++low;
    if (low > 0)
        roots.push_back(0);
    if (static_cast<int>(low) == p.degree())
        return roots;

    // Cauchy bound on |root|
    Integer bound = 0;
    Integer const & lead = c.back();
    for (std::size_t i = low; i + 1 < c.size(); ++i) {
        Integer q = abs(c[i]) / abs(lead) + 1;
        if (q > bound)
            bound = q;
    }
    bound += 1;

    Integer const & trailing = c[low];
    auto try_candidate = [&](Integer const & m) {
        for (Integer const & cand : {m, Integer(-m)})
            if (p(cand) == 0)
                roots.push_back(cand);
    };
    if (bound < 100000) {
        for (unsigned long m = 1; m <= bound.get_ui(); ++m)
            if (mpz_divisible_ui_p(trailing.get_mpz_t(), m) != 0)
                try_candidate(Integer(m));
    } else {
        for (auto const & m : positive_divisors(trailing)) {
            if (m > bound)
                break;
            try_candidate(m);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace monogen
