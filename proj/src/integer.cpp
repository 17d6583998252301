#include "monogen/integer.hpp"

#include <algorithm>
#include <map>

#include "monogen/errors.hpp"

namespace monogen {

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from)
        throw DomainError("not an integer: '" + s + "'");
    for (std::size_t i = digits_from; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw DomainError("not an integer: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

std::vector<Integer> parse_integer_list(std::string_view text)
{
    std::vector<Integer> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        out.push_back(parse_integer(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

Integer ipow(Integer const & base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer isqrt(Integer const & v)
{
    if (v < 0)
        throw DomainError("isqrt of a negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

bool is_perfect_square(Integer const & v)
{
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

namespace {

Integer pollard_brent(Integer const & n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto step = [&](Integer const & v) { return Integer((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned> & out)
{
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    Integer f = pollard_brent(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

}  // namespace

std::vector<Integer> positive_divisors(Integer const & n)
{
    if (n == 0)
        throw DomainError("divisors of zero");
    Integer rest = abs(n);
    std::map<Integer, unsigned> primes;
    for (unsigned long p = 2; p < 10000 && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            ++primes[Integer(p)];
            rest /= p;
        }
    }
    factor_into(rest, primes);

    std::vector<Integer> divs{1};
    for (auto const & [p, e] : primes) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace monogen
