#ifndef BREDUX_RATIONAL_HPP
#define BREDUX_RATIONAL_HPP

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>

namespace bredux {

// All weights and budgets are exact rationals; in practice they are 0/1
// integers, but the file format admits "p/q" and the TSP budget test "<= k"
// must never go through floating point.
using Rational = boost::rational<long long>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts a decimal integer ("3", "-1") or a ratio "p/q" with q > 0.
inline Rational parse_rational(const std::string& text)
{
    std::size_t pos = 0;
    long long num = 0;
    try {
        num = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw Error("not a rational: '" + text + "'");
    }
    if (pos == text.size())
        return Rational(num);
    if (text[pos] != '/')
        throw Error("not a rational: '" + text + "'");
    std::size_t den_pos = 0;
    const std::string den_text = text.substr(pos + 1);
    long long den = 0;
    try {
        den = std::stoll(den_text, &den_pos);
    } catch (const std::exception&) {
        throw Error("not a rational: '" + text + "'");
    }
    if (den_pos != den_text.size() || den <= 0)
        throw Error("not a rational: '" + text + "'");
    return Rational(num, den);
}

inline std::string format_rational(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace bredux

#endif
