#include "splitcone/rational.hpp"

#include <cctype>

namespace splitcone {

std::string rat_to_string(const Rat& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t.empty())
        throw std::invalid_argument("empty rational literal");

    auto dot = t.find('.');
    if (dot != std::string::npos) {
        // Decimal literal: convert exactly as printed.
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        size_t frac_len = t.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("malformed decimal literal: " + s);
        mpz_class num, den(1);
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("malformed decimal literal: " + s);
        for (size_t i = 0; i < frac_len; ++i)
            den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

    Rat r;
    if (r.set_str(t, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace splitcone
