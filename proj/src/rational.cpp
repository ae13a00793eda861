#include "orbistring/rational.hpp"

#include <stdexcept>

namespace orbistring {

Rational parse_rational(const std::string& text)
{
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
    const auto slash = text.find('/');
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw bad();
    if (num[0] == '+')
        num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0)
        throw bad();
    return make_rational(n, d);
}

}  // namespace orbistring
