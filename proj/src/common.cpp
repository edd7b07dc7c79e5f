#include "plueckerfan/common.hpp"

namespace pf {

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw InvalidArgument("not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace pf
