#include "tropitor/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace tropitor {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw InputError("bad rational literal '" + s + "': " + e.what());
    }
}

std::string rat_str(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Int ceil_sqrt(const Rat& x) {
    if (x < 0) throw StructuralError("ceil_sqrt of negative value");
    // ceil of p/q, then integer sqrt, then adjust upward if needed.
    Int p = numerator(x), q = denominator(x);
    Int c = (p + q - 1) / q;
    Int w = boost::multiprecision::sqrt(c);
    while (Rat(w * w) < x) ++w;
    while (w > 0 && Rat((w - 1) * (w - 1)) >= x) --w;
    return w;
}

} // namespace tropitor
