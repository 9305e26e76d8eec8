#include "ainf/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {

Scalar parse_scalar(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("bad scalar: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw bad();
        size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw bad();
        for (size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return Int(std::string(part));
    };
    if (slash == std::string_view::npos) return Scalar(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Scalar(num, den);
}

std::string format_scalar(const Scalar& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

} // namespace ainf
