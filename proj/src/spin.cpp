#include "spinnet/spin.hpp"

#include <cctype>
#include <cstdlib>

namespace spinnet {

namespace {

bool parse_int(const std::string& s, long long& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

}  // namespace

int parse_twice(const std::string& text) {
    const auto slash = text.find('/');
    long long num = 0;
    if (slash == std::string::npos) {
        if (!parse_int(text, num)) throw ArgumentError("bad spin value: '" + text + "'");
        return static_cast<int>(2 * num);
    }
    long long den = 0;
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
        throw ArgumentError("bad spin value: '" + text + "'");
    if (den != 2) throw ArgumentError("spins must be integers or halves, got '" + text + "'");
    return static_cast<int>(num);
}

Spin parse_spin(const std::string& text) {
    const int t = parse_twice(text);
    if (t < 0) throw ArgumentError("spin must be nonnegative: '" + text + "'");
    return Spin(t);
}

std::string format_twice(int twice) {
    if ((twice & 1) == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

}  // namespace spinnet
