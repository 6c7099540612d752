#include "nracov/rational.hpp"

namespace nracov {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;

    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    std::string t = text;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
        neg = t[0] == '-';
        t = t.substr(1);
    }

    auto slash = t.find('/');
    auto dot = t.find('.');
    Rational value;
    if (slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den) || den == "0") return std::nullopt;
        value = Rational(Integer(num), Integer(den));
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) return std::nullopt;
        Integer den(1);
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        value = Rational(Integer(ip) * den + (fp.empty() ? Integer(0) : Integer(fp)), den);
        value.canonicalize();
    } else {
        if (!all_digits(t)) return std::nullopt;
        value = Rational(Integer(t));
    }
    return neg ? Rational(-value) : value;
}

std::string rational_str(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace nracov
