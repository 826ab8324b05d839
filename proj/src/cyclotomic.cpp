#include "qweyl/cyclotomic.hpp"

namespace qweyl {

RootOfUnity RootOfUnity::from_fraction(Int a, Int n) {
    if (n == 0) throw UsageError("root of unity with zero denominator");
    if (n < 0) {
        a = -a;
        n = -n;
    }
    a %= n;
    if (a < 0) a += n;
    Int g = gcd(a, n);  // gcd(0, n) = n, so the identity reduces to 0/1
    return RootOfUnity(a / g, n / g);
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
    auto bad = [&]() -> RootOfUnity {
        throw UsageError("malformed root of unity '" + text +
                         "' (expected \"a/N\" with N nonzero)");
    };
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return bad();
            return from_fraction(Int(text), 1);
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return bad();
        Int n(den);
        if (n == 0) return bad();
        return from_fraction(Int(num), n);
    } catch (const std::exception&) {
        return bad();
    }
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RootOfUnity RootOfUnity::inverse() const {
    return from_fraction(-num_, den_);
}

RootOfUnity RootOfUnity::pow(const Int& k) const {
    return from_fraction(num_ * k, den_);
}

std::string RootOfUnity::str() const {
    return num_.str() + "/" + den_.str();
}

bool quantum_number_is_zero(const Int& n, const RootOfUnity& x) {
    if (n == 0) return true;
    if (x.is_one()) return false;
    return n > 0 && x.pow(n).is_one();
}

}  // namespace qweyl
