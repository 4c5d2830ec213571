#include <ostream>
#include <sstream>

#include "operlab/ratfun.hpp"

namespace operlab {

std::string Rat::str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::string poly_str(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p[i];
        if (c.is_zero()) continue;
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit_coeff = a.is_one() && i > 0;
        if (!unit_coeff) os << a.str();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string RatFun::str(const std::string& var) const {
    if (is_polynomial()) {
        Rat d = den_[0];
        if (d.is_one()) return poly_str(num_, var);
        Poly scaled = Poly(Rat(1) / d) * num_;
        return poly_str(scaled, var);
    }
    return "(" + poly_str(num_, var) + ")/(" + poly_str(den_, var) + ")";
}

}  // namespace operlab
