#pragma once

// Text encodings used by the CLI and the JSON matrix format:
//   int      decimal, e.g. "-12"
//   poly:p   "c0+c1*x+c2*x^2+..." with coefficients in [0,p)
//   zloc23   "m/n" (or "m" when the denominator is 1)
//   mod:n    decimal residue
//   quat     "w,x,y,z" rational components

#include <sstream>
#include <string>

#include "element.hpp"

namespace bezout {

namespace detail {

inline Rat parse_rat(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw parse_error("bad rational: " + s);
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

inline std::string to_string(const RingElement& a) {
    switch (a.ring.kind) {
        case RingKind::Integers:
        case RingKind::ModularIntegers:
            return a.z.str();
        case RingKind::PolyOverPrimeField: {
            if (a.coeffs.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (size_t i = 0; i < a.coeffs.size(); ++i) {
                if (a.coeffs[i] == 0 && a.coeffs.size() > 1) continue;
                if (!first) os << '+';
                first = false;
                os << a.coeffs[i];
                if (i == 1) os << "*x";
                else if (i > 1) os << "*x^" << i;
            }
            return os.str();
        }
        case RingKind::LocalizedIntegers: {
            std::ostringstream os;
            os << a.q;
            return os.str();
        }
        case RingKind::RationalQuaternions: {
            std::ostringstream os;
            for (int i = 0; i < 4; ++i) {
                if (i) os << ',';
                os << a.h[i];
            }
            return os.str();
        }
    }
    throw unsupported_operation("to_string");
}

inline RingElement parse_element(const RingDescriptor& ring, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    if (s.empty()) throw parse_error("empty element");
    switch (ring.kind) {
        case RingKind::Integers:
        case RingKind::ModularIntegers: {
            try {
                return RingElement::from_int(ring, Int(s));
            } catch (const std::exception&) {
                throw parse_error("bad integer: " + text);
            }
        }
        case RingKind::LocalizedIntegers:
            return RingElement::zloc(detail::parse_rat(s));
        case RingKind::RationalQuaternions: {
            auto parts = detail::split(s, ',');
            if (parts.size() != 4) throw parse_error("quaternion needs 4 components: " + text);
            return RingElement::quaternion(detail::parse_rat(parts[0]), detail::parse_rat(parts[1]),
                                           detail::parse_rat(parts[2]), detail::parse_rat(parts[3]));
        }
        case RingKind::PolyOverPrimeField: {
            // terms "c", "c*x", "c*x^k", "x", "x^k", joined by '+'
            std::vector<long long> cs;
            for (auto& term : detail::split(s, '+')) {
                if (term.empty()) throw parse_error("bad polynomial: " + text);
                long long coeff = 1;
                size_t deg = 0;
                auto xpos = term.find('x');
                if (xpos == std::string::npos) {
                    coeff = std::stoll(term);
                } else {
                    std::string cpart = term.substr(0, xpos);
                    if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
                    if (!cpart.empty()) coeff = std::stoll(cpart);
                    std::string dpart = term.substr(xpos + 1);
                    if (!dpart.empty()) {
                        if (dpart[0] != '^') throw parse_error("bad polynomial term: " + term);
                        deg = std::stoull(dpart.substr(1));
                    } else {
                        deg = 1;
                    }
                }
                if (deg >= cs.size()) cs.resize(deg + 1, 0);
                cs[deg] = detail::mod_ll(cs[deg] + coeff, ring.param);
            }
            return RingElement::poly(ring, std::move(cs));
        }
    }
    throw unsupported_operation("parse_element");
}

}  // namespace bezout
