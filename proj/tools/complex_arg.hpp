#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "weyl/polynomial.hpp"

namespace weyl::cli {

/// Parses the locale-free literal form RE+IMi (e.g. "0+1i", "-3+0.5i",
/// "1e-2-2i"); a bare real part is accepted as RE+0i.
inline Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    auto to_double = [](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        std::size_t pos = 0;
        const double v = std::stod(part, &pos);
        if (pos != part.size())
            throw std::invalid_argument("trailing characters in complex literal: " + part);
        return v;
    };

    if (s.back() != 'i') return Complex{to_double(s), 0.0};

    s.pop_back();
    // Split at the last sign that does not follow an exponent marker.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return Complex{0.0, to_double(s)};
    return Complex{to_double(s.substr(0, split)), to_double(s.substr(split))};
}

}  // namespace weyl::cli
