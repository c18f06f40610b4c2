// Parser for complex scalars in "a+bi" notation: "2", "-1.5", "2i", "i",
// "-i", "0.5+1.3i", "1e-3-2.5e-2i".
#pragma once

#include <cctype>
#include <cstdlib>
#include <string>

namespace hqzcli {

inline bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

inline bool parse_complex(const std::string& text, double& re, double& im) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return false;

    // split point: a '+'/'-' that is neither leading nor an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;  // keep the last one: "1e-3-2e-2i"
    }

    auto parse_imag = [](std::string part, double& out) {
        if (part.empty() || part.back() != 'i') return false;
        part.pop_back();
        if (part.empty() || part == "+") {
            out = 1.0;
            return true;
        }
        if (part == "-") {
            out = -1.0;
            return true;
        }
        return parse_double(part, out);
    };

    if (split == std::string::npos) {
        if (s.back() == 'i') {
            re = 0.0;
            return parse_imag(s, im);
        }
        im = 0.0;
        return parse_double(s, re);
    }
    if (s.back() != 'i') return false;
    return parse_double(s.substr(0, split), re) &&
           parse_imag(s.substr(split), im);
}

}  // namespace hqzcli
