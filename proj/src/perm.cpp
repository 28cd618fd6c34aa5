#include "perm.hpp"

#include <cctype>
#include <sstream>

namespace diopkit {

Perm perm_from_cycles(const std::string& text, int k) {
    Perm p(k);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("cycle notation: expected digit");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1 || v > k) throw std::invalid_argument("cycle notation: point out of range");
            cyc.push_back(v - 1);
        }
        if (cyc.size() > 1) {
            std::vector<int> ci(k);
            std::iota(ci.begin(), ci.end(), 0);
            for (std::size_t t = 0; t < cyc.size(); ++t) ci[cyc[t]] = cyc[(t + 1) % cyc.size()];
            p = Perm(std::move(ci)) * p;
        }
        skip_ws();
    }
    return p;
}

std::string perm_to_cycles(const Perm& p) {
    std::ostringstream os;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i] || p(i) == i) {
            seen[i] = true;
            continue;
        }
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = p(j);
        }
        os << ')';
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

} // namespace diopkit
