#pragma once

#include <cctype>
#include <string>

#include "scae/errors.hpp"
#include "scae/lie_data.hpp"

namespace scae {

/// Compact Dynkin notation: "2L1", "L1+L2", "0" for the zero weight.
inline std::string render_weight(const Weight& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (w[i] != 1) out += std::to_string(w[i]);
        out += 'L' + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

/// Inverse of render_weight. Accepts repeated terms ("L1+L1" == "2L1") and
/// "unit" as an alias for the zero weight.
inline Weight parse_weight(const std::string& text, int rank)
{
    Weight w = Weight::zero(rank);
    if (text == "0" || text == "unit") return w;
    auto bad = [&]() { return InputError("cannot parse weight '" + text + "' for rank " + std::to_string(rank)); };
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        const std::string term = text.substr(pos, end - pos);
        const std::size_t l = term.find('L');
        if (l == std::string::npos || l + 1 >= term.size()) throw bad();
        int coeff = 1;
        if (l > 0) {
            for (std::size_t i = 0; i < l; ++i) {
                if (!std::isdigit(static_cast<unsigned char>(term[i]))) throw bad();
            }
            coeff = std::stoi(term.substr(0, l));
        }
        for (std::size_t i = l + 1; i < term.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(term[i]))) throw bad();
        }
        const int idx = std::stoi(term.substr(l + 1));
        if (idx < 1 || idx > rank) throw bad();
        w[static_cast<std::size_t>(idx - 1)] += coeff;
        pos = end + 1;
        if (end == text.size()) break;
        if (pos == text.size()) throw bad();
    }
    return w;
}

} // namespace scae
