#include "flagsphere/face.hpp"

namespace flagsphere {

bool lex_less(Face a, Face b) {
    std::uint64_t x = a.bits, y = b.bits;
    while (x && y) {
        int va = std::countr_zero(x);
        int vb = std::countr_zero(y);
        if (va != vb) return va < vb;
        x &= x - 1;
        y &= y - 1;
    }
    return y != 0;  // a ran out first: proper prefix sorts first
}

std::string Face::str() const {
    std::string out = "{";
    bool first = true;
    for_each_vertex(*this, [&](int v) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    });
    out += '}';
    return out;
}

}  // namespace flagsphere
