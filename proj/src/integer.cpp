#include "spherecheck/integer.hpp"

namespace spherecheck {

bool parse_integer(const std::string& text, Integer& out) {
    if (text.empty()) return false;
    size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9') return false;
    return out.set_str(text[0] == '+' ? text.substr(1) : text, 10) == 0;
}

int compare_vectors(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace spherecheck
