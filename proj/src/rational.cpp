#include "indexp/rational.hpp"

#include "indexp/errors.hpp"

#include <stdexcept>

namespace indexp {

std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_from_string(const std::string& s) {
    check_input(!s.empty(), "empty rational literal");
    Rational q;
    try {
        q = Rational(s, 10);
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: '" + s + "'");
    }
    check_input(q.get_den() != 0, "rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

int rat_vec_cmp(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace indexp
