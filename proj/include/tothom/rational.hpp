#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tothom {

// Exact rational scalar. mpq_class keeps values canonical
// (reduced, positive denominator).
using Rat = mpq_class;

// Canonicalizing constructor; mpq_class(p, q) alone does not reduce.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

// Serialized form is "p/q", with "/q" omitted when q == 1.
inline std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat x;
    if (x.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    x.canonicalize();
    return x;
}

}  // namespace tothom
