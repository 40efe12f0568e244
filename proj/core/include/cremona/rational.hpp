#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cremona {

/// Exact arbitrary-precision rational. All kernel arithmetic is exact; there
/// is no floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an intermediate result exceeds the configured total-degree
/// guard (see set_max_total_degree).
struct degree_limit_error : error {
    explicit degree_limit_error(const std::string& what) : error(what) {}
};

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw error("cannot parse rational: '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw error("zero denominator in rational: '" + s + "'");
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cremona
