#ifndef QSPT_INT_TYPES_HPP
#define QSPT_INT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace qspt {

/* All series coefficients live in exact arbitrary-precision integers (or in
 * Z[zeta_p] built on top of them). Nothing in this library rounds, ever. */
using Int = boost::multiprecision::cpp_int;

using std::int64_t;

inline int64_t to_int64(const Int &v) { return static_cast<int64_t>(v); }

/* Floor division for signed integers, used by dissection index arithmetic. */
inline int64_t floor_div(int64_t a, int64_t b)
{
	int64_t q = a / b, r = a % b;
	return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline int64_t mod_nonneg(int64_t a, int64_t b)
{
	int64_t r = a % b;
	return r < 0 ? r + b : r;
}

} // namespace qspt

#endif
