#ifndef HOCHHOM_RATIONAL_HPP
#define HOCHHOM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hochhom {

/// Exact scalars. cpp_rational keeps the canonical form the engine relies on:
/// positive denominator, numerator and denominator coprime.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

inline std::string to_string(const Rat& q) { return q.str(); }

inline Rat rat_from_string(const std::string& s) { return Rat(s); }

} // namespace hochhom

#endif
