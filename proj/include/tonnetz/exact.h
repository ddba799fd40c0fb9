#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tonnetz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

RVec make_rvec(std::initializer_list<long> xs);
std::string to_string(const Rational& q);  // "p/q" or "p"
Rational parse_rational(const std::string& s);

// Reduced row-echelon form; zero rows removed. `pivots` receives pivot columns.
RMat rref(RMat m, std::vector<int>* pivots = nullptr);
int rank(const RMat& m);
// Rows spanning { x : m x = 0 } in a space of `cols` coordinates.
RMat nullspace(const RMat& m, int cols);
Rational determinant(RMat m);
Rational dot(const RVec& a, const RVec& b);
RVec mat_vec(const RMat& m, const RVec& v);

}  // namespace tonnetz
