#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicanon::exact {

using BigInt = boost::multiprecision::cpp_int;
using Row = std::vector<BigInt>;
using Matrix = std::vector<Row>;

Matrix from_int64(const std::vector<std::vector<std::int64_t>>& m);

// Rank over Q by fraction-free (Bareiss) elimination. Every intermediate
// entry is a minor of the input, so all divisions are exact.
std::size_t rank(Matrix m);

BigInt determinant(Matrix m);

// d_1, ..., d_n where d_k is the determinant of the leading k x k block.
std::vector<BigInt> leading_principal_minors(const Matrix& m);

// Row echelon form over Z (Hermite style: positive pivots, entries above
// each pivot reduced into [0, pivot)). Zero rows are dropped.
Matrix hermite_rows(Matrix rows);

// True iff target is an integer combination of the generator rows.
bool lattice_contains(const Matrix& generators, const Row& target);

}  // namespace bicanon::exact
