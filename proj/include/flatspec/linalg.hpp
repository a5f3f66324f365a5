#pragma once

#include <optional>
#include <vector>

#include "flatspec/types.hpp"

namespace flatspec {

/// Exact dense helpers on top of the Rational scalar. Everything here is a
/// total function of its inputs and never touches floating point.

Rational det(const Mat& a);
Mat inverse(const Mat& a);  // throws std::domain_error if singular
int rank(const Mat& a);

/// Solves a x = b exactly; empty optional when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Basis of the rational null space of a (columns), possibly 0 columns.
Mat kernel(const Mat& a);

bool is_identity(const Mat& a);
bool is_symmetric(const Mat& a);

/// Positive definiteness via exact leading principal minors.
bool is_positive_definite(const Mat& a);

/// True when every entry is an integer.
bool is_integral(const Mat& a);
IMat to_integral(const Mat& a);  // throws if any entry is non-integral

/// Canonical basis of the lattice spanned by the (rational) columns of a.
/// Scales to integers, takes the column-style Hermite normal form, and scales
/// back, so two spanning sets of the same lattice yield the same matrix.
/// Result has full column rank equal to the lattice rank.
Mat lattice_basis(const Mat& a);

/// Membership of x in the lattice spanned by the columns of basis
/// (basis need not be canonical but must have full column rank).
bool lattice_contains(const Mat& basis, const Vec& x);

bool lattices_equal(const Mat& a, const Mat& b);

}  // namespace flatspec
