#pragma once

// Test-only reference implementations. Each one is deliberately naive and
// shares no algorithm with the library code it is compared against.

#include <map>
#include <vector>

#include "plucker/exact_linalg.hpp"
#include "plucker/exterior.hpp"
#include "plucker/straightening.hpp"
#include "plucker/sym_power.hpp"
#include "plucker/tableaux.hpp"

namespace oracle {

using plucker::Integer;
using plucker::Rational;

/// Bareiss elimination scanning pivots from the last row upward.
std::size_t bareiss_rank(const plucker::RMatrix& m);

/// Sum over all permutations.
Rational leibniz_det(const plucker::RMatrix& m);

/// Minor of a k x n matrix on 1-based columns, by permutation expansion.
Rational minor(const plucker::RMatrix& p, const std::vector<int>& columns);

/// (Σ_α w_α e_α)^m expanded over all ordered m-tuples of the support.
plucker::SymTensor expand_power(const plucker::ExtVector& w, int m);

/// Canonical basis of V(m,n,k) built as sorted multisets of k-subsets.
std::vector<plucker::SymBasisVector> all_basis_vectors(int m, int n, int k);

/// Basis vectors grouped by letter content.
std::map<std::vector<int>, std::vector<plucker::SymBasisVector>> group_by_content(int m, int n, int k);

/// Fillings with entries 1..|λ| used once, checked cell by cell.
std::size_t count_standard_fillings(const plucker::Shape& s);

/// Every filling with entries in 1..n, checked cell by cell.
std::size_t count_semistandard_fillings(const plucker::Shape& s, int n);

/// Product of minors of the tableau's columns for the matrix x.
Rational tableau_value(const plucker::RectTableau& t, const plucker::RMatrix& x);

/// Rank of a list of tensors written densely over the full canonical basis.
std::size_t tensor_rank(const std::vector<plucker::SymTensor>& tensors, int m, int n, int k);

}  // namespace oracle
