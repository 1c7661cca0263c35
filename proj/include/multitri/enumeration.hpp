// Exact counting and enumeration: backtracking, the Catalan determinant,
// nested Dyck path families, staircase fillings, and Gale evenness.
#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "multitri/core.hpp"

namespace multitri {

using BigCount = boost::multiprecision::cpp_int;

/// The m-th Catalan number, m >= 0.
BigCount catalan(int m);

/// det(C_{n-i-j}) for 1 <= i,j <= k. Defined for n >= 2k (the n = 2k case
/// backs the empty-semilength Dyck cross-check).
BigCount catalan_determinant(int n, int k);
BigCount catalan_determinant(const GonContext& g);

/// Depth-first enumeration in lexicographic order of sorted relevant-edge
/// lists. The visitor returns false to stop early.
void enumerate_triangulations(const GonContext& g,
                              const std::function<bool(const KTriangulation&)>& visit);

std::vector<KTriangulation> all_triangulations(const GonContext& g);

/// The first `count` triangulations in enumeration order (fewer if the
/// total supply is smaller).
std::vector<KTriangulation> first_triangulations(const GonContext& g, int count);

/// Count without materializing, same search as enumerate_triangulations.
BigCount count_by_backtracking(const GonContext& g);

/// Families of k mutually nested Dyck paths of the given semilength.
BigCount count_dyck_k_paths(int semilength, int k);

/// Number of k-crossings of T using one edge at each of the vertices
/// 0..k-1. All edges of T participate, not only relevant ones.
long long prefix_crossing_count(const KTriangulation& t);

/// Staircase 0 <= i < j <= n-1 of boxes; box (i,j) filled iff [i,j] is an
/// edge (of any kind) of the originating triangulation.
struct Filling {
    int n = 0;
    std::vector<std::vector<bool>> rows;  // rows[i][j - i - 1], j in i+1..n-1

    bool box(int i, int j) const;
};

Filling to_filling(const KTriangulation& t);

/// Inverse of to_filling. Demands every length <= k box filled and rebuilds
/// the relevant set from the rest; validation then runs as usual.
KTriangulation from_filling(const GonContext& g, const Filling& f);

/// Longest chain of filled boxes strictly increasing in both coordinates
/// whose spanning rectangle stays inside the staircase. Equals the largest
/// mutual crossing of the corresponding edge set.
int longest_diagonal(const Filling& f);

/// For n = 2k+3 the relevant edges form a single cycle of length-(k+1)
/// chords. True iff the position sets of triangulations along that cycle
/// are exactly the 2k-subsets satisfying Gale's evenness condition.
bool gale_evenness_check(const GonContext& g);

}  // namespace multitri
