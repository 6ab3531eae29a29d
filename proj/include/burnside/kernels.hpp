#pragma once

#include <utility>
#include <vector>

#include "burnside/slices.hpp"

namespace burnside {

// Structure constants: entry c1*n+c2 lists (class id, multiplicity) pairs
// of the basis product, sorted by class id.
using ProductTable = std::vector<std::vector<std::pair<int, int>>>;

// Table of marks over slice-class representatives, row-major:
// entry[r*n+c] = value of the mark functional of class r on the basis
// element of class c. Upper triangular in class order by construction.
std::vector<Int> mark_matrix_serial(const SliceTable& st);
std::vector<Int> mark_matrix_parallel(const SliceTable& st);

// Double-coset structure constants for all class pairs.
ProductTable product_table_serial(const SliceTable& st);
ProductTable product_table_parallel(const SliceTable& st);

// One basis product with an explicit element sweep order (used to check
// that the result does not depend on double-coset representatives).
std::vector<std::pair<int, int>> product_classes_with_sweep(
    const SliceTable& st, int c1, int c2, const std::vector<int>& sweep);

// Ordinary Burnside ring analogues over subgroup classes.
std::vector<Int> burnside_mark_matrix(const SubgroupLattice& lat);
ProductTable burnside_product_table(const SubgroupLattice& lat);

}  // namespace burnside
