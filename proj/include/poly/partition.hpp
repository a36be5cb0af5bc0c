#pragma once

#include <string>
#include <vector>

namespace poly {

// Weakly decreasing positive parts, trailing zeros trimmed.
// The empty vector is the unique weight-0 partition.
using Partition = std::vector<int>;

// Validates monotonicity/nonnegativity and trims trailing zeros.
Partition make_partition(std::vector<int> parts);
bool is_partition_shape(const std::vector<int>& parts);

int weight(const Partition& p);
// 1-based row length, 0 beyond the last row.
int part(const Partition& p, int i);
inline int num_parts(const Partition& p) { return static_cast<int>(p.size()); }

Partition transpose(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

// Canonical order: weight ascending, then reverse-lexicographic within a
// weight, e.g. (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1). Fixes pivot
// choices in every echelon computation downstream.
bool canonical_less(const Partition& a, const Partition& b);
struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

// All partitions of wt with at most max_rows parts and every part <= max_cols
// (max_cols < 0 means unbounded), in canonical order.
std::vector<Partition> enumerate_partitions(int wt, int max_rows, int max_cols = -1);

// All partitions inside the rows x cols box, weight ascending then canonical.
std::vector<Partition> box_partitions(int rows, int cols);

std::string to_string(const Partition& p);

}  // namespace poly
