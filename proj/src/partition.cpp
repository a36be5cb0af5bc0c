#include "poly/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace poly {

bool is_partition_shape(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

Partition make_partition(std::vector<int> parts) {
    if (!is_partition_shape(parts))
        throw std::invalid_argument("not weakly decreasing nonnegative parts");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int part(const Partition& p, int i) {
    return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    t.resize(p[0]);
    for (int j = 0; j < p[0]; ++j) {
        int count = 0;
        for (int row : p)
            if (row >= j + 1) ++count;
        t[j] = count;
    }
    return t;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > (i < outer.size() ? outer[i] : 0)) return false;
    return true;
}

bool canonical_less(const Partition& a, const Partition& b) {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    // equal weight: earlier means lexicographically larger parts
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (rows_left == 0) return;
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        cur.push_back(next);
        enumerate_rec(remaining - next, next, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int wt, int max_rows, int max_cols) {
    std::vector<Partition> out;
    if (wt < 0 || max_rows < 0) return out;
    int first = (max_cols < 0) ? wt : std::min(wt, max_cols);
    std::vector<int> cur;
    enumerate_rec(wt, first, max_rows, cur, out);
    return out;
}

std::vector<Partition> box_partitions(int rows, int cols) {
    std::vector<Partition> out;
    for (int s = 0; s <= rows * cols; ++s) {
        auto layer = enumerate_partitions(s, rows, cols);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    s += ")";
    return s;
}

}  // namespace poly
