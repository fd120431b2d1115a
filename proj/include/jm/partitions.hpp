#pragma once

// Integer partitions in classical and Frobenius notation.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace jm {

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// lambda_i with 1-based i; zero past the length.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    Partition conjugate() const;
    /// Number of diagonal boxes.
    int rank() const;
    bool fits_in_box(int rows, int cols) const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::string to_string(const Partition& lambda);

/// p_i = lambda_i - i, q_i = lambda^t_i - i for i = 1..rank (0-based storage).
struct FrobeniusCoords {
    std::vector<int> p;
    std::vector<int> q;
    int rank() const { return static_cast<int>(p.size()); }
    bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords to_frobenius(const Partition& lambda);
/// Throws std::invalid_argument unless p and q are equally long, strictly
/// decreasing and non-negative.
Partition from_frobenius(const FrobeniusCoords& f);

/// Decreasing rearrangement plus the sign of the sorting permutation;
/// sign 0 (and empty sorted) when v has a repeated entry.
struct SignedSort {
    std::vector<int> sorted;
    int sign = 0;
};

SignedSort sort_with_sign(std::vector<int> v);

/// Multiset union of parts.
Partition partition_union(const Partition& a, const Partition& b);
/// <X^Y>: Y parts equal to X.
Partition rectangle(int x, int y);

// Enumeration in graded order: by size, then reverse lexicographic within a
// size, so (2) precedes (1,1).

void for_each_partition_of(int n, const std::function<void(const Partition&)>& f);
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);
/// Partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Number of partitions of n.
std::size_t partition_count(int n);

} // namespace jm
