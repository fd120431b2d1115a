#include "jm/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace jm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw std::invalid_argument("partition parts must be positive and weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int part : parts_) {
        for (int j = 0; j < part; ++j) {
            ++c[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(c));
}

int Partition::rank() const
{
    int d = 0;
    while (d < length() && parts_[static_cast<std::size_t>(d)] > d) {
        ++d;
    }
    return d;
}

bool Partition::fits_in_box(int rows, int cols) const { return length() <= rows && (empty() || parts_[0] <= cols); }

std::string to_string(const Partition& lambda)
{
    std::string s = "(";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(lambda.parts()[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

FrobeniusCoords to_frobenius(const Partition& lambda)
{
    FrobeniusCoords f;
    const int d = lambda.rank();
    const Partition t = lambda.conjugate();
    for (int i = 1; i <= d; ++i) {
        f.p.push_back(lambda.part(i) - i);
        f.q.push_back(t.part(i) - i);
    }
    return f;
}

namespace {

bool strictly_decreasing_nonnegative(const std::vector<int>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || (i > 0 && v[i] >= v[i - 1])) {
            return false;
        }
    }
    return true;
}

} // namespace

Partition from_frobenius(const FrobeniusCoords& f)
{
    if (f.p.size() != f.q.size() || !strictly_decreasing_nonnegative(f.p) || !strictly_decreasing_nonnegative(f.q)) {
        throw std::invalid_argument("invalid Frobenius coordinates");
    }
    const int d = f.rank();
    if (d == 0) {
        return {};
    }
    // Rows 1..d come from p; rows below the diagonal square are read off the legs.
    const int len = f.q[0] + 1;
    std::vector<int> parts(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < d; ++i) {
        parts[static_cast<std::size_t>(i)] = f.p[static_cast<std::size_t>(i)] + i + 1;
    }
    for (int j = 0; j < d; ++j) {
        // Column j+1 has length q_j + j + 1.
        const int col_len = f.q[static_cast<std::size_t>(j)] + j + 1;
        for (int row = d; row < col_len; ++row) {
            ++parts[static_cast<std::size_t>(row)];
        }
    }
    return Partition(std::move(parts));
}

SignedSort sort_with_sign(std::vector<int> v)
{
    SignedSort out;
    int sign = 1;
    // Insertion sort, counting transpositions.
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            if (v[j] == v[j - 1]) {
                return out;
            }
            if (v[j] < v[j - 1]) {
                break;
            }
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == v[i - 1]) {
            return out;
        }
    }
    out.sorted = std::move(v);
    out.sign = sign;
    return out;
}

Partition partition_union(const Partition& a, const Partition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition rectangle(int x, int y)
{
    if (x < 0 || y < 0) {
        throw std::invalid_argument("rectangle dimensions must be non-negative");
    }
    if (x == 0) {
        return {};
    }
    return Partition(std::vector<int>(static_cast<std::size_t>(y), x));
}

namespace {

void generate(int remaining, int max_part, int max_len, std::vector<int>& cur,
              const std::function<void(const Partition&)>& f)
{
    if (remaining == 0) {
        f(Partition(cur));
        return;
    }
    if (max_len == 0) {
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        generate(remaining - part, part, max_len - 1, cur, f);
        cur.pop_back();
    }
}

} // namespace

void for_each_partition_of(int n, const std::function<void(const Partition&)>& f)
{
    if (n < 0) {
        return;
    }
    std::vector<int> cur;
    generate(n, n, n, cur, f);
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for_each_partition_of(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m) {
        for_each_partition_of(m, [&](const Partition& p) { out.push_back(p); });
    }
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    if (rows < 0 || cols < 0) {
        return out;
    }
    std::vector<int> cur;
    for (int m = 0; m <= rows * cols; ++m) {
        generate(m, cols, rows, cur, [&](const Partition& p) { out.push_back(p); });
    }
    return out;
}

std::size_t partition_count(int n)
{
    if (n < 0) {
        return 0;
    }
    std::vector<std::size_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int m = part; m <= n; ++m) {
            c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - part)];
        }
    }
    return c[static_cast<std::size_t>(n)];
}

} // namespace jm
