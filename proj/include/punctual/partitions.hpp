#ifndef PUNCTUAL_PARTITIONS_HPP
#define PUNCTUAL_PARTITIONS_HPP

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "punctual/bigint.hpp"
#include "punctual/errors.hpp"

namespace punctual {

// Brute-force enumeration of (n-1)-dimensional partitions: finite
// downward-closed subsets of N^n. Ideals are grown one point at a time in
// increasing graded-lex order of the added point, which visits every ideal
// exactly once. Points are packed one coordinate per byte, most significant
// byte first, so lexicographic order of tuples is numeric order of keys.
class PartitionCounter {
public:
    PartitionCounter(int dims, long long node_budget)
        : n_(dims), budget_(node_budget) {
        if (dims < 1 || dims > 8)
            throw std::invalid_argument("PartitionCounter: supported dimensions are 1..8");
        if (node_budget < 1) throw std::invalid_argument("PartitionCounter: budget must be positive");
    }

    // number of ideals of size exactly d
    long long count(long d) {
        reset();
        if (d < 0) return 0;
        if (d == 0) return 1;
        if (d > 250) throw std::invalid_argument("PartitionCounter: size out of supported range");
        dfs({-1, 0}, d);
        return count_;
    }

    // number of ideals of size exactly d containing every unit vector
    // (partitions of embedding dimension equal to the ambient dimension)
    long long count_full_support(long d) {
        reset();
        if (d < n_ + 1) return 0;
        if (d > 250) throw std::invalid_argument("PartitionCounter: size out of supported range");
        // seed with the origin and all unit vectors; these are exactly the
        // points of degree <= 1, hence the graded-lex prefix of every
        // full-support ideal
        insert_point(0);
        Rank last{0, 0};
        for (int i = 0; i < n_; ++i) {
            std::uint64_t key = unit_key(i);
            insert_point(key);
            last = std::max(last, Rank{1, key});
        }
        dfs(last, d - (n_ + 1));
        return count_;
    }

    long long nodes_used() const { return nodes_; }

private:
    using Rank = std::pair<long, std::uint64_t>; // (degree, packed point)

    int n_;
    long long budget_;
    long long nodes_ = 0;
    long long count_ = 0;
    std::unordered_set<std::uint64_t> present_;
    std::vector<std::uint64_t> points_;

    void reset() {
        nodes_ = 0;
        count_ = 0;
        present_.clear();
        points_.clear();
    }

    static int byte_at(std::uint64_t key, int i) { return static_cast<int>((key >> (8 * (7 - i))) & 0xff); }
    static std::uint64_t with_byte(std::uint64_t key, int i, int v) {
        int shift = 8 * (7 - i);
        return (key & ~(0xffULL << shift)) | (static_cast<std::uint64_t>(v) << shift);
    }
    std::uint64_t unit_key(int i) const { return with_byte(0, i, 1); }

    long degree(std::uint64_t key) const {
        long s = 0;
        for (int i = 0; i < n_; ++i) s += byte_at(key, i);
        return s;
    }

    void insert_point(std::uint64_t key) {
        present_.insert(key);
        points_.push_back(key);
    }
    void remove_point(std::uint64_t key) {
        present_.erase(key);
        points_.pop_back();
    }

    bool addable(std::uint64_t q) const {
        for (int i = 0; i < n_; ++i) {
            int c = byte_at(q, i);
            if (c > 0 && present_.find(with_byte(q, i, c - 1)) == present_.end()) return false;
        }
        return true;
    }

    void dfs(Rank last, long remaining) {
        if (remaining == 0) {
            ++count_;
            return;
        }
        std::vector<Rank> cands;
        if (present_.empty()) {
            cands.push_back({0, 0});
        } else {
            for (std::uint64_t p : points_) {
                for (int i = 0; i < n_; ++i) {
                    int c = byte_at(p, i);
                    if (c >= 250) continue;
                    std::uint64_t q = with_byte(p, i, c + 1);
                    if (present_.count(q)) continue;
                    Rank r{degree(q), q};
                    if (!(r > last)) continue;
                    if (addable(q)) cands.push_back(r);
                }
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        }
        for (const Rank& r : cands) {
            if (++nodes_ > budget_)
                throw resource_limit("partition enumeration exceeded the node budget");
            insert_point(r.second);
            dfs(r, remaining - 1);
            remove_point(r.second);
        }
    }
};

inline constexpr long long default_partition_budget = 100000000;

// p_{n-1}(d): the number of (n-1)-dimensional partitions of size d.
inline BigInt count_partitions(long n, long d, long long budget = default_partition_budget) {
    if (n < 1) throw std::invalid_argument("count_partitions: need n >= 1");
    if (d < 0) return BigInt();
    PartitionCounter pc(static_cast<int>(n), budget);
    return BigInt(pc.count(d));
}

// partitions of size d in N^n of embedding dimension exactly n
inline BigInt count_partitions_full_support(long n, long d,
                                            long long budget = default_partition_budget) {
    if (n < 1) throw std::invalid_argument("count_partitions_full_support: need n >= 1");
    if (d < 0) return BigInt();
    PartitionCounter pc(static_cast<int>(n), budget);
    return BigInt(pc.count_full_support(d));
}

} // namespace punctual

#endif
