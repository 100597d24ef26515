#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace ppforms {

// Strictly increasing tuple of 1-based coordinate indices in [1, n].
// 1-based throughout; nothing 0-based ever leaks into output.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::vector<int> entries, int n);

    const std::vector<int>& entries() const { return entries_; }
    int dimension() const { return n_; }
    int degree() const { return static_cast<int>(entries_.size()); }
    bool contains(int j) const;

    // The unique index with J ∪ J' = {1,…,n}, J ∩ J' = ∅.
    MultiIndex complement() const;

    bool operator==(const MultiIndex& o) const {
        return n_ == o.n_ && entries_ == o.entries_;
    }
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }
    // Degree first, then lexicographic; a total order usable as a map key.
    bool operator<(const MultiIndex& o) const;

private:
    std::vector<int> entries_;
    int n_ = 0;
};

// Sign of the permutation (j_1,…,j_p, j'_1,…,j'_{n-p}) of (1,…,n), i.e. the
// sign making dz_J ∧ dz_{J'} equal the full holomorphic volume monomial.
// Inversion counting; O(p·(n-p)).
int epsilon(const MultiIndex& J);

// Interleaves two disjoint increasing sequences, returning the merged
// sequence and the shuffle sign; nullopt when they share an entry.
struct MergeResult {
    std::vector<int> merged;
    int sign;
};
std::optional<MergeResult> merge_disjoint(const std::vector<int>& a,
                                          const std::vector<int>& b);

// All degree-p multi-indices in [1,n], lexicographic, with complements and
// signs precomputed. Cached per (p, n); immutable once built.
class IndexTable {
public:
    static const IndexTable& get(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    std::size_t size() const { return entries_.size(); }

    const MultiIndex& entry(std::size_t pos) const { return entries_[pos]; }
    const MultiIndex& complement(std::size_t pos) const { return complements_[pos]; }
    // Position of the complement within this same table; only meaningful
    // when n = 2p (both halves share the degree).
    std::size_t complement_position(std::size_t pos) const;
    int sign(std::size_t pos) const { return signs_[pos]; }

    // 0-based position by binary search over the lexicographic order.
    std::size_t position_of(const MultiIndex& J) const;

private:
    IndexTable(int p, int n);

    int p_, n_;
    std::vector<MultiIndex> entries_;
    std::vector<MultiIndex> complements_;
    std::vector<std::size_t> complement_pos_;
    std::vector<int> signs_;
};

// One entry of the signed basis of 2-forms on C^4: position j in 1..6,
// the underlying pair of coordinates, and the sign in front.
struct OmegaBasisEntry {
    int position;      // 1..6
    MultiIndex pair;   // degree-2 index in C^4
    int sign;          // +1 or -1
};

// The six signed basis 2-forms on C^4, in the fixed order
// (1,2)+, (1,3)+, (1,4)+, (2,3)+, (2,4)-, (3,4)+.  The sign at position 5
// makes the product of entries j and 7-j equal the full holomorphic volume
// with coefficient +1 for every j.
const std::vector<OmegaBasisEntry>& omega_basis();

}  // namespace ppforms
