#include "ppforms/multiindex.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ppforms/scalar.hpp"

namespace ppforms {

MultiIndex::MultiIndex(std::vector<int> entries, int n)
    : entries_(std::move(entries)), n_(n) {
    if (n_ < 0) throw invalid_input("negative ambient dimension");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1 || entries_[i] > n_)
            throw invalid_input("multi-index entry out of [1, n]");
        if (i > 0 && entries_[i - 1] >= entries_[i])
            throw invalid_input("multi-index entries must be strictly increasing");
    }
}

bool MultiIndex::contains(int j) const {
    return std::binary_search(entries_.begin(), entries_.end(), j);
}

MultiIndex MultiIndex::complement() const {
    std::vector<int> rest;
    rest.reserve(n_ - degree());
    for (int j = 1; j <= n_; ++j)
        if (!contains(j)) rest.push_back(j);
    return MultiIndex(std::move(rest), n_);
}

bool MultiIndex::operator<(const MultiIndex& o) const {
    if (entries_.size() != o.entries_.size())
        return entries_.size() < o.entries_.size();
    return entries_ < o.entries_;
}

int epsilon(const MultiIndex& J) {
    MultiIndex Jc = J.complement();
    // Inversions of the concatenation (J, J'); both halves are sorted, so
    // only cross pairs count.
    long inversions = 0;
    for (int a : J.entries())
        for (int b : Jc.entries())
            if (a > b) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::optional<MergeResult> merge_disjoint(const std::vector<int>& a,
                                          const std::vector<int>& b) {
    MergeResult r;
    r.merged.reserve(a.size() + b.size());
    r.sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return std::nullopt;
        if (a[i] < b[j]) {
            r.merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the a.size()-i remaining entries of a.
            if ((a.size() - i) % 2 != 0) r.sign = -r.sign;
            r.merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) r.merged.push_back(a[i++]);
    while (j < b.size()) r.merged.push_back(b[j++]);
    return r;
}

IndexTable::IndexTable(int p, int n) : p_(p), n_(n) {
    if (p < 0 || p > n) throw invalid_input("invalid degree: need 0 <= p <= n");

    // All p-subsets of {1..n} in lexicographic order.
    std::vector<int> cur(p);
    for (int i = 0; i < p; ++i) cur[i] = i + 1;
    while (true) {
        entries_.emplace_back(cur, n);
        int i = p - 1;
        while (i >= 0 && cur[i] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int k = i + 1; k < p; ++k) cur[k] = cur[k - 1] + 1;
    }
    complements_.reserve(entries_.size());
    signs_.resize(entries_.size());
    for (std::size_t pos = 0; pos < entries_.size(); ++pos) {
        signs_[pos] = epsilon(entries_[pos]);
        complements_.push_back(entries_[pos].complement());
    }
    if (2 * p == n) {
        complement_pos_.resize(entries_.size());
        for (std::size_t pos = 0; pos < entries_.size(); ++pos)
            complement_pos_[pos] = position_of(complements_[pos]);
    }
}

std::size_t IndexTable::complement_position(std::size_t pos) const {
    if (complement_pos_.empty())
        throw invalid_input("complement_position requires n = 2p");
    return complement_pos_[pos];
}

const IndexTable& IndexTable::get(int p, int n) {
    static std::map<std::pair<int, int>, IndexTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(p, n), IndexTable(p, n)).first;
    return it->second;
}

std::size_t IndexTable::position_of(const MultiIndex& J) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), J);
    if (it == entries_.end() || !(*it == J))
        throw invalid_input("multi-index not in table");
    return static_cast<std::size_t>(it - entries_.begin());
}

const std::vector<OmegaBasisEntry>& omega_basis() {
    static const std::vector<OmegaBasisEntry> table = {
        {1, MultiIndex({1, 2}, 4), +1},
        {2, MultiIndex({1, 3}, 4), +1},
        {3, MultiIndex({1, 4}, 4), +1},
        {4, MultiIndex({2, 3}, 4), +1},
        {5, MultiIndex({2, 4}, 4), -1},
        {6, MultiIndex({3, 4}, 4), +1},
    };
    return table;
}

}  // namespace ppforms
