#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mfr {

using Index = std::int32_t;
inline constexpr Index kNone = -1;

enum class ColumnKind { heap, vector };

ColumnKind parse_column_kind(std::string_view s);

// Lazy binary max-heap over GF(2). Equal entries cancel in pairs when they
// surface at the top, so the raw array can hold garbage below the pivot.
class HeapColumn {
public:
    HeapColumn() = default;
    explicit HeapColumn(const std::vector<Index>& sorted) { assign(sorted); }

    void assign(const std::vector<Index>& sorted) {
        heap_.assign(sorted.rbegin(), sorted.rend()); // descending is a valid max-heap
        budget_ = std::max<std::size_t>(kMinBudget, 4 * heap_.size());
    }

    void push(Index i) {
        heap_.push_back(i);
        std::push_heap(heap_.begin(), heap_.end());
    }

    // Largest index with odd multiplicity, or kNone.
    Index pivot() {
        while (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end());
            Index top = heap_.back();
            heap_.pop_back();
            if (!heap_.empty() && heap_.front() == top) {
                std::pop_heap(heap_.begin(), heap_.end());
                heap_.pop_back();
                continue;
            }
            heap_.push_back(top);
            std::push_heap(heap_.begin(), heap_.end());
            return top;
        }
        return kNone;
    }

    bool empty() { return pivot() == kNone; }

    void add(const HeapColumn& other) {
        for (Index i : other.heap_) {
            heap_.push_back(i);
            std::push_heap(heap_.begin(), heap_.end());
        }
        if (heap_.size() > budget_) compact();
    }

    void compact() {
        auto e = entries();
        assign(e);
    }

    void clear() { heap_.clear(); }

    std::vector<Index> entries() const {
        std::vector<Index> tmp(heap_);
        std::sort(tmp.begin(), tmp.end());
        std::vector<Index> out;
        out.reserve(tmp.size());
        for (std::size_t k = 0; k < tmp.size();) {
            std::size_t l = k;
            while (l < tmp.size() && tmp[l] == tmp[k]) ++l;
            if ((l - k) & 1) out.push_back(tmp[k]);
            k = l;
        }
        return out;
    }

    std::size_t raw_size() const { return heap_.size(); }

private:
    static constexpr std::size_t kMinBudget = 64;
    std::vector<Index> heap_;
    std::size_t budget_ = kMinBudget;
};

// Sorted, duplicate-free index array; addition is a merge.
class VectorColumn {
public:
    VectorColumn() = default;
    explicit VectorColumn(const std::vector<Index>& sorted) : v_(sorted) {}

    void assign(const std::vector<Index>& sorted) { v_ = sorted; }

    void push(Index i) {
        auto it = std::lower_bound(v_.begin(), v_.end(), i);
        if (it != v_.end() && *it == i)
            v_.erase(it);
        else
            v_.insert(it, i);
    }

    Index pivot() const { return v_.empty() ? kNone : v_.back(); }
    bool empty() const { return v_.empty(); }

    void add(const VectorColumn& other) {
        std::vector<Index> out;
        out.reserve(v_.size() + other.v_.size());
        std::set_symmetric_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                                      std::back_inserter(out));
        v_.swap(out);
    }

    void compact() {}
    void clear() { v_.clear(); }
    const std::vector<Index>& entries() const { return v_; }
    std::size_t raw_size() const { return v_.size(); }

private:
    std::vector<Index> v_;
};

// Calls f with a value of the selected column type (only used for its type).
template <class F>
decltype(auto) with_column_kind(ColumnKind kind, F&& f) {
    if (kind == ColumnKind::vector) return f(VectorColumn{});
    return f(HeapColumn{});
}

} // namespace mfr
