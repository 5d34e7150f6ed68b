#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace toricreg::detail {

/// Set of fixed-width rows kept in one flat buffer, in insertion order.
template <class T>
class FlatRowSet {
public:
    explicit FlatRowSet(std::size_t width)
        : width_(width), index_(16, Hash{this}, Equal{this}) {}

    FlatRowSet(const FlatRowSet&) = delete;
    FlatRowSet& operator=(const FlatRowSet&) = delete;

    std::size_t width() const { return width_; }
    std::size_t size() const { return index_.size(); }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * width_, width_}; }
    const std::vector<T>& data() const { return data_; }
    std::vector<T> release() { return std::move(data_); }

    /// Inserts a copy of `row`; returns (row index, whether it was new).
    std::pair<std::size_t, bool> insert(std::span<const T> row) {
        const std::size_t candidate = data_.size() / width_;
        data_.insert(data_.end(), row.begin(), row.end());
        auto [it, inserted] = index_.insert(candidate);
        if (!inserted) data_.resize(candidate * width_);
        return {*it, inserted};
    }

    bool contains(std::span<const T> row) {
        return insert_probe(row);
    }

private:
    bool insert_probe(std::span<const T> row) {
        const std::size_t candidate = data_.size() / width_;
        data_.insert(data_.end(), row.begin(), row.end());
        const bool found = index_.find(candidate) != index_.end();
        data_.resize(candidate * width_);
        return found;
    }

    struct Hash {
        const FlatRowSet* self;
        std::size_t operator()(std::size_t i) const {
            std::uint64_t h = 0x9E3779B97F4A7C15ull;
            for (T v : self->row(i)) {
                h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };
    struct Equal {
        const FlatRowSet* self;
        bool operator()(std::size_t a, std::size_t b) const {
            const auto ra = self->row(a);
            const auto rb = self->row(b);
            return std::equal(ra.begin(), ra.end(), rb.begin());
        }
    };

    std::size_t width_;
    std::vector<T> data_;
    std::unordered_set<std::size_t, Hash, Equal> index_;
};

}  // namespace toricreg::detail
