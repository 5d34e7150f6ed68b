#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace toricreg {

/// Exponent vector a in N^s of the monomial t^a = t_1^{a_1} ... t_s^{a_s}.
class ExponentVec {
public:
    ExponentVec() = default;
    explicit ExponentVec(std::size_t s) : entries_(s, 0) {}
    ExponentVec(std::initializer_list<std::uint32_t> init) : entries_(init) {}
    explicit ExponentVec(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    std::uint32_t& operator[](std::size_t i) { return entries_[i]; }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    std::uint64_t degree() const {
        return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
    }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    std::span<const std::uint32_t> view() const { return entries_; }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    std::string to_string() const;

    friend auto operator<=>(const ExponentVec&, const ExponentVec&) = default;
    friend bool operator==(const ExponentVec&, const ExponentVec&) = default;

private:
    std::vector<std::uint32_t> entries_;
};

inline std::string ExponentVec::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

}  // namespace toricreg
