// Strictly increasing lists of positive integers (the l and q lists).
#pragma once

#include <string>
#include <vector>

namespace lozenge {

class IndexList {
public:
    IndexList() = default;
    // Throws std::invalid_argument unless strictly increasing and positive.
    IndexList(std::initializer_list<int> v);
    explicit IndexList(std::vector<int> v);

    // "2,4,5"; "" or "-" is the empty list.
    static IndexList parse(const std::string& text);
    // The staircase (1, 2, ..., m).
    static IndexList staircase(int m);

    const std::vector<int>& entries() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    // 1-based, l_i. at(0) is 0 by the l_0 = 0 convention.
    int at(int i) const;
    // Largest entry; 0 for the empty list.
    int last() const { return v_.empty() ? 0 : v_.back(); }

    // Drop the i-th entry (1-based).
    IndexList omit(int i) const;
    // Subtract 1 from every entry, dropping a leading 0.
    IndexList decrement() const;
    // Add 1 to the k-th entry (1-based); throws if the result is not increasing.
    IndexList increment(int k) const;

    // "(2,4,5)" or "()".
    std::string str() const;
    // "2,4,5" or "-".
    std::string flag() const;

    bool operator==(const IndexList&) const = default;
    auto operator<=>(const IndexList&) const = default;

private:
    std::vector<int> v_;
};

// All lists with entries in 1..max_entry and length <= max_len, shortest first.
std::vector<IndexList> all_lists(int max_entry, int max_len);

}  // namespace lozenge
