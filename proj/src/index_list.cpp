#include "lozenge/index_list.hpp"

#include <sstream>
#include <stdexcept>

namespace lozenge {

IndexList::IndexList(std::initializer_list<int> v) : IndexList(std::vector<int>(v)) {}

IndexList::IndexList(std::vector<int> v) : v_(std::move(v))
{
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (v_[i] < 1)
            throw std::invalid_argument("list entries must be positive, got " +
                                        std::to_string(v_[i]));
        if (i > 0 && v_[i] <= v_[i - 1])
            throw std::invalid_argument("list must be strictly increasing: " +
                                        std::to_string(v_[i - 1]) + " then " +
                                        std::to_string(v_[i]));
    }
}

IndexList IndexList::parse(const std::string& text)
{
    std::string t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
        t = t.substr(1, t.size() - 2);
    if (t.empty() || t == "-")
        return {};
    std::vector<int> v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument("bad list entry '" + item + "' in '" + text + "'");
        v.push_back(x);
    }
    return IndexList(std::move(v));
}

IndexList IndexList::staircase(int m)
{
    std::vector<int> v;
    for (int i = 1; i <= m; ++i)
        v.push_back(i);
    return IndexList(std::move(v));
}

int IndexList::at(int i) const
{
    if (i == 0)
        return 0;
    if (i < 0 || i > size())
        throw std::out_of_range("list index " + std::to_string(i) + " out of range");
    return v_[i - 1];
}

IndexList IndexList::omit(int i) const
{
    if (i < 1 || i > size())
        throw std::out_of_range("cannot omit entry " + std::to_string(i));
    std::vector<int> v = v_;
    v.erase(v.begin() + (i - 1));
    return IndexList(std::move(v));
}

IndexList IndexList::decrement() const
{
    std::vector<int> v;
    for (int x : v_)
        if (x > 1)
            v.push_back(x - 1);
    return IndexList(std::move(v));
}

IndexList IndexList::increment(int k) const
{
    if (k < 1 || k > size())
        throw std::out_of_range("cannot increment entry " + std::to_string(k));
    std::vector<int> v = v_;
    v[k - 1] += 1;
    return IndexList(std::move(v));
}

std::string IndexList::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i)
        s += (i ? "," : "") + std::to_string(v_[i]);
    return s + ")";
}

std::string IndexList::flag() const
{
    if (v_.empty())
        return "-";
    return str().substr(1, str().size() - 2);
}

std::vector<IndexList> all_lists(int max_entry, int max_len)
{
    std::vector<IndexList> out{IndexList()};
    std::vector<std::vector<int>> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& v : layer)
            for (int x = v.empty() ? 1 : v.back() + 1; x <= max_entry; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(w);
            }
        for (const auto& v : next)
            out.emplace_back(v);
        layer = std::move(next);
    }
    return out;
}

}  // namespace lozenge
