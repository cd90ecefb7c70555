#ifndef LMG_NODE_SET_HPP
#define LMG_NODE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lmg {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Fixed-universe set of node ids, stored as a bitset over [0, universe).
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    NodeSet(std::size_t universe, std::initializer_list<NodeId> ids) : NodeSet(universe) {
        for (NodeId id : ids) insert(id);
    }

    static NodeSet all(std::size_t universe) {
        NodeSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<NodeId>(i));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(NodeId id) const {
        return id < universe_ && (words_[id / 64] >> (id % 64) & 1u) != 0;
    }
    void insert(NodeId id) { words_[id / 64] |= std::uint64_t{1} << (id % 64); }
    void erase(NodeId id) { words_[id / 64] &= ~(std::uint64_t{1} << (id % 64)); }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Members in increasing id order.
    std::vector<NodeId> members() const {
        std::vector<NodeId> out;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            auto w = words_[wi];
            while (w != 0) {
                int bit = std::countr_zero(w);
                out.push_back(static_cast<NodeId>(wi * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
        return out;
    }

    bool intersects(const NodeSet& other) const {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }
    bool is_subset_of(const NodeSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto o = i < other.words_.size() ? other.words_[i] : 0;
            if ((words_[i] & ~o) != 0) return false;
        }
        return true;
    }

    NodeSet& operator|=(const NodeSet& other) {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    NodeSet& operator&=(const NodeSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
        return *this;
    }
    NodeSet& operator-=(const NodeSet& other) {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

    friend bool operator==(const NodeSet& a, const NodeSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace lmg

#endif
