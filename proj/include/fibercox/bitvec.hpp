#pragma once

// Fixed-length GF(2) vectors backed by 64-bit words, plus row reduction.
// Used for states/moves on graph vertex sets and for GF(2) rank/orbit work.

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace fibercox {

class BitVec {
public:
    BitVec() : n_(0) {}
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    BitVec& operator&=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend BitVec operator&(BitVec a, const BitVec& b) { a &= b; return a; }

    BitVec& operator|=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    bool intersects(const BitVec& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    // index of lowest set bit, or size() if none
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + std::size_t(__builtin_ctzll(w_[k]));
        return n_;
    }
    // lowest set bit strictly after i, or size()
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= n_) return n_;
        std::size_t k = i >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return k * 64 + std::size_t(__builtin_ctzll(w));
            if (++k >= w_.size()) return n_;
            w = w_[k];
        }
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i < n_; i = next(i)) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
        return s;
    }
    static BitVec from_string(const std::string& s) {
        BitVec b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) if (s[i] == '1') b.set(i);
        return b;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<std::size_t>()(n_);
        for (auto w : w_) h = h * 1099511628211ULL + std::size_t(w);
        return h;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

// Row-reduce a set of GF(2) vectors. Returns an echelonized basis (each row
// has a distinct leading bit). Rank = basis.size().
inline std::vector<BitVec> gf2_row_reduce(const std::vector<BitVec>& rows) {
    std::vector<BitVec> basis;          // kept in echelon form
    std::vector<std::size_t> lead;      // leading index per basis row
    for (const auto& r0 : rows) {
        BitVec r = r0;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (r.get(lead[b])) r ^= basis[b];
        if (r.any()) {
            std::size_t l = r.first();
            // keep earlier rows reduced against the new one
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (basis[b].get(l)) basis[b] ^= r;
            basis.push_back(r);
            lead.push_back(l);
        }
    }
    // order rows by leading index for determinism
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (lead[order[j]] < lead[order[i]]) std::swap(order[i], order[j]);
    std::vector<BitVec> out;
    out.reserve(basis.size());
    for (auto i : order) out.push_back(basis[i]);
    return out;
}

} // namespace fibercox
