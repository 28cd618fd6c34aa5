#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace diopkit {

// Permutation of {0,...,k-1} stored as image table: p[i] = image of i.
class Perm {
  public:
    Perm() = default;
    explicit Perm(int k) : img_(k) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> images) : img_(std::move(images)) { check(); }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(i); }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // Composition acts left-to-right on points: (a*b)(i) = a(b(i)).
    Perm operator*(const Perm& b) const {
        if (size() != b.size()) throw std::invalid_argument("Perm size mismatch");
        std::vector<int> r(size());
        for (int i = 0; i < size(); ++i) r[i] = img_[b(i)];
        return Perm(std::move(r));
    }

    Perm inverse() const {
        std::vector<int> r(size());
        for (int i = 0; i < size(); ++i) r[img_[i]] = i;
        return Perm(std::move(r));
    }

    int sign() const {
        std::vector<bool> seen(size(), false);
        int s = 1;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = img_[j];
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    // Adjacent transposition s_i = (i, i+1), 0-based.
    static Perm adjacent(int k, int i) {
        Perm p(k);
        std::swap(p.img_.at(i), p.img_.at(i + 1));
        return p;
    }

    // Factor into adjacent transpositions (indices i meaning s_i).
    std::vector<int> adjacent_word() const {
        std::vector<int> w;
        std::vector<int> a = img_;
        // bubble sort a to identity; record swaps. If swapping positions
        // j, j+1 sorts a, then this = product of s_j in reverse record order.
        bool moved = true;
        while (moved) {
            moved = false;
            for (int j = 0; j + 1 < size(); ++j) {
                if (a[j] > a[j + 1]) {
                    std::swap(a[j], a[j + 1]);
                    w.push_back(j);
                    moved = true;
                }
            }
        }
        // a = s_{w_last} ... s_{w_first} * this = id, so this = s_{w_first}^{-1}...;
        // adjacent transpositions are involutions, so reversing the word gives this.
        std::reverse(w.begin(), w.end());
        return w;
    }

    // Block permutation: this permutes k blocks of the given sizes the same way
    // it permutes points; returns the induced permutation of sum(sizes) points.
    Perm block(const std::vector<int>& sizes) const {
        if (static_cast<int>(sizes.size()) != size())
            throw std::invalid_argument("block sizes mismatch");
        int total = 0;
        std::vector<int> old_start(size());
        for (int i = 0; i < size(); ++i) {
            old_start[i] = total;
            total += sizes[i];
        }
        // new position of block i = sum of sizes of blocks j with img(j) < img(i)
        std::vector<int> new_start(size(), 0);
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (img_[j] < img_[i]) new_start[i] += sizes[j];
        std::vector<int> r(total);
        for (int i = 0; i < size(); ++i)
            for (int t = 0; t < sizes[i]; ++t) r[old_start[i] + t] = new_start[i] + t;
        return Perm(std::move(r));
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }

  private:
    void check() const {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> img_;
};

// Parse cycle notation like "(123)(45)" with 1-based points into a Perm of
// size k. Empty string or "()" is the identity. Points above 9 are separated
// by spaces or commas: "(1 2 12)".
Perm perm_from_cycles(const std::string& text, int k);
std::string perm_to_cycles(const Perm& p); // 1-based, identity prints "()"

} // namespace diopkit
