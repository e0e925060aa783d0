#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace perdet {

// A bijection on [n] = {1..n}. Immutable after construction.
class Permutation {
public:
    // images[i-1] = sigma(i). Throws if not a bijection of [n].
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("permutation images are not a bijection of [n]");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    // Disjoint cycles given as vertex lists, e.g. {{1,4,2},{3,5,6}} for (142)(356).
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        for (const auto& cyc : cycles) {
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                int from = cyc[t];
                int to = cyc[(t + 1) % cyc.size()];
                if (from < 1 || from > n)
                    throw std::invalid_argument("cycle element out of range");
                if (im[static_cast<std::size_t>(from - 1)] != from)
                    throw std::invalid_argument("cycles are not disjoint");
                im[static_cast<std::size_t>(from - 1)] = to;
            }
        }
        return Permutation(std::move(im));
    }

    int n() const { return static_cast<int>(images_.size()); }

    // sigma(i), 1-based.
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    // Disjoint cycle decomposition covering all non-fixed points. Each cycle
    // starts at its minimum element; cycles sorted by that minimum.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(images_.size(), false);
        for (int i = 1; i <= n(); ++i) {
            if (seen[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
            std::vector<int> cyc;
            int v = i;
            do {
                cyc.push_back(v);
                seen[static_cast<std::size_t>(v - 1)] = true;
                v = (*this)(v);
            } while (v != i);
            out.push_back(std::move(cyc));
        }
        return out;
    }

    // +1 for even permutations, -1 for odd: (-1)^(sum of (cycle length - 1)).
    int sign() const {
        int transpositions = 0;
        for (const auto& cyc : cycles()) transpositions += static_cast<int>(cyc.size()) - 1;
        return (transpositions % 2 == 0) ? 1 : -1;
    }

    // Least s >= 1 with sigma^s = identity: lcm of the cycle lengths.
    long long order() const {
        long long s = 1;
        for (const auto& cyc : cycles()) s = std::lcm(s, static_cast<long long>(cyc.size()));
        return s;
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int i = 1; i <= n(); ++i) im[static_cast<std::size_t>((*this)(i) - 1)] = i;
        return Permutation(std::move(im));
    }

    // (this o other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const {
        if (other.n() != n()) throw std::invalid_argument("composing permutations of unequal n");
        std::vector<int> im(images_.size());
        for (int i = 1; i <= n(); ++i) im[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
        return Permutation(std::move(im));
    }

    Permutation power(long long k) const {
        long long s = order();
        k %= s;
        if (k < 0) k += s;
        Permutation acc = identity(n());
        Permutation base = *this;
        while (k > 0) {
            if (k & 1) acc = acc.compose(base);
            base = base.compose(base);
            k >>= 1;
        }
        return acc;
    }

    // Disjoint-cycle notation with fixed points omitted: "(142)(356)"; the
    // identity prints as "e".
    std::string cycle_string() const {
        auto cycs = cycles();
        if (cycs.empty()) return "e";
        std::string out;
        for (const auto& cyc : cycs) {
            out += '(';
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                if (t > 0 && (cyc[t] > 9 || cyc[t - 1] > 9)) out += ' ';
                out += std::to_string(cyc[t]);
            }
            out += ')';
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

} // namespace perdet
