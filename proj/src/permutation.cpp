#include "gentle/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gentle/errors.hpp"

namespace gentle {

Permutation::Permutation(int n) : images_(n) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int x : images) {
        if (x < 0 || x >= n || seen[x])
            throw Error("image array is not a bijection");
        seen[x] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> seen(n, 0);
    for (const auto& cycle : cycles) {
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            if (from < 0 || from >= n)
                throw Error("cycle point " + std::to_string(from + 1) + " out of range");
            if (seen[from])
                throw Error("point " + std::to_string(from + 1) + " appears twice");
            seen[from] = 1;
            img[from] = to;
        }
    }
    return from_images(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < size(); ++x) inv[images_[x]] = x;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

bool Permutation::is_involution() const {
    for (int x = 0; x < size(); ++x)
        if (images_[images_[x]] != x) return false;
    return true;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw Error("composing permutations of different sizes");
    std::vector<int> img(f.size());
    for (int x = 0; x < f.size(); ++x) img[x] = f(g(x));
    return Permutation::from_images(std::move(img));
}

OrbitPartition::OrbitPartition(const Permutation& p) {
    std::vector<int> all(p.size());
    std::iota(all.begin(), all.end(), 0);
    build(p, all, p.size());
}

OrbitPartition::OrbitPartition(const Permutation& p, const std::vector<int>& domain) {
    build(p, domain, p.size());
}

void OrbitPartition::build(const Permutation& p, const std::vector<int>& domain, int n) {
    orbit_of_.assign(n, -1);
    std::vector<char> in_domain(n, 0);
    for (int x : domain) in_domain[x] = 1;
    std::vector<int> sorted = domain;
    std::sort(sorted.begin(), sorted.end());
    for (int start : sorted) {
        if (orbit_of_[start] != -1) continue;
        std::vector<int> orbit;
        int x = start;
        do {
            if (!in_domain[x])
                throw Error("orbit domain is not closed under the permutation");
            orbit_of_[x] = static_cast<int>(orbits_.size());
            orbit.push_back(x);
            x = p(x);
        } while (x != start);
        orbits_.push_back(std::move(orbit));
    }
}

std::vector<long> OrbitPartition::sizes_sorted() const {
    std::vector<long> sizes;
    sizes.reserve(orbits_.size());
    for (const auto& o : orbits_) sizes.push_back(static_cast<long>(o.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string cycles_to_string(const Permutation& p) {
    OrbitPartition orbits(p);
    std::ostringstream out;
    for (const auto& orbit : orbits.orbits()) {
        out << '(';
        for (size_t i = 0; i < orbit.size(); ++i) {
            if (i) out << ' ';
            out << orbit[i] + 1;
        }
        out << ')';
    }
    return out.str();
}

Permutation cycles_from_string(const std::string& text, int n, int line_no) {
    std::vector<std::vector<int>> cycles;
    std::vector<int>* current = nullptr;
    size_t i = 0;
    auto column = [&] { return static_cast<int>(i) + 1; };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
        } else if (c == '(') {
            if (current) throw ParseError("nested '(' in cycle notation", line_no, column());
            cycles.emplace_back();
            current = &cycles.back();
            ++i;
        } else if (c == ')') {
            if (!current) throw ParseError("unmatched ')' in cycle notation", line_no, column());
            if (current->empty()) throw ParseError("empty cycle '()'", line_no, column());
            current = nullptr;
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!current) throw ParseError("point outside of a cycle", line_no, column());
            long value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > n) break;
                ++i;
            }
            if (value < 1 || value > n)
                throw ParseError("point " + std::to_string(value) + " out of range 1.." +
                                     std::to_string(n),
                                 line_no, column());
            current->push_back(static_cast<int>(value) - 1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in cycle notation",
                             line_no, column());
        }
    }
    if (current) throw ParseError("unterminated cycle", line_no, column());
    try {
        return Permutation::from_cycles(n, cycles);
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no, 1);
    }
}

}  // namespace gentle
