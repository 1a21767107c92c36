#pragma once

#include <string>
#include <vector>

namespace gentle {

// Permutation of {0..n-1}, stored as its image array.
class Permutation {
public:
    Permutation() = default;
    // Identity on n points.
    explicit Permutation(int n);
    // Takes ownership of an image array; throws Error unless it is a bijection.
    static Permutation from_images(std::vector<int> images);
    // Builds a permutation on n points from disjoint cycles (0-based points);
    // points not mentioned are fixed. Throws Error on out-of-range or repeated
    // points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_involution() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Composition: (f * g)(x) = f(g(x)).
Permutation operator*(const Permutation& f, const Permutation& g);

// Decomposition of a permutation (or of its restriction to a subset of
// points) into orbits. Orbits are listed in increasing order of their minimal
// element and each orbit starts at its minimal element; within an orbit,
// successive points are permutation images.
class OrbitPartition {
public:
    OrbitPartition() = default;
    explicit OrbitPartition(const Permutation& p);
    // Restriction to the given domain; the domain must be closed under p.
    OrbitPartition(const Permutation& p, const std::vector<int>& domain);

    int count() const { return static_cast<int>(orbits_.size()); }
    const std::vector<std::vector<int>>& orbits() const { return orbits_; }
    const std::vector<int>& orbit(int i) const { return orbits_[i]; }
    // Index of the orbit containing x, or -1 if x is outside the domain.
    int orbit_of(int x) const { return orbit_of_[x]; }
    // Multiset of orbit sizes, sorted ascending.
    std::vector<long> sizes_sorted() const;

private:
    void build(const Permutation& p, const std::vector<int>& domain, int n);

    std::vector<std::vector<int>> orbits_;
    std::vector<int> orbit_of_;
};

// Disjoint-cycle notation with 1-based points, e.g. "(1 3 2)(4)".
// Every cycle is printed, singletons included.
std::string cycles_to_string(const Permutation& p);

// Parses disjoint-cycle notation over 1..n (whitespace and commas both
// separate points); omitted points are fixed. Throws ParseError.
Permutation cycles_from_string(const std::string& text, int n, int line_no);

}  // namespace gentle
