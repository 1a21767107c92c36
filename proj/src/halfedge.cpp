#include "gentle/halfedge.hpp"

#include <algorithm>
#include <queue>

#include "gentle/errors.hpp"

namespace gentle {

HalfEdgeSystem HalfEdgeSystem::make(Permutation sigma, Permutation theta) {
    if (sigma.size() != theta.size())
        throw Error("sigma and theta act on different point counts");
    if (sigma.size() < 1) throw Error("a half-edge system needs at least one half-edge");
    if (!theta.is_involution()) throw Error("theta is not an involution");
    HalfEdgeSystem h;
    h.n = sigma.size();
    h.sigma = std::move(sigma);
    h.theta = std::move(theta);
    return h;
}

std::vector<int> HalfEdgeSystem::theta_fixed_points() const {
    std::vector<int> fixed;
    for (int x = 0; x < n; ++x)
        if (theta(x) == x) fixed.push_back(x);
    return fixed;
}

Permutation phi(const HalfEdgeSystem& h) { return h.theta * h.sigma; }

int SubPermutation::apply(int x) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || *it != x)
        throw Error("point " + std::to_string(x) + " outside sub-permutation domain");
    return image[it - domain.begin()];
}

OrbitPartition SubPermutation::orbits() const {
    int n = 0;
    for (int x : domain) n = std::max(n, x + 1);
    for (int x : image) n = std::max(n, x + 1);
    // Embed into a full permutation fixing everything off the domain, then
    // restrict the orbit computation back to the domain.
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = x;
    for (size_t i = 0; i < domain.size(); ++i) img[domain[i]] = image[i];
    return OrbitPartition(Permutation::from_images(std::move(img)), domain);
}

SubPermutation kappa(const HalfEdgeSystem& h) {
    const Permutation f = phi(h);
    SubPermutation k;
    k.domain = h.theta_fixed_points();
    k.image.reserve(k.domain.size());
    for (int start : k.domain) {
        int x = f(start);
        int steps = 1;
        while (h.theta(x) != x) {
            x = f(x);
            if (++steps > h.n) throw Error("kappa iteration failed to close");
        }
        k.image.push_back(x);
    }
    return k;
}

SubPermutation rho(const HalfEdgeSystem& h) {
    const Permutation f = phi(h);
    OrbitPartition faces(f);
    std::vector<char> orbit_has_fixed(faces.count(), 0);
    for (int x : h.theta_fixed_points()) orbit_has_fixed[faces.orbit_of(x)] = 1;
    SubPermutation r;
    for (int x = 0; x < h.n; ++x) {
        if (!orbit_has_fixed[faces.orbit_of(x)]) {
            r.domain.push_back(x);
            r.image.push_back(f(x));
        }
    }
    return r;
}

std::vector<int> thread_half_edges(const HalfEdgeSystem& h) {
    const Permutation f = phi(h);
    OrbitPartition faces(f);
    std::vector<char> orbit_has_fixed(faces.count(), 0);
    for (int x : h.theta_fixed_points()) orbit_has_fixed[faces.orbit_of(x)] = 1;
    std::vector<int> result;
    for (int x = 0; x < h.n; ++x)
        if (orbit_has_fixed[faces.orbit_of(x)]) result.push_back(x);
    return result;
}

Components components(const HalfEdgeSystem& h) {
    Components c;
    c.component_of.assign(h.n, -1);
    for (int start = 0; start < h.n; ++start) {
        if (c.component_of[start] != -1) continue;
        int id = c.count++;
        c.members.emplace_back();
        std::queue<int> queue;
        queue.push(start);
        c.component_of[start] = id;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            c.members[id].push_back(x);
            for (int y : {h.sigma(x), h.theta(x), h.sigma.inverse()(x)}) {
                if (c.component_of[y] == -1) {
                    c.component_of[y] = id;
                    queue.push(y);
                }
            }
        }
        std::sort(c.members[id].begin(), c.members[id].end());
    }
    return c;
}

bool is_connected(const HalfEdgeSystem& h) { return components(h).count == 1; }

HalfEdgeSystem restrict_to(const HalfEdgeSystem& h, const std::vector<int>& member_points) {
    std::vector<int> local(h.n, -1);
    for (size_t i = 0; i < member_points.size(); ++i) local[member_points[i]] = static_cast<int>(i);
    std::vector<int> sigma_img(member_points.size()), theta_img(member_points.size());
    for (size_t i = 0; i < member_points.size(); ++i) {
        int s = local[h.sigma(member_points[i])];
        int t = local[h.theta(member_points[i])];
        if (s < 0 || t < 0) throw Error("restriction domain is not closed under sigma and theta");
        sigma_img[i] = s;
        theta_img[i] = t;
    }
    return HalfEdgeSystem::make(Permutation::from_images(std::move(sigma_img)),
                                Permutation::from_images(std::move(theta_img)));
}

namespace {

// Canonical encoding of one connected component, as the lexicographically
// minimal BFS relabeling over all start points. A relabeling-equivariant map
// is determined on a component by the image of one point, so comparing these
// encodings decides isomorphism exactly.
std::vector<std::uint8_t> component_encoding(const HalfEdgeSystem& h) {
    if (h.n > 65535) throw Error("canonical form supports at most 65535 half-edges per component");
    std::vector<std::uint8_t> best;
    std::vector<int> label(h.n);
    std::vector<int> order;
    order.reserve(h.n);
    const Permutation sigma_inv = h.sigma.inverse();
    for (int start = 0; start < h.n; ++start) {
        std::fill(label.begin(), label.end(), -1);
        order.clear();
        label[start] = 0;
        order.push_back(start);
        for (size_t head = 0; head < order.size(); ++head) {
            int x = order[head];
            for (int y : {h.sigma(x), h.theta(x), sigma_inv(x)}) {
                if (label[y] == -1) {
                    label[y] = static_cast<int>(order.size());
                    order.push_back(y);
                }
            }
        }
        std::vector<std::uint8_t> enc;
        enc.reserve(order.size() * 4);
        for (int x : order) {
            for (int img : {label[h.sigma(x)], label[h.theta(x)]}) {
                enc.push_back(static_cast<std::uint8_t>(img & 0xff));
                enc.push_back(static_cast<std::uint8_t>((img >> 8) & 0xff));
            }
        }
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const HalfEdgeSystem& h) {
    Components comps = components(h);
    std::vector<std::vector<std::uint8_t>> encodings;
    encodings.reserve(comps.count);
    for (const auto& members : comps.members)
        encodings.push_back(component_encoding(restrict_to(h, members)));
    std::sort(encodings.begin(), encodings.end());
    std::vector<std::uint8_t> out;
    for (const auto& enc : encodings) {
        // Length-prefixed concatenation keeps component boundaries unambiguous.
        out.push_back(static_cast<std::uint8_t>(enc.size() & 0xff));
        out.push_back(static_cast<std::uint8_t>(enc.size() >> 8));
        out.insert(out.end(), enc.begin(), enc.end());
    }
    return out;
}

bool isomorphic(const HalfEdgeSystem& a, const HalfEdgeSystem& b) {
    if (a.n != b.n) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace gentle
