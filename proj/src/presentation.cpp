#include "gentle/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "gentle/errors.hpp"

namespace gentle {

bool GentlePresentation::has_relation(int later, int earlier) const {
    return std::binary_search(relations.begin(), relations.end(), std::make_pair(later, earlier));
}

int GentlePresentation::find_vertex(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertex_names[i] == name) return i;
    return -1;
}

int GentlePresentation::find_arrow(const std::string& name) const {
    for (int i = 0; i < arrow_count(); ++i)
        if (arrows[i].name == name) return i;
    return -1;
}

void GentlePresentation::rebuild_index() {
    std::sort(relations.begin(), relations.end());
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
    out_.assign(vertex_count(), {});
    in_.assign(vertex_count(), {});
    for (int a = 0; a < arrow_count(); ++a) {
        out_[arrows[a].source].push_back(a);
        in_[arrows[a].target].push_back(a);
    }
}

std::vector<int> GentlePresentation::vertex_component() const {
    std::vector<int> comp(vertex_count(), -1);
    int next = 0;
    for (int start = 0; start < vertex_count(); ++start) {
        if (comp[start] != -1) continue;
        int id = next++;
        std::queue<int> queue;
        queue.push(start);
        comp[start] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (const auto& adjacency : {out_[v], in_[v]}) {
                for (int a : adjacency) {
                    for (int w : {arrows[a].source, arrows[a].target}) {
                        if (comp[w] == -1) {
                            comp[w] = id;
                            queue.push(w);
                        }
                    }
                }
            }
        }
    }
    return comp;
}

int GentlePresentation::component_count() const {
    auto comp = vertex_component();
    int count = 0;
    for (int c : comp) count = std::max(count, c + 1);
    return count;
}

namespace {

// Unique relation-free successor/predecessor of each arrow, -1 if none.
// Uniqueness is part of the gentleness conditions, which the caller checks
// first; these helpers just pick the unique candidate.
struct PermittedChains {
    std::vector<int> succ, pred;
};

PermittedChains permitted_chains(const GentlePresentation& p) {
    PermittedChains chains;
    chains.succ.assign(p.arrow_count(), -1);
    chains.pred.assign(p.arrow_count(), -1);
    for (int a = 0; a < p.arrow_count(); ++a) {
        for (int b : p.out_arrows(p.arrows[a].target)) {
            if (!p.has_relation(b, a)) {
                chains.succ[a] = b;
                break;
            }
        }
        for (int b : p.in_arrows(p.arrows[a].source)) {
            if (!p.has_relation(a, b)) {
                chains.pred[a] = b;
                break;
            }
        }
    }
    return chains;
}

// True when the permitted chain through `a` closes into a cycle.
bool on_permitted_cycle(const PermittedChains& chains, int a) {
    int x = chains.succ[a];
    int steps = 0;
    const int limit = static_cast<int>(chains.succ.size());
    while (x != -1 && x != a && steps++ <= limit) x = chains.succ[x];
    return x == a;
}

std::string describe_arrow(const GentlePresentation& p, int a) {
    const Arrow& ar = p.arrows[a];
    return ar.name + " (" + p.vertex_names[ar.source] + " -> " + p.vertex_names[ar.target] + ")";
}

}  // namespace

OrderDiagnosis diagnose(const GentlePresentation& p) {
    OrderDiagnosis d;
    d.gentle = true;

    for (int v = 0; v < p.vertex_count(); ++v) {
        if (p.out_arrows(v).size() > 2 || p.in_arrows(v).size() > 2) {
            d.gentle = false;
            d.gentle_message = "vertex " + p.vertex_names[v] + " has more than two in- or out-arrows";
            return d;
        }
    }
    for (int a = 0; a < p.arrow_count(); ++a) {
        int permitted_succ = 0, forbidden_succ = 0, permitted_pred = 0, forbidden_pred = 0;
        for (int b : p.out_arrows(p.arrows[a].target))
            (p.has_relation(b, a) ? forbidden_succ : permitted_succ)++;
        for (int b : p.in_arrows(p.arrows[a].source))
            (p.has_relation(a, b) ? forbidden_pred : permitted_pred)++;
        if (permitted_succ > 1 || forbidden_succ > 1 || permitted_pred > 1 || forbidden_pred > 1) {
            d.gentle = false;
            d.gentle_message = "arrow " + describe_arrow(p, a) +
                               " violates the gentle successor/predecessor pattern";
            return d;
        }
    }

    // Condition (1): classify every vertex.
    VertexClassification classes;
    classes.kind.assign(p.vertex_count(), VertexKind::Transition);
    bool all_classified = true;
    for (int v = 0; v < p.vertex_count(); ++v) {
        const auto& in = p.in_arrows(v);
        const auto& out = p.out_arrows(v);
        if (in.size() == 1 && out.size() == 1 && !p.has_relation(out[0], in[0])) {
            classes.kind[v] = VertexKind::Transition;
            classes.transition_vertices.push_back(v);
        } else if (in.size() == 2 && out.size() == 2) {
            // Gentleness already forces the diagonal relation pattern here.
            classes.kind[v] = VertexKind::Crossing;
            classes.crossing_vertices.push_back(v);
        } else {
            all_classified = false;
            d.unclassifiable_vertices.push_back(v);
        }
    }
    d.every_vertex_transition_or_crossing = all_classified;
    if (all_classified) d.classes = std::move(classes);

    const PermittedChains chains = permitted_chains(p);

    // Condition (3): every arrow lies on a permitted cycle.
    d.every_arrow_on_permitted_cycle = true;
    for (int a = 0; a < p.arrow_count(); ++a) {
        if (!on_permitted_cycle(chains, a)) {
            d.every_arrow_on_permitted_cycle = false;
            break;
        }
    }

    // Condition (2): no permitted threads. Non-trivial threads are maximal
    // permitted chains that do not close; a trivial thread sits at any vertex
    // through which no relation-free composite passes.
    d.no_permitted_threads = true;
    for (int a = 0; a < p.arrow_count() && d.no_permitted_threads; ++a) {
        if (chains.pred[a] != -1) continue;
        PermittedThread thread;
        thread.vertex = p.arrows[a].source;
        for (int x = a; x != -1; x = chains.succ[x]) {
            thread.arrows.push_back(x);
            if (static_cast<int>(thread.arrows.size()) > p.arrow_count())
                throw Error("permitted thread walk failed to terminate");
        }
        d.no_permitted_threads = false;
        d.thread_witness = std::move(thread);
    }
    for (int v = 0; v < p.vertex_count() && d.no_permitted_threads; ++v) {
        const auto& in = p.in_arrows(v);
        const auto& out = p.out_arrows(v);
        if (in.size() > 1 || out.size() > 1) continue;
        bool pass_through = !in.empty() && !out.empty() && !p.has_relation(out[0], in[0]);
        if (!pass_through) {
            d.no_permitted_threads = false;
            d.thread_witness = PermittedThread{{}, v};
        }
    }

    return d;
}

VertexClassification validate_gentle_order(const GentlePresentation& p) {
    OrderDiagnosis d = diagnose(p);
    if (!d.gentle) throw NotGentleError(d.gentle_message);
    if (!d.every_vertex_transition_or_crossing) {
        std::string msg;
        if (d.thread_witness && !d.thread_witness->arrows.empty()) {
            msg = "permitted thread";
            for (int a : d.thread_witness->arrows) msg += " " + p.arrows[a].name;
        } else if (d.thread_witness) {
            msg = "trivial permitted thread at vertex " + p.vertex_names[d.thread_witness->vertex];
        } else {
            msg = "vertex " + p.vertex_names[d.unclassifiable_vertices.front()] +
                  " is neither transition nor crossing";
        }
        throw NotGentleOrderError(msg, d.thread_witness ? d.thread_witness->arrows : std::vector<int>{},
                                  d.thread_witness ? d.thread_witness->vertex
                                                   : d.unclassifiable_vertices.front());
    }
    // The three conditions are equivalent; a divergence here is a bug, not
    // an input error.
    if (!d.no_permitted_threads || !d.every_arrow_on_permitted_cycle)
        throw Error("gentle-order conditions diverged on a classified presentation");
    return *d.classes;
}

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

}  // namespace

GentlePresentation parse_gq(const std::string& text) {
    GentlePresentation p;
    std::map<std::string, int> vertex_index, arrow_index;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, int>> seen_relations;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0].text;
        if (keyword == "vertex") {
            if (tokens.size() != 2)
                throw ParseError("expected: vertex <id>", line_no, tokens[0].column);
            if (vertex_index.count(tokens[1].text))
                throw ParseError("duplicate vertex \"" + tokens[1].text + "\"", line_no,
                                 tokens[1].column);
            vertex_index[tokens[1].text] = p.vertex_count();
            p.vertex_names.push_back(tokens[1].text);
        } else if (keyword == "arrow") {
            if (tokens.size() != 4)
                throw ParseError("expected: arrow <id> <src> <tgt>", line_no, tokens[0].column);
            if (arrow_index.count(tokens[1].text))
                throw ParseError("duplicate arrow \"" + tokens[1].text + "\"", line_no,
                                 tokens[1].column);
            auto src = vertex_index.find(tokens[2].text);
            if (src == vertex_index.end())
                throw ParseError("unknown vertex \"" + tokens[2].text + "\"", line_no,
                                 tokens[2].column);
            auto tgt = vertex_index.find(tokens[3].text);
            if (tgt == vertex_index.end())
                throw ParseError("unknown vertex \"" + tokens[3].text + "\"", line_no,
                                 tokens[3].column);
            arrow_index[tokens[1].text] = p.arrow_count();
            p.arrows.push_back({tokens[1].text, src->second, tgt->second});
        } else if (keyword == "rel") {
            if (tokens.size() != 3)
                throw ParseError("expected: rel <beta> <alpha>", line_no, tokens[0].column);
            auto later = arrow_index.find(tokens[1].text);
            if (later == arrow_index.end())
                throw ParseError("unknown arrow \"" + tokens[1].text + "\"", line_no,
                                 tokens[1].column);
            auto earlier = arrow_index.find(tokens[2].text);
            if (earlier == arrow_index.end())
                throw ParseError("unknown arrow \"" + tokens[2].text + "\"", line_no,
                                 tokens[2].column);
            if (p.arrows[later->second].source != p.arrows[earlier->second].target)
                throw ParseError("relation " + tokens[1].text + "∘" + tokens[2].text +
                                     " is not composable (source of \"" + tokens[1].text +
                                     "\" differs from target of \"" + tokens[2].text + "\")",
                                 line_no, tokens[1].column);
            std::pair<int, int> rel{later->second, earlier->second};
            if (std::find(seen_relations.begin(), seen_relations.end(), rel) !=
                seen_relations.end())
                throw ParseError("duplicate relation " + tokens[1].text + "∘" + tokens[2].text,
                                 line_no, tokens[1].column);
            seen_relations.push_back(rel);
            p.relations.push_back(rel);
        } else {
            throw ParseError("unknown keyword \"" + keyword + "\"", line_no, tokens[0].column);
        }
    }
    if (p.vertex_count() == 0) throw ParseError("a quiver needs at least one vertex", line_no, 1);
    p.rebuild_index();
    return p;
}

std::string write_gq(const GentlePresentation& p) {
    std::ostringstream out;
    for (const auto& v : p.vertex_names) out << "vertex " << v << "\n";
    for (const auto& a : p.arrows)
        out << "arrow " << a.name << " " << p.vertex_names[a.source] << " "
            << p.vertex_names[a.target] << "\n";
    for (const auto& [later, earlier] : p.relations)
        out << "rel " << p.arrows[later].name << " " << p.arrows[earlier].name << "\n";
    return out.str();
}

HalfEdgeSystem parse_hep(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long n = -1;
    std::optional<Permutation> sigma, theta;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0].text;
        if (keyword == "halfedges") {
            if (n != -1) throw ParseError("repeated halfedges line", line_no, tokens[0].column);
            if (tokens.size() != 2)
                throw ParseError("expected: halfedges <n>", line_no, tokens[0].column);
            try {
                n = std::stol(tokens[1].text);
            } catch (const std::exception&) {
                throw ParseError("invalid half-edge count", line_no, tokens[1].column);
            }
            if (n < 1 || n > 1000000)
                throw ParseError("half-edge count must be in 1..1000000", line_no,
                                 tokens[1].column);
        } else if (keyword == "sigma" || keyword == "theta") {
            if (n == -1)
                throw ParseError("halfedges line must come first", line_no, tokens[0].column);
            auto& slot = keyword == "sigma" ? sigma : theta;
            if (slot) throw ParseError("repeated " + keyword + " line", line_no, tokens[0].column);
            std::string rest;
            size_t after = line.find(keyword) + keyword.size();
            rest = line.substr(after);
            if (auto hash = rest.find('#'); hash != std::string::npos) rest = rest.substr(0, hash);
            slot = cycles_from_string(rest, static_cast<int>(n), line_no);
        } else {
            throw ParseError("unknown keyword \"" + keyword + "\"", line_no, tokens[0].column);
        }
    }
    if (n == -1) throw ParseError("missing halfedges line", line_no, 1);
    if (!sigma) throw ParseError("missing sigma line", line_no, 1);
    if (!theta) throw ParseError("missing theta line", line_no, 1);
    try {
        return HalfEdgeSystem::make(std::move(*sigma), std::move(*theta));
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no, 1);
    }
}

std::string write_hep(const HalfEdgeSystem& h) {
    std::ostringstream out;
    out << "halfedges " << h.n << "\n";
    out << "sigma " << cycles_to_string(h.sigma) << "\n";
    out << "theta " << cycles_to_string(h.theta) << "\n";
    return out.str();
}

HalfEdgeSystem to_half_edges(const GentlePresentation& p, const VertexClassification& c) {
    const int n = p.arrow_count();
    std::vector<int> sigma_img(n, -1), theta_img(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b : p.out_arrows(p.arrows[a].target)) {
            if (!p.has_relation(b, a)) {
                sigma_img[a] = b;
                break;
            }
        }
        if (sigma_img[a] == -1)
            throw Error("arrow " + p.arrows[a].name + " has no relation-free successor");
        int source = p.arrows[a].source;
        if (c.kind[source] == VertexKind::Transition) {
            theta_img[a] = a;
        } else {
            const auto& out = p.out_arrows(source);
            theta_img[a] = out[0] == a ? out[1] : out[0];
        }
    }
    return HalfEdgeSystem::make(Permutation::from_images(std::move(sigma_img)),
                                Permutation::from_images(std::move(theta_img)));
}

GentlePresentation from_half_edges(const HalfEdgeSystem& h) {
    GentlePresentation p;
    OrbitPartition vertices(h.theta);
    for (int v = 0; v < vertices.count(); ++v)
        p.vertex_names.push_back("v" + std::to_string(v + 1));
    for (int a = 0; a < h.n; ++a) {
        Arrow arrow;
        arrow.name = "a" + std::to_string(a + 1);
        arrow.source = vertices.orbit_of(a);
        arrow.target = vertices.orbit_of(h.sigma(a));
        p.arrows.push_back(std::move(arrow));
    }
    for (int a = 0; a < h.n; ++a) {
        int target = vertices.orbit_of(h.sigma(a));
        for (int b : vertices.orbit(target))
            if (b != h.sigma(a)) p.relations.emplace_back(b, a);
    }
    p.rebuild_index();
    return p;
}

std::vector<GentlePresentation> split_components(const GentlePresentation& p) {
    const std::vector<int> comp = p.vertex_component();
    int count = 0;
    for (int c : comp) count = std::max(count, c + 1);
    std::vector<GentlePresentation> parts(count);
    std::vector<int> vertex_local(p.vertex_count()), arrow_local(p.arrow_count());
    for (int v = 0; v < p.vertex_count(); ++v) {
        vertex_local[v] = parts[comp[v]].vertex_count();
        parts[comp[v]].vertex_names.push_back(p.vertex_names[v]);
    }
    for (int a = 0; a < p.arrow_count(); ++a) {
        int c = comp[p.arrows[a].source];
        arrow_local[a] = parts[c].arrow_count();
        parts[c].arrows.push_back({p.arrows[a].name, vertex_local[p.arrows[a].source],
                                   vertex_local[p.arrows[a].target]});
    }
    for (const auto& [later, earlier] : p.relations) {
        int c = comp[p.arrows[later].source];
        parts[c].relations.emplace_back(arrow_local[later], arrow_local[earlier]);
    }
    for (auto& part : parts) part.rebuild_index();
    return parts;
}

GentlePresentation remove_arrow(const GentlePresentation& p, int arrow) {
    GentlePresentation q;
    q.vertex_names = p.vertex_names;
    std::vector<int> new_index(p.arrow_count(), -1);
    for (int a = 0; a < p.arrow_count(); ++a) {
        if (a == arrow) continue;
        new_index[a] = q.arrow_count();
        q.arrows.push_back(p.arrows[a]);
    }
    for (const auto& [later, earlier] : p.relations)
        if (later != arrow && earlier != arrow)
            q.relations.emplace_back(new_index[later], new_index[earlier]);
    q.rebuild_index();
    return q;
}

}  // namespace gentle
