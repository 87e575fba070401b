// Copyright 2026 The Singleshot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "singleshot/repetition/torus_lattice.h"

#include <deque>
#include <string>

#include "singleshot/matching/blossom.h"

namespace singleshot {

namespace {

Graph build_vertex_graph(size_t L) {
    Graph g(L * L);
    for (size_t r = 0; r < L; r++) {
        for (size_t c = 0; c < L; c++) {
            g.add_edge(r * L + c, r * L + (c + 1) % L);
        }
    }
    for (size_t r = 0; r < L; r++) {
        for (size_t c = 0; c < L; c++) {
            g.add_edge(r * L + c, ((r + 1) % L) * L + c);
        }
    }
    return g;
}

void require_edges(const TorusLattice &lattice, const EdgeSet &e) {
    if (e.size() != lattice.num_edges()) {
        throw std::invalid_argument("Edge set size does not match the lattice.");
    }
}

void require_faces(const TorusLattice &lattice, const FaceSet &f) {
    if (f.size() != lattice.num_faces()) {
        throw std::invalid_argument("Face set size does not match the lattice.");
    }
}

}  // namespace

TorusLattice::TorusLattice(size_t L) : L_(L), graph_(0) {
    if (L < 2) {
        throw std::invalid_argument("TorusLattice: L must be at least 2.");
    }
    graph_ = build_vertex_graph(L);
}

std::pair<size_t, size_t> TorusLattice::edge_faces(size_t e) const {
    size_t n = L_ * L_;
    if (e < n) {
        size_t r = e / L_, c = e % L_;
        return {index(r + L_ - 1, c), index(r, c)};
    }
    e -= n;
    size_t r = e / L_, c = e % L_;
    return {index(r, c + L_ - 1), index(r, c)};
}

std::pair<size_t, size_t> TorusLattice::edge_vertices(size_t e) const {
    return graph_.ends(e);
}

std::array<size_t, 4> TorusLattice::vertex_edges(size_t v) const {
    size_t r = v / L_, c = v % L_;
    return {h_edge(r, c), h_edge(r, c + L_ - 1), v_edge(r, c), v_edge(r + L_ - 1, c)};
}

std::array<size_t, 4> TorusLattice::face_edges(size_t f) const {
    size_t r = f / L_, c = f % L_;
    return {h_edge(r, c), h_edge(r + 1, c), v_edge(r, c), v_edge(r, c + 1)};
}

size_t TorusLattice::distance(size_t u, size_t v) const {
    size_t dr = (v / L_ + L_ - u / L_) % L_;
    size_t dc = (v % L_ + L_ - u % L_) % L_;
    return std::min(dr, L_ - dr) + std::min(dc, L_ - dc);
}

std::vector<size_t> TorusLattice::canonical_path(size_t u, size_t v) const {
    std::vector<size_t> out;
    size_t r = u / L_, c = u % L_;
    size_t tr = v / L_, tc = v % L_;
    size_t fwd = (tc + L_ - c) % L_;
    bool positive = fwd <= L_ - fwd;
    while (c != tc) {
        if (positive) {
            out.push_back(h_edge(r, c));
            c = (c + 1) % L_;
        } else {
            c = (c + L_ - 1) % L_;
            out.push_back(h_edge(r, c));
        }
    }
    fwd = (tr + L_ - r) % L_;
    positive = fwd <= L_ - fwd;
    while (r != tr) {
        if (positive) {
            out.push_back(v_edge(r, c));
            r = (r + 1) % L_;
        } else {
            r = (r + L_ - 1) % L_;
            out.push_back(v_edge(r, c));
        }
    }
    return out;
}

EdgeSet boundary(const TorusLattice &lattice, const FaceSet &f) {
    require_faces(lattice, f);
    EdgeSet out(lattice.num_edges());
    for (size_t face : f.ones()) {
        for (size_t e : lattice.face_edges(face)) {
            out.flip(e);
        }
    }
    return out;
}

std::vector<size_t> odd_vertices(const TorusLattice &lattice, const EdgeSet &edges) {
    require_edges(lattice, edges);
    return lattice.vertex_graph().odd_nodes(edges);
}

bool is_closed(const TorusLattice &lattice, const EdgeSet &edges) {
    return odd_vertices(lattice, edges).empty();
}

std::vector<size_t> edge_cluster_sizes(const TorusLattice &lattice, const EdgeSet &edges) {
    require_edges(lattice, edges);
    std::vector<bool> seen(lattice.num_edges(), false);
    std::vector<size_t> sizes;
    for (size_t start : edges.ones()) {
        if (seen[start]) {
            continue;
        }
        size_t count = 0;
        std::deque<size_t> q{start};
        seen[start] = true;
        while (!q.empty()) {
            size_t e = q.front();
            q.pop_front();
            count++;
            auto [a, b] = lattice.edge_vertices(e);
            for (size_t v : {a, b}) {
                for (size_t nb : lattice.vertex_edges(v)) {
                    if (edges[nb] && !seen[nb]) {
                        seen[nb] = true;
                        q.push_back(nb);
                    }
                }
            }
        }
        sizes.push_back(count);
    }
    return sizes;
}

EdgeSet close_pseudo_syndrome(const TorusLattice &lattice, const EdgeSet &p) {
    constexpr size_t kMaxDefects = 2000;
    auto odd = odd_vertices(lattice, p);
    EdgeSet w0(lattice.num_edges());
    if (odd.empty()) {
        return w0;
    }
    if (odd.size() % 2) {
        throw std::logic_error("close_pseudo_syndrome: odd defect count on a torus.");
    }
    if (odd.size() > kMaxDefects) {
        throw MatchingResourceError("close_pseudo_syndrome: " + std::to_string(odd.size()) + " defects exceed the budget.");
    }
    MatchGraph mg(odd.size());
    for (size_t i = 0; i < odd.size(); i++) {
        for (size_t j = i + 1; j < odd.size(); j++) {
            mg.add_edge(i, j, (int64_t)lattice.distance(odd[i], odd[j]));
        }
    }
    auto match = mwpm(mg);
    for (size_t i = 0; i < odd.size(); i++) {
        int64_t j = match.mate[i];
        if (j > (int64_t)i) {
            for (size_t e : lattice.canonical_path(odd[i], odd[(size_t)j])) {
                w0.flip(e);
            }
        }
    }
    return w0;
}

namespace {

// Face 2-coloring whose boundary is `edges`; nullopt if no such coloring exists.
std::optional<FaceSet> solve_region(const TorusLattice &lattice, const EdgeSet &edges) {
    size_t nf = lattice.num_faces();
    std::vector<int8_t> side(nf, -1);
    side[0] = 0;
    std::deque<size_t> q{0};
    while (!q.empty()) {
        size_t f = q.front();
        q.pop_front();
        for (size_t e : lattice.face_edges(f)) {
            auto [a, b] = lattice.edge_faces(e);
            size_t other = a == f ? b : a;
            int8_t want = (int8_t)(side[f] ^ (edges[e] ? 1 : 0));
            if (side[other] < 0) {
                side[other] = want;
                q.push_back(other);
            } else if (side[other] != want) {
                return std::nullopt;
            }
        }
    }
    FaceSet out(nf);
    for (size_t f = 0; f < nf; f++) {
        if (side[f]) {
            out.flip(f);
        }
    }
    return out;
}

}  // namespace

FaceSet decode(const TorusLattice &lattice, const EdgeSet &l) {
    if (!is_closed(lattice, l)) {
        throw std::invalid_argument("decode: syndrome is not closed.");
    }
    size_t nf = lattice.num_faces();
    FaceSet flips(nf);
    std::vector<bool> seen(lattice.num_edges(), false);
    for (size_t start : l.ones()) {
        if (seen[start]) {
            continue;
        }
        EdgeSet component(lattice.num_edges());
        std::deque<size_t> q{start};
        seen[start] = true;
        while (!q.empty()) {
            size_t e = q.front();
            q.pop_front();
            component.flip(e);
            auto [a, b] = lattice.edge_vertices(e);
            for (size_t v : {a, b}) {
                for (size_t nb : lattice.vertex_edges(v)) {
                    if (l[nb] && !seen[nb]) {
                        seen[nb] = true;
                        q.push_back(nb);
                    }
                }
            }
        }
        auto region = solve_region(lattice, component);
        if (!region.has_value()) {
            throw NonSyndromeEvent("decode: homologically nontrivial syndrome component.");
        }
        // `region` excludes face 0; its complement contains it.
        size_t inside = region->popcount();
        if (2 * inside < nf) {
            flips ^= *region;
        } else {
            FaceSet complement = *region;
            for (size_t f = 0; f < nf; f++) {
                complement.flip(f);
            }
            flips ^= complement;
        }
    }
    return flips;
}

LogicalClass logical_class(const TorusLattice &lattice, const FaceSet &f) {
    require_faces(lattice, f);
    size_t w = f.popcount();
    size_t nf = lattice.num_faces();
    return {2 * w > nf, 2 * w == nf};
}

SubsystemCode ising_torus_code(size_t L) {
    TorusLattice lattice(L);
    size_t n = lattice.num_faces();
    std::vector<PauliOperator> checks;
    for (size_t e = 0; e < lattice.num_edges(); e++) {
        auto [a, b] = lattice.edge_faces(e);
        PauliOperator z(n);
        z.zs.flip(a);
        z.zs.flip(b);
        checks.push_back(z);
    }
    PauliOperator all_x(n);
    for (size_t q = 0; q < n; q++) {
        all_x.xs.flip(q);
    }
    return SubsystemCode(n, checks, checks, {all_x, PauliOperator::single(n, 0, 'Z')});
}

}  // namespace singleshot
