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

#include "singleshot/matching/blossom.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace singleshot {

namespace {

class BlossomSolver {
   public:
    BlossomSolver(size_t n, const std::vector<WeightedEdge> &edges, bool max_cardinality)
        : n_(n), edges_(edges), max_cardinality_(max_cardinality) {
    }

    std::vector<int64_t> solve();

   private:
    int64_t slack(int64_t k) const {
        const auto &e = edges_[k];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }
    int64_t endpoint(int64_t p) const {
        return (int64_t)(p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v);
    }
    void leaves(int64_t b, std::vector<int64_t> &out) const {
        if (b < (int64_t)n_) {
            out.push_back(b);
            return;
        }
        for (int64_t t : childs_[b]) {
            leaves(t, out);
        }
    }
    std::vector<int64_t> leaves(int64_t b) const {
        std::vector<int64_t> out;
        leaves(b, out);
        return out;
    }
    void assign_label(int64_t w, int t, int64_t p);
    int64_t scan_blossom(int64_t v, int64_t w);
    void add_blossom(int64_t base, int64_t k);
    void expand_blossom(int64_t b, bool endstage);
    void augment_blossom(int64_t b, int64_t v);
    void augment_matching(int64_t k);

    size_t n_;
    const std::vector<WeightedEdge> &edges_;
    bool max_cardinality_;

    std::vector<std::vector<int64_t>> neighbend_;
    std::vector<int64_t> mate_, labelend_, inblossom_, parent_, base_, bestedge_, dualvar_, unused_;
    std::vector<int> label_;
    std::vector<std::vector<int64_t>> childs_, endps_, bestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<bool> allowedge_;
    std::vector<int64_t> queue_;
};

void BlossomSolver::assign_label(int64_t w, int t, int64_t p) {
    int64_t b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
        leaves(b, queue_);
    } else if (t == 2) {
        int64_t base = base_[b];
        assign_label(endpoint(mate_[base]), 1, mate_[base] ^ 1);
    }
}

int64_t BlossomSolver::scan_blossom(int64_t v, int64_t w) {
    std::vector<int64_t> path;
    int64_t base = -1;
    while (v != -1 || w != -1) {
        int64_t b = inblossom_[v];
        if (label_[b] & 4) {
            base = base_[b];
            break;
        }
        path.push_back(b);
        label_[b] = 5;
        if (labelend_[b] == -1) {
            v = -1;
        } else {
            v = endpoint(labelend_[b]);
            b = inblossom_[v];
            v = endpoint(labelend_[b]);
        }
        if (w != -1) {
            std::swap(v, w);
        }
    }
    for (int64_t b : path) {
        label_[b] = 1;
    }
    return base;
}

void BlossomSolver::add_blossom(int64_t base, int64_t k) {
    int64_t v = (int64_t)edges_[k].u;
    int64_t w = (int64_t)edges_[k].v;
    int64_t bb = inblossom_[base];
    int64_t bv = inblossom_[v];
    int64_t bw = inblossom_[w];
    int64_t b = unused_.back();
    unused_.pop_back();
    base_[b] = base;
    parent_[b] = -1;
    parent_[bb] = b;
    auto &path = childs_[b];
    auto &endps = endps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
        parent_[bv] = b;
        path.push_back(bv);
        endps.push_back(labelend_[bv]);
        v = endpoint(labelend_[bv]);
        bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        parent_[bw] = b;
        path.push_back(bw);
        endps.push_back(labelend_[bw] ^ 1);
        w = endpoint(labelend_[bw]);
        bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int64_t leaf : leaves(b)) {
        if (label_[inblossom_[leaf]] == 2) {
            queue_.push_back(leaf);
        }
        inblossom_[leaf] = b;
    }
    std::vector<int64_t> bestedgeto(2 * n_, -1);
    for (int64_t sub : path) {
        std::vector<std::vector<int64_t>> nblists;
        if (!has_bestedges_[sub]) {
            for (int64_t leaf : leaves(sub)) {
                std::vector<int64_t> list;
                for (int64_t p : neighbend_[leaf]) {
                    list.push_back(p / 2);
                }
                nblists.push_back(std::move(list));
            }
        } else {
            nblists.push_back(bestedges_[sub]);
        }
        for (const auto &nblist : nblists) {
            for (int64_t kk : nblist) {
                int64_t i = (int64_t)edges_[kk].u;
                int64_t j = (int64_t)edges_[kk].v;
                if (inblossom_[j] == b) {
                    std::swap(i, j);
                }
                int64_t bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                    bestedgeto[bj] = kk;
                }
            }
        }
        bestedges_[sub].clear();
        has_bestedges_[sub] = false;
        bestedge_[sub] = -1;
    }
    bestedges_[b].clear();
    for (int64_t kk : bestedgeto) {
        if (kk != -1) {
            bestedges_[b].push_back(kk);
        }
    }
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int64_t kk : bestedges_[b]) {
        if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
            bestedge_[b] = kk;
        }
    }
}

void BlossomSolver::expand_blossom(int64_t b, bool endstage) {
    std::vector<int64_t> children = childs_[b];
    for (int64_t s : children) {
        parent_[s] = -1;
        if (s < (int64_t)n_) {
            inblossom_[s] = s;
        } else if (endstage && dualvar_[s] == 0) {
            expand_blossom(s, endstage);
        } else {
            for (int64_t leaf : leaves(s)) {
                inblossom_[leaf] = s;
            }
        }
    }
    if (!endstage && label_[b] == 2) {
        int64_t entrychild = inblossom_[endpoint(labelend_[b] ^ 1)];
        int64_t len = (int64_t)childs_[b].size();
        int64_t j = std::find(childs_[b].begin(), childs_[b].end(), entrychild) - childs_[b].begin();
        int64_t jstep, endptrick;
        if (j & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        auto at = [&](const std::vector<int64_t> &v, int64_t idx) {
            return v[(size_t)((idx % len + len) % len)];
        };
        int64_t p = labelend_[b];
        while (j != 0) {
            label_[endpoint(p ^ 1)] = 0;
            label_[endpoint(at(endps_[b], j - endptrick) ^ endptrick ^ 1)] = 0;
            assign_label(endpoint(p ^ 1), 2, p);
            allowedge_[at(endps_[b], j - endptrick) / 2] = true;
            j += jstep;
            p = at(endps_[b], j - endptrick) ^ endptrick;
            allowedge_[p / 2] = true;
            j += jstep;
        }
        int64_t bv = at(childs_[b], j);
        label_[endpoint(p ^ 1)] = label_[bv] = 2;
        labelend_[endpoint(p ^ 1)] = labelend_[bv] = p;
        bestedge_[bv] = -1;
        j += jstep;
        while (at(childs_[b], j) != entrychild) {
            bv = at(childs_[b], j);
            if (label_[bv] == 1) {
                j += jstep;
                continue;
            }
            int64_t found = -1;
            for (int64_t leaf : leaves(bv)) {
                if (label_[leaf] != 0) {
                    found = leaf;
                    break;
                }
            }
            if (found != -1) {
                label_[found] = 0;
                label_[endpoint(mate_[base_[bv]])] = 0;
                assign_label(found, 2, labelend_[found]);
            }
            j += jstep;
        }
    }
    label_[b] = -1;
    labelend_[b] = -1;
    childs_[b].clear();
    endps_[b].clear();
    base_[b] = -1;
    bestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unused_.push_back(b);
}

void BlossomSolver::augment_blossom(int64_t b, int64_t v) {
    int64_t t = v;
    while (parent_[t] != b) {
        t = parent_[t];
    }
    if (t >= (int64_t)n_) {
        augment_blossom(t, v);
    }
    int64_t len = (int64_t)childs_[b].size();
    int64_t i = std::find(childs_[b].begin(), childs_[b].end(), t) - childs_[b].begin();
    int64_t j = i;
    int64_t jstep, endptrick;
    if (i & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    auto at = [&](const std::vector<int64_t> &vec, int64_t idx) {
        return vec[(size_t)((idx % len + len) % len)];
    };
    while (j != 0) {
        j += jstep;
        t = at(childs_[b], j);
        int64_t p = at(endps_[b], j - endptrick) ^ endptrick;
        if (t >= (int64_t)n_) {
            augment_blossom(t, endpoint(p));
        }
        j += jstep;
        t = at(childs_[b], j);
        if (t >= (int64_t)n_) {
            augment_blossom(t, endpoint(p ^ 1));
        }
        mate_[endpoint(p)] = p ^ 1;
        mate_[endpoint(p ^ 1)] = p;
    }
    std::rotate(childs_[b].begin(), childs_[b].begin() + i, childs_[b].end());
    std::rotate(endps_[b].begin(), endps_[b].begin() + i, endps_[b].end());
    base_[b] = base_[childs_[b][0]];
}

void BlossomSolver::augment_matching(int64_t k) {
    int64_t v = (int64_t)edges_[k].u;
    int64_t w = (int64_t)edges_[k].v;
    for (auto [s, p] : {std::pair<int64_t, int64_t>{v, 2 * k + 1}, std::pair<int64_t, int64_t>{w, 2 * k}}) {
        while (true) {
            int64_t bs = inblossom_[s];
            if (bs >= (int64_t)n_) {
                augment_blossom(bs, s);
            }
            mate_[s] = p;
            if (labelend_[bs] == -1) {
                break;
            }
            int64_t t = endpoint(labelend_[bs]);
            int64_t bt = inblossom_[t];
            s = endpoint(labelend_[bt]);
            int64_t j = endpoint(labelend_[bt] ^ 1);
            if (bt >= (int64_t)n_) {
                augment_blossom(bt, j);
            }
            mate_[j] = labelend_[bt];
            p = labelend_[bt] ^ 1;
        }
    }
}

std::vector<int64_t> BlossomSolver::solve() {
    size_t n = n_;
    if (edges_.empty()) {
        return std::vector<int64_t>(n, -1);
    }
    int64_t maxweight = 0;
    for (const auto &e : edges_) {
        maxweight = std::max(maxweight, e.weight);
    }
    neighbend_.assign(n, {});
    for (size_t k = 0; k < edges_.size(); k++) {
        neighbend_[edges_[k].u].push_back(2 * (int64_t)k + 1);
        neighbend_[edges_[k].v].push_back(2 * (int64_t)k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (size_t i = 0; i < n; i++) {
        inblossom_[i] = (int64_t)i;
    }
    parent_.assign(2 * n, -1);
    childs_.assign(2 * n, {});
    endps_.assign(2 * n, {});
    base_.assign(2 * n, -1);
    for (size_t i = 0; i < n; i++) {
        base_[i] = (int64_t)i;
    }
    bestedge_.assign(2 * n, -1);
    bestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, false);
    unused_.clear();
    for (size_t i = n; i < 2 * n; i++) {
        unused_.push_back((int64_t)i);
    }
    dualvar_.assign(2 * n, 0);
    for (size_t i = 0; i < n; i++) {
        dualvar_[i] = maxweight;
    }
    allowedge_.assign(edges_.size(), false);

    for (size_t stage = 0; stage < n; stage++) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(bestedge_.begin(), bestedge_.end(), -1);
        for (size_t b = n; b < 2 * n; b++) {
            bestedges_[b].clear();
            has_bestedges_[b] = false;
        }
        std::fill(allowedge_.begin(), allowedge_.end(), false);
        queue_.clear();
        for (size_t v = 0; v < n; v++) {
            if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                assign_label((int64_t)v, 1, -1);
            }
        }
        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                int64_t v = queue_.back();
                queue_.pop_back();
                for (int64_t p : neighbend_[v]) {
                    int64_t k = p / 2;
                    int64_t w = endpoint(p);
                    if (inblossom_[v] == inblossom_[w]) {
                        continue;
                    }
                    int64_t kslack = 0;
                    if (!allowedge_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0) {
                            allowedge_[k] = true;
                        }
                    }
                    if (allowedge_[k]) {
                        if (label_[inblossom_[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[inblossom_[w]] == 1) {
                            int64_t base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label_[w] == 0) {
                            label_[w] = 2;
                            labelend_[w] = p ^ 1;
                        }
                    } else if (label_[inblossom_[w]] == 1) {
                        int64_t b = inblossom_[v];
                        if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                            bestedge_[b] = k;
                        }
                    } else if (label_[w] == 0) {
                        if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                            bestedge_[w] = k;
                        }
                    }
                }
            }
            if (augmented) {
                break;
            }
            int deltatype = -1;
            int64_t delta = 0, deltaedge = -1, deltablossom = -1;
            if (!max_cardinality_) {
                deltatype = 1;
                delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + (int64_t)n);
            }
            for (size_t v = 0; v < n; v++) {
                if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                    int64_t d = slack(bestedge_[v]);
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge_[v];
                    }
                }
            }
            for (size_t b = 0; b < 2 * n; b++) {
                if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                    int64_t kslack = slack(bestedge_[b]);
                    int64_t d = kslack / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[b];
                    }
                }
            }
            for (size_t b = n; b < 2 * n; b++) {
                if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 && (deltatype == -1 || dualvar_[b] < delta)) {
                    delta = dualvar_[b];
                    deltatype = 4;
                    deltablossom = (int64_t)b;
                }
            }
            if (deltatype == -1) {
                deltatype = 1;
                delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + (int64_t)n));
            }
            for (size_t v = 0; v < n; v++) {
                if (label_[inblossom_[v]] == 1) {
                    dualvar_[v] -= delta;
                } else if (label_[inblossom_[v]] == 2) {
                    dualvar_[v] += delta;
                }
            }
            for (size_t b = n; b < 2 * n; b++) {
                if (base_[b] >= 0 && parent_[b] == -1) {
                    if (label_[b] == 1) {
                        dualvar_[b] += delta;
                    } else if (label_[b] == 2) {
                        dualvar_[b] -= delta;
                    }
                }
            }
            if (deltatype == 1) {
                break;
            } else if (deltatype == 2) {
                allowedge_[deltaedge] = true;
                int64_t i = (int64_t)edges_[deltaedge].u;
                int64_t j = (int64_t)edges_[deltaedge].v;
                if (label_[inblossom_[i]] == 0) {
                    std::swap(i, j);
                }
                queue_.push_back(i);
            } else if (deltatype == 3) {
                allowedge_[deltaedge] = true;
                queue_.push_back((int64_t)edges_[deltaedge].u);
            } else {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented) {
            break;
        }
        for (size_t b = n; b < 2 * n; b++) {
            if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                expand_blossom((int64_t)b, true);
            }
        }
    }
    std::vector<int64_t> out(n, -1);
    for (size_t v = 0; v < n; v++) {
        if (mate_[v] >= 0) {
            out[v] = endpoint(mate_[v]);
        }
    }
    return out;
}

}  // namespace

std::vector<int64_t> max_weight_matching(size_t num_nodes, const std::vector<WeightedEdge> &edges, bool max_cardinality) {
    for (const auto &e : edges) {
        if (e.u >= num_nodes || e.v >= num_nodes || e.u == e.v) {
            throw std::invalid_argument("max_weight_matching: bad edge endpoints.");
        }
    }
    BlossomSolver solver(num_nodes, edges, max_cardinality);
    return solver.solve();
}

MatchGraph::MatchGraph(size_t num_nodes) : boundary_(num_nodes, false) {
}

size_t MatchGraph::add_edge(size_t u, size_t v, int64_t weight) {
    if (u >= num_nodes() || v >= num_nodes()) {
        throw std::invalid_argument("MatchGraph::add_edge: node out of range.");
    }
    if (u == v) {
        throw std::invalid_argument("MatchGraph::add_edge: self-loop.");
    }
    if (weight < 0) {
        throw std::invalid_argument("MatchGraph::add_edge: negative weight.");
    }
    edges_.push_back({u, v, weight});
    return edges_.size() - 1;
}

void MatchGraph::set_boundary(size_t node, bool is_boundary) {
    boundary_.at(node) = is_boundary;
}

MatchResult mwpm(const MatchGraph &graph) {
    constexpr size_t kMaxNodes = 4000;
    size_t n = graph.num_nodes();
    if (n > kMaxNodes) {
        throw MatchingResourceError("mwpm: " + std::to_string(n) + " nodes exceeds the budget.");
    }
    // Keep the cheapest (then lowest-index) edge per node pair.
    std::map<std::pair<size_t, size_t>, size_t> best;
    const auto &edges = graph.edges();
    int64_t max_w = 0;
    for (size_t k = 0; k < edges.size(); k++) {
        auto key = std::minmax(edges[k].u, edges[k].v);
        auto it = best.find(key);
        if (it == best.end() || edges[k].weight < edges[it->second].weight) {
            best[key] = k;
        }
        max_w = std::max(max_w, edges[k].weight);
    }
    std::vector<size_t> boundary_nodes;
    for (size_t v = 0; v < n; v++) {
        if (graph.is_boundary(v)) {
            boundary_nodes.push_back(v);
        }
    }
    // Each boundary node gets an image node; images pair freely among themselves.
    size_t num_images = boundary_nodes.size();
    if ((n + num_images) % 2) {
        num_images++;
    }
    size_t total = n + num_images;
    std::vector<WeightedEdge> work;
    std::vector<int64_t> source;
    int64_t offset = max_w + 1;
    for (const auto &[key, k] : best) {
        work.push_back({key.first, key.second, 2 * (offset - edges[k].weight)});
        source.push_back((int64_t)k);
    }
    for (size_t a = 0; a < boundary_nodes.size(); a++) {
        work.push_back({boundary_nodes[a], n + a, 2 * offset});
        source.push_back(-1);
    }
    for (size_t a = 0; a < num_images; a++) {
        for (size_t b = a + 1; b < num_images; b++) {
            work.push_back({n + a, n + b, 2 * offset});
            source.push_back(-1);
        }
    }
    std::vector<int64_t> mate = max_weight_matching(total, work, true);
    std::map<std::pair<size_t, size_t>, size_t> work_index;
    for (size_t k = 0; k < work.size(); k++) {
        work_index[std::minmax(work[k].u, work[k].v)] = k;
    }
    MatchResult result;
    result.mate.assign(n, -1);
    for (size_t v = 0; v < n; v++) {
        int64_t m = mate[v];
        if (m < 0) {
            if (!graph.is_boundary(v)) {
                throw InfeasibleMatchingError("mwpm: no perfect matching covers node " + std::to_string(v) + ".");
            }
            continue;
        }
        if ((size_t)m > v || (size_t)m >= n) {
            continue;
        }
        size_t k = work_index.at(std::minmax(v, (size_t)m));
        int64_t src = source[k];
        if (src < 0) {
            continue;
        }
        result.mate[v] = m;
        result.mate[m] = (int64_t)v;
        result.edge_indices.push_back((size_t)src);
        result.weight += edges[src].weight;
    }
    for (size_t v = 0; v < n; v++) {
        if (!graph.is_boundary(v) && result.mate[v] < 0) {
            throw InfeasibleMatchingError("mwpm: no perfect matching covers node " + std::to_string(v) + ".");
        }
    }
    std::sort(result.edge_indices.begin(), result.edge_indices.end());
    return result;
}

}  // namespace singleshot
