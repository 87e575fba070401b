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


#include "singleshot/colex/colex.h"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "singleshot/pauli/code_families.h"

namespace singleshot {

namespace {

constexpr char COLOR_LETTERS[NUM_COLORS] = {'r', 'g', 'b', 'y'};
constexpr int SCHEMA_VERSION = 1;

std::vector<int> colors_of(ColorSet s) {
    std::vector<int> out;
    for (int c = 0; c < NUM_COLORS; c++) {
        if (s & color_bit(c)) {
            out.push_back(c);
        }
    }
    return out;
}

bool strictly_sorted_below(const std::vector<uint32_t> &v, size_t limit) {
    for (size_t k = 0; k < v.size(); k++) {
        if (v[k] >= limit || (k > 0 && v[k - 1] >= v[k])) {
            return false;
        }
    }
    return true;
}

std::vector<uint32_t> intersect(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    std::vector<uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Free iff every other color has an odd number of odd borders; frozen iff there are no odd borders.
std::optional<RegionKind> classify_region(size_t r, const std::vector<ColexRegion> &regions, const std::vector<ColexBorder> &borders) {
    std::array<int, NUM_COLORS> odd_count{};
    bool any_odd = false;
    for (const auto &b : borders) {
        if (!b.odd || (b.regions[0] != r && b.regions[1] != r)) {
            continue;
        }
        size_t other = b.regions[0] == r ? b.regions[1] : b.regions[0];
        odd_count[regions[other].color]++;
        any_odd = true;
    }
    bool free = true;
    for (int c = 0; c < NUM_COLORS; c++) {
        if (c != regions[r].color && odd_count[c] % 2 == 0) {
            free = false;
        }
    }
    if (free) {
        return RegionKind::FREE;
    }
    if (!any_odd) {
        return RegionKind::FROZEN;
    }
    return std::nullopt;
}

ValidationReport failure(std::string message, std::optional<size_t> vertex = std::nullopt, std::optional<ColorSet> label = std::nullopt) {
    ValidationReport r;
    r.ok = false;
    r.message = std::move(message);
    r.vertex = vertex;
    r.label = label;
    return r;
}

}  // namespace

std::string color_set_name(ColorSet s) {
    std::string out;
    for (int c : colors_of(s)) {
        out += COLOR_LETTERS[c];
    }
    return out;
}

ColorSet parse_color_set(const std::string &text) {
    ColorSet s = 0;
    for (char ch : text) {
        const char *hit = std::find(COLOR_LETTERS, COLOR_LETTERS + NUM_COLORS, ch);
        if (hit == COLOR_LETTERS + NUM_COLORS) {
            throw std::invalid_argument("Unknown color letter '" + std::string(1, ch) + "'.");
        }
        ColorSet bit = color_bit(int(hit - COLOR_LETTERS));
        if (s & bit) {
            throw std::invalid_argument("Repeated color letter '" + std::string(1, ch) + "'.");
        }
        s |= bit;
    }
    return s;
}

Colex colex_from_complex(const DualComplex &complex) {
    size_t nv = complex.vertex_color.size();
    if (complex.vertex_external.size() != nv) {
        throw std::invalid_argument("Complex vertex tables have different lengths.");
    }
    for (size_t t = 0; t < complex.tets.size(); t++) {
        for (int c = 0; c < NUM_COLORS; c++) {
            uint32_t v = complex.tets[t][c];
            if (v >= nv || complex.vertex_color[v] != c) {
                throw std::invalid_argument("Tetrahedron " + std::to_string(t) + " has a wrong vertex for color " +
                                            color_set_name(color_bit(c)) + ".");
            }
        }
    }
    std::vector<int64_t> slot(nv, -1);
    size_t num_internal = 0;
    size_t num_external = 0;
    for (size_t v = 0; v < nv; v++) {
        slot[v] = complex.vertex_external[v] ? int64_t(num_external++) : int64_t(num_internal++);
    }

    Colex out;
    out.family = complex.family;
    out.vertex_context.assign(complex.tets.size(), 0);
    out.cells.resize(num_internal);
    out.regions.resize(num_external);
    for (size_t v = 0; v < nv; v++) {
        if (complex.vertex_external[v]) {
            out.regions[slot[v]].color = complex.vertex_color[v];
        } else {
            out.cells[slot[v]].label = complement(color_bit(complex.vertex_color[v]));
        }
    }

    std::map<std::vector<uint32_t>, std::vector<uint32_t>> faces;
    for (uint32_t t = 0; t < complex.tets.size(); t++) {
        const auto &tet = complex.tets[t];
        for (int c = 0; c < NUM_COLORS; c++) {
            uint32_t v = tet[c];
            if (complex.vertex_external[v]) {
                out.vertex_context[t] |= color_bit(c);
                out.regions[slot[v]].vertices.push_back(t);
            } else {
                out.cells[slot[v]].vertices.push_back(t);
            }
        }
        for (ColorSet face = 1; face < ALL_COLORS; face++) {
            if (color_count(face) < 2) {
                continue;
            }
            std::vector<uint32_t> key;
            for (int c : colors_of(face)) {
                key.push_back(tet[c]);
            }
            key.push_back(face);
            faces[key].push_back(t);
        }
    }
    for (size_t v = 0; v < nv; v++) {
        bool empty = complex.vertex_external[v] ? out.regions[slot[v]].vertices.empty() : out.cells[slot[v]].vertices.empty();
        if (empty) {
            throw std::invalid_argument("Complex vertex " + std::to_string(v) + " lies in no tetrahedron.");
        }
    }

    for (auto &[key, tets] : faces) {
        ColorSet face = ColorSet(key.back());
        std::vector<uint32_t> verts(key.begin(), key.end() - 1);
        bool all_external = std::all_of(verts.begin(), verts.end(), [&](uint32_t v) {
            return complex.vertex_external[v];
        });
        if (!all_external) {
            ColexCell cell{complement(face), tets};
            (color_count(face) == 2 ? out.plaquettes : out.edges).push_back(std::move(cell));
            continue;
        }
        if (color_count(face) == 2) {
            ColexBorder b;
            b.regions = {uint32_t(slot[verts[0]]), uint32_t(slot[verts[1]])};
            std::sort(b.regions.begin(), b.regions.end());
            b.label = face;
            b.odd = tets.size() % 2 == 1;
            b.vertices = tets;
            out.borders.push_back(std::move(b));
        } else {
            ColexCorner k;
            k.regions = {uint32_t(slot[verts[0]]), uint32_t(slot[verts[1]]), uint32_t(slot[verts[2]])};
            std::sort(k.regions.begin(), k.regions.end());
            k.label = face;
            k.vertices = tets;
            out.corners.push_back(std::move(k));
        }
    }
    auto by_regions = [](const auto &a, const auto &b) {
        return a.regions < b.regions;
    };
    std::sort(out.borders.begin(), out.borders.end(), by_regions);
    std::sort(out.corners.begin(), out.corners.end(), by_regions);

    for (size_t r = 0; r < out.regions.size(); r++) {
        auto kind = classify_region(r, out.regions, out.borders);
        if (!kind.has_value()) {
            throw std::invalid_argument("Region " + std::to_string(r) + " is neither free nor frozen.");
        }
        out.regions[r].kind = *kind;
    }
    return out;
}

ValidationReport validate(const Colex &colex) {
    size_t nv = colex.num_vertices();
    struct Family {
        const std::vector<ColexCell> *list;
        const char *name;
        int colors;
    };
    std::vector<std::array<uint16_t, 16>> count(nv);
    std::vector<std::array<int64_t, 16>> plaquette_at(nv);
    for (auto &row : plaquette_at) {
        row.fill(-1);
    }
    for (const auto &fam : {Family{&colex.edges, "edge", 1}, Family{&colex.plaquettes, "plaquette", 2}, Family{&colex.cells, "cell", 3}}) {
        for (size_t k = 0; k < fam.list->size(); k++) {
            const auto &cell = (*fam.list)[k];
            std::string name = std::string(fam.name) + " " + std::to_string(k);
            if (cell.label == 0 || (cell.label & ~ALL_COLORS) || color_count(cell.label) != fam.colors) {
                return failure(name + " has label '" + color_set_name(cell.label) + "' with the wrong number of colors.");
            }
            if (cell.vertices.empty() || !strictly_sorted_below(cell.vertices, nv)) {
                return failure(name + " has an empty, unsorted or out-of-range vertex list.");
            }
            if (fam.colors == 1 && cell.vertices.size() != 2) {
                return failure(name + " does not have exactly two endpoints.", cell.vertices[0], cell.label);
            }
            if (fam.colors == 2 && cell.vertices.size() % 2) {
                return failure(name + " has an odd number of vertices.", cell.vertices[0], cell.label);
            }
            for (uint32_t v : cell.vertices) {
                count[v][cell.label]++;
                if (fam.colors == 2) {
                    plaquette_at[v][cell.label] = int64_t(k);
                }
            }
        }
    }
    if (colex.vertex_context.size() != nv) {
        return failure("Vertex context table has the wrong length.");
    }
    for (size_t v = 0; v < nv; v++) {
        ColorSet ctx = colex.vertex_context[v];
        if (ctx & ~ALL_COLORS) {
            return failure("vertex " + std::to_string(v) + " has an invalid boundary color set.", v);
        }
        for (ColorSet kappa = 1; kappa < ALL_COLORS; kappa++) {
            bool expected = color_count(kappa | ctx) != NUM_COLORS;
            std::string where_text = "vertex " + std::to_string(v);
            std::string k_name = color_set_name(kappa);
            if (expected && count[v][kappa] == 0) {
                return failure(where_text + " lies in no " + k_name + "-cell.", v, kappa);
            }
            if (count[v][kappa] > 1) {
                return failure(where_text + " lies in more than one " + k_name + "-cell.", v, kappa);
            }
            if (!expected && count[v][kappa] == 1) {
                return failure(where_text + " lies in a " + k_name + "-cell although its boundary colors complete it.", v, kappa);
            }
        }
    }

    std::vector<ColorSet> seen(nv, 0);
    std::vector<std::vector<uint32_t>> regions_at(nv);
    for (size_t r = 0; r < colex.regions.size(); r++) {
        const auto &reg = colex.regions[r];
        std::string name = "region " + std::to_string(r);
        if (reg.color < 0 || reg.color >= NUM_COLORS) {
            return failure(name + " has an invalid color.");
        }
        if (reg.vertices.empty() || !strictly_sorted_below(reg.vertices, nv)) {
            return failure(name + " has an empty, unsorted or out-of-range vertex list.");
        }
        for (uint32_t v : reg.vertices) {
            if (seen[v] & color_bit(reg.color)) {
                return failure("vertex " + std::to_string(v) + " lies in two regions of the same color.", v, color_bit(reg.color));
            }
            seen[v] |= color_bit(reg.color);
            regions_at[v].push_back(uint32_t(r));
        }
    }
    for (size_t v = 0; v < nv; v++) {
        if (seen[v] != colex.vertex_context[v]) {
            return failure("vertex " + std::to_string(v) + " has boundary colors '" + color_set_name(colex.vertex_context[v]) +
                               "' but lies in regions colored '" + color_set_name(seen[v]) + "'.",
                           v);
        }
    }
    for (size_t r = 0; r < colex.regions.size(); r++) {
        const auto &reg = colex.regions[r];
        std::vector<bool> inside(nv, false);
        for (uint32_t v : reg.vertices) {
            inside[v] = true;
        }
        for (uint32_t v : reg.vertices) {
            for (ColorSet kappa = 1; kappa < ALL_COLORS; kappa++) {
                if (color_count(kappa) != 2 || (kappa & color_bit(reg.color)) ||
                    color_count(kappa | colex.vertex_context[v]) == NUM_COLORS) {
                    continue;
                }
                int64_t p = plaquette_at[v][kappa];
                bool covered = p >= 0 && std::all_of(colex.plaquettes[p].vertices.begin(), colex.plaquettes[p].vertices.end(),
                                                     [&](uint32_t u) {
                                                         return inside[u];
                                                     });
                if (!covered) {
                    return failure("region " + std::to_string(r) + " is not a union of its " + color_set_name(kappa) + "-plaquettes.", v, kappa);
                }
            }
        }
    }

    std::set<std::array<uint32_t, 2>> listed_borders;
    for (size_t k = 0; k < colex.borders.size(); k++) {
        const auto &b = colex.borders[k];
        std::string name = "border " + std::to_string(k);
        if (b.regions[0] >= b.regions[1] || b.regions[1] >= colex.regions.size()) {
            return failure(name + " has invalid region indices.");
        }
        const auto &ra = colex.regions[b.regions[0]];
        const auto &rb = colex.regions[b.regions[1]];
        if (ra.color == rb.color || b.label != (color_bit(ra.color) | color_bit(rb.color))) {
            return failure(name + " has label '" + color_set_name(b.label) + "' inconsistent with its regions.");
        }
        if (b.vertices != intersect(ra.vertices, rb.vertices) || b.vertices.empty()) {
            return failure(name + " vertices differ from the intersection of its regions.");
        }
        if (b.odd != (b.vertices.size() % 2 == 1)) {
            return failure(name + " has the wrong parity flag.");
        }
        listed_borders.insert(b.regions);
    }
    std::set<std::array<uint32_t, 3>> listed_corners;
    for (size_t k = 0; k < colex.corners.size(); k++) {
        const auto &c = colex.corners[k];
        std::string name = "corner " + std::to_string(k);
        if (c.regions[0] >= c.regions[1] || c.regions[1] >= c.regions[2] || c.regions[2] >= colex.regions.size()) {
            return failure(name + " has invalid region indices.");
        }
        ColorSet label = 0;
        for (uint32_t r : c.regions) {
            label |= color_bit(colex.regions[r].color);
        }
        if (color_count(label) != 3 || c.label != label) {
            return failure(name + " has label '" + color_set_name(c.label) + "' inconsistent with its regions.");
        }
        auto common = intersect(intersect(colex.regions[c.regions[0]].vertices, colex.regions[c.regions[1]].vertices),
                                colex.regions[c.regions[2]].vertices);
        if (c.vertices != common || common.empty()) {
            return failure(name + " vertices differ from the intersection of its regions.");
        }
        listed_corners.insert(c.regions);
    }
    for (size_t v = 0; v < nv; v++) {
        const auto &rs = regions_at[v];
        for (size_t i = 0; i < rs.size(); i++) {
            for (size_t j = i + 1; j < rs.size(); j++) {
                if (!listed_borders.count({rs[i], rs[j]})) {
                    return failure("vertex " + std::to_string(v) + " lies in two regions without a listed border.", v);
                }
                for (size_t k = j + 1; k < rs.size(); k++) {
                    if (!listed_corners.count({rs[i], rs[j], rs[k]})) {
                        return failure("vertex " + std::to_string(v) + " lies in three regions without a listed corner.", v);
                    }
                }
            }
        }
    }
    for (size_t r = 0; r < colex.regions.size(); r++) {
        auto kind = classify_region(r, colex.regions, colex.borders);
        if (kind != colex.regions[r].kind) {
            return failure("region " + std::to_string(r) + " has a free/frozen flag inconsistent with its odd borders.");
        }
    }
    return ValidationReport{};
}

DualLattice::DualLattice(const Colex &colex) {
    num_internal_ = colex.cells.size();
    size_t nd = num_internal_ + colex.regions.size();
    size_t nq = colex.num_vertices();
    vertex_color_.resize(nd);
    frozen_.resize(nd);
    vertex_qubits_.resize(nd);
    vertex_edges_.resize(nd);
    for (size_t i = 0; i < num_internal_; i++) {
        vertex_color_[i] = lowest_color(complement(colex.cells[i].label));
        frozen_[i] = true;
        vertex_qubits_[i] = colex.cells[i].vertices;
    }
    for (size_t r = 0; r < colex.regions.size(); r++) {
        vertex_color_[num_internal_ + r] = colex.regions[r].color;
        frozen_[num_internal_ + r] = colex.regions[r].kind == RegionKind::FROZEN;
        vertex_qubits_[num_internal_ + r] = colex.regions[r].vertices;
    }
    constexpr uint32_t NONE = UINT32_MAX;
    qubit_vertices_.assign(nq, {NONE, NONE, NONE, NONE});
    for (size_t v = 0; v < nd; v++) {
        for (uint32_t q : vertex_qubits_[v]) {
            if (q >= nq || qubit_vertices_[q][vertex_color_[v]] != NONE) {
                throw std::invalid_argument("Colex vertex " + std::to_string(q) + " is covered twice by color " +
                                            color_set_name(color_bit(vertex_color_[v])) + ".");
            }
            qubit_vertices_[q][vertex_color_[v]] = uint32_t(v);
        }
    }
    for (size_t q = 0; q < nq; q++) {
        for (int c = 0; c < NUM_COLORS; c++) {
            if (qubit_vertices_[q][c] == NONE) {
                throw std::invalid_argument("Colex vertex " + std::to_string(q) + " has no cell or region of color " +
                                            color_set_name(color_bit(c)) + ".");
            }
        }
    }
    for (size_t p = 0; p < colex.plaquettes.size(); p++) {
        const auto &pl = colex.plaquettes[p];
        auto ends = colors_of(complement(pl.label));
        if (ends.size() != 2 || pl.vertices.empty()) {
            throw std::invalid_argument("Plaquette " + std::to_string(p) + " is malformed.");
        }
        DualEdge e;
        e.u = qubit_vertices_[pl.vertices[0]][ends[0]];
        e.v = qubit_vertices_[pl.vertices[0]][ends[1]];
        e.label = pl.label;
        for (uint32_t q : pl.vertices) {
            if (qubit_vertices_[q][ends[0]] != e.u || qubit_vertices_[q][ends[1]] != e.v) {
                throw std::invalid_argument("Plaquette " + std::to_string(p) + " does not lie in a single pair of cells.");
            }
        }
        edges_.push_back(e);
        edge_qubits_.push_back(pl.vertices);
        vertex_edges_[e.u].push_back(uint32_t(p));
        vertex_edges_[e.v].push_back(uint32_t(p));
    }
}

DualComplex DualLattice::complex(const std::string &family) const {
    DualComplex out;
    out.family = family;
    for (size_t v = 0; v < num_vertices(); v++) {
        out.vertex_color.push_back(uint8_t(vertex_color_[v]));
        out.vertex_external.push_back(external(v) ? 1 : 0);
    }
    out.tets = qubit_vertices_;
    return out;
}

DualLattice dualize(const Colex &colex) {
    auto report = validate(colex);
    if (!report.ok) {
        throw std::invalid_argument("Invalid colex: " + report.message);
    }
    return DualLattice(colex);
}

std::vector<size_t> stabilizer_dual_vertices(const Colex &colex) {
    size_t n = colex.num_vertices();
    std::vector<size_t> out;
    Gf2Span span(n, colex.cells.size() + colex.regions.size());
    for (size_t i = 0; i < colex.cells.size(); i++) {
        span.add(BitVec::from_indices(n, std::vector<size_t>(colex.cells[i].vertices.begin(), colex.cells[i].vertices.end())));
        out.push_back(i);
    }
    for (size_t r = 0; r < colex.regions.size(); r++) {
        const auto &reg = colex.regions[r];
        if (reg.kind != RegionKind::FROZEN) {
            continue;
        }
        if (span.add(BitVec::from_indices(n, std::vector<size_t>(reg.vertices.begin(), reg.vertices.end())))) {
            out.push_back(colex.cells.size() + r);
        }
    }
    return out;
}

SubsystemCode derive_code(const Colex &colex) {
    auto report = validate(colex);
    if (!report.ok) {
        throw std::invalid_argument("Invalid colex: " + report.message);
    }
    size_t n = colex.num_vertices();
    auto support = [&](const std::vector<uint32_t> &v) {
        return std::vector<size_t>(v.begin(), v.end());
    };
    std::vector<PauliOperator> gauges;
    for (const auto &p : colex.plaquettes) {
        gauges.push_back(PauliOperator::x_on(n, support(p.vertices)));
    }
    for (const auto &p : colex.plaquettes) {
        gauges.push_back(PauliOperator::z_on(n, support(p.vertices)));
    }
    std::vector<std::vector<size_t>> stab_supports;
    for (size_t d : stabilizer_dual_vertices(colex)) {
        stab_supports.push_back(d < colex.cells.size() ? support(colex.cells[d].vertices)
                                                       : support(colex.regions[d - colex.cells.size()].vertices));
    }
    std::vector<PauliOperator> stabs;
    for (const auto &s : stab_supports) {
        stabs.push_back(PauliOperator::x_on(n, s));
    }
    for (const auto &s : stab_supports) {
        stabs.push_back(PauliOperator::z_on(n, s));
    }
    auto structure = find_logical_structure(n, stabs, gauges);
    for (auto &extra : structure.extra_stabilizers) {
        stabs.push_back(std::move(extra));
    }
    std::stable_partition(stabs.begin(), stabs.end(), [](const PauliOperator &p) {
        return p.is_x_type();
    });
    auto logicals = std::move(structure.pairs);
    if (logicals.size() == 2) {
        for (const auto &reg : colex.regions) {
            if (reg.kind == RegionKind::FREE) {
                auto x = PauliOperator::x_on(n, support(reg.vertices));
                auto z = PauliOperator::z_on(n, support(reg.vertices));
                if (!commutes(x, z)) {
                    logicals = {x, z};
                }
                break;
            }
        }
    }
    return SubsystemCode(n, std::move(stabs), std::move(gauges), std::move(logicals));
}

namespace {

using nlohmann::json;

json cell_json(const ColexCell &c) {
    return json{{"label", color_set_name(c.label)}, {"vertices", c.vertices}};
}

const json &field(const json &obj, const std::string &key, const std::string &path) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw std::invalid_argument("Missing field '" + path + "." + key + "'.");
    }
    return obj.at(key);
}

template <typename T>
T get_as(const json &obj, const std::string &key, const std::string &path) {
    try {
        return field(obj, key, path).get<T>();
    } catch (const json::exception &) {
        throw std::invalid_argument("Field '" + path + "." + key + "' has the wrong type.");
    }
}

ColorSet get_colors(const json &obj, const std::string &key, const std::string &path) {
    try {
        return parse_color_set(get_as<std::string>(obj, key, path));
    } catch (const std::invalid_argument &ex) {
        throw std::invalid_argument("Field '" + path + "." + key + "': " + ex.what());
    }
}

const json &array_field(const json &obj, const std::string &key, const std::string &path) {
    const json &a = field(obj, key, path);
    if (!a.is_array()) {
        throw std::invalid_argument("Field '" + path + "." + key + "' must be an array.");
    }
    return a;
}

std::vector<ColexCell> cells_from(const json &doc, const std::string &key) {
    std::vector<ColexCell> out;
    const json &a = array_field(doc, key, "$");
    for (size_t k = 0; k < a.size(); k++) {
        std::string path = "$." + key + "[" + std::to_string(k) + "]";
        out.push_back(ColexCell{get_colors(a[k], "label", path), get_as<std::vector<uint32_t>>(a[k], "vertices", path)});
    }
    return out;
}

}  // namespace

std::string colex_to_json(const Colex &colex) {
    json doc;
    doc["schema_version"] = SCHEMA_VERSION;
    doc["family"] = colex.family;
    json ctx = json::array();
    for (ColorSet c : colex.vertex_context) {
        ctx.push_back(color_set_name(c));
    }
    doc["vertex_context"] = ctx;
    for (auto [key, list] : {std::pair{"edges", &colex.edges}, std::pair{"plaquettes", &colex.plaquettes}, std::pair{"cells", &colex.cells}}) {
        json a = json::array();
        for (const auto &c : *list) {
            a.push_back(cell_json(c));
        }
        doc[key] = a;
    }
    json regions = json::array();
    for (const auto &r : colex.regions) {
        regions.push_back({{"color", color_set_name(color_bit(r.color))},
                           {"kind", r.kind == RegionKind::FREE ? "free" : "frozen"},
                           {"vertices", r.vertices}});
    }
    doc["regions"] = regions;
    json borders = json::array();
    for (const auto &b : colex.borders) {
        borders.push_back({{"regions", b.regions}, {"label", color_set_name(b.label)}, {"odd", b.odd}, {"vertices", b.vertices}});
    }
    doc["borders"] = borders;
    json corners = json::array();
    for (const auto &c : colex.corners) {
        corners.push_back({{"regions", c.regions}, {"label", color_set_name(c.label)}, {"vertices", c.vertices}});
    }
    doc["corners"] = corners;
    return doc.dump(1);
}

Colex colex_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &ex) {
        throw std::invalid_argument(std::string("Colex document is not valid JSON: ") + ex.what());
    }
    int version = get_as<int>(doc, "schema_version", "$");
    if (version != SCHEMA_VERSION) {
        throw std::invalid_argument("Unsupported colex schema_version " + std::to_string(version) + ".");
    }
    Colex out;
    out.family = get_as<std::string>(doc, "family", "$");
    const json &ctx = array_field(doc, "vertex_context", "$");
    for (size_t k = 0; k < ctx.size(); k++) {
        if (!ctx[k].is_string()) {
            throw std::invalid_argument("Field '$.vertex_context[" + std::to_string(k) + "]' must be a string.");
        }
        try {
            out.vertex_context.push_back(parse_color_set(ctx[k].get<std::string>()));
        } catch (const std::invalid_argument &ex) {
            throw std::invalid_argument("Field '$.vertex_context[" + std::to_string(k) + "]': " + ex.what());
        }
    }
    out.edges = cells_from(doc, "edges");
    out.plaquettes = cells_from(doc, "plaquettes");
    out.cells = cells_from(doc, "cells");
    const json &regions = array_field(doc, "regions", "$");
    for (size_t k = 0; k < regions.size(); k++) {
        std::string path = "$.regions[" + std::to_string(k) + "]";
        ColexRegion r;
        ColorSet c = get_colors(regions[k], "color", path);
        if (color_count(c) != 1) {
            throw std::invalid_argument("Field '" + path + ".color' must be a single color.");
        }
        r.color = lowest_color(c);
        std::string kind = get_as<std::string>(regions[k], "kind", path);
        if (kind != "free" && kind != "frozen") {
            throw std::invalid_argument("Field '" + path + ".kind' must be 'free' or 'frozen'.");
        }
        r.kind = kind == "free" ? RegionKind::FREE : RegionKind::FROZEN;
        r.vertices = get_as<std::vector<uint32_t>>(regions[k], "vertices", path);
        out.regions.push_back(std::move(r));
    }
    const json &borders = array_field(doc, "borders", "$");
    for (size_t k = 0; k < borders.size(); k++) {
        std::string path = "$.borders[" + std::to_string(k) + "]";
        ColexBorder b;
        b.regions = get_as<std::array<uint32_t, 2>>(borders[k], "regions", path);
        b.label = get_colors(borders[k], "label", path);
        b.odd = get_as<bool>(borders[k], "odd", path);
        b.vertices = get_as<std::vector<uint32_t>>(borders[k], "vertices", path);
        out.borders.push_back(std::move(b));
    }
    const json &corners = array_field(doc, "corners", "$");
    for (size_t k = 0; k < corners.size(); k++) {
        std::string path = "$.corners[" + std::to_string(k) + "]";
        ColexCorner c;
        c.regions = get_as<std::array<uint32_t, 3>>(corners[k], "regions", path);
        c.label = get_colors(corners[k], "label", path);
        c.vertices = get_as<std::vector<uint32_t>>(corners[k], "vertices", path);
        out.corners.push_back(std::move(c));
    }
    return out;
}

}  // namespace singleshot
