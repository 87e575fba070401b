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


#include "singleshot/colex/builders.h"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace singleshot {

namespace {

using Point = std::array<int, 3>;

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

int floor_div(int a, int m) {
    return (a - floor_mod(a, m)) / m;
}

/// All-even points carry r/g by half their coordinate sum; all-odd points carry b/y.
int point_color(const Point &p) {
    int s = p[0] + p[1] + p[2];
    if (floor_mod(p[0], 2) == 0) {
        return floor_mod(s / 2, 2);
    }
    return 2 + floor_mod((s - 3) / 2, 2);
}

int dot(const Point &p, const Point &n) {
    return p[0] * n[0] + p[1] * n[1] + p[2] * n[2];
}

/// Result of placing a lattice point: nullopt if outside, else an internal
/// point (face = -1) with its canonical representative, or a boundary face.
struct Placement {
    int face = -1;
    Point canonical{};
};
using Placer = std::function<std::optional<Placement>(const Point &)>;

/// The 12 tetrahedra whose lowest even vertex is `a`: an even edge along an
/// axis plus two consecutive odd points of the square around its midpoint.
std::vector<std::array<Point, 4>> tets_at(const Point &a) {
    static const int SQUARE[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
    std::vector<std::array<Point, 4>> out;
    for (int i = 0; i < 3; i++) {
        int j = (i + 1) % 3;
        int k = (i + 2) % 3;
        Point b = a;
        b[i] += 2;
        Point sq[4];
        for (int s = 0; s < 4; s++) {
            sq[s] = a;
            sq[s][i] += 1;
            sq[s][j] += SQUARE[s][0];
            sq[s][k] += SQUARE[s][1];
        }
        for (int s = 0; s < 4; s++) {
            out.push_back({a, b, sq[s], sq[(s + 1) % 4]});
        }
    }
    return out;
}

DualComplex assemble(const std::string &family, const std::vector<Point> &anchors, const Placer &place, const std::vector<int> &face_colors) {
    using Key = std::tuple<bool, int, Point>;
    std::vector<std::array<Key, 4>> raw;
    std::map<Key, uint32_t> ids;
    for (const auto &a : anchors) {
        for (const auto &tet : tets_at(a)) {
            std::array<Key, 4> keys;
            bool inside = true;
            for (const auto &p : tet) {
                auto pl = place(p);
                if (!pl.has_value()) {
                    inside = false;
                    break;
                }
                int c = point_color(p);
                if (pl->face >= 0) {
                    if (face_colors[pl->face] != c) {
                        throw std::logic_error("Boundary plane meets a point of the wrong color.");
                    }
                    keys[c] = Key{true, pl->face, Point{}};
                } else {
                    if (point_color(pl->canonical) != c) {
                        throw std::logic_error("Canonical representative changes the color.");
                    }
                    keys[c] = Key{false, 0, pl->canonical};
                }
            }
            if (!inside) {
                continue;
            }
            for (const auto &k : keys) {
                ids.emplace(k, 0);
            }
            raw.push_back(keys);
        }
    }
    DualComplex out;
    out.family = family;
    uint32_t next = 0;
    for (auto &[key, id] : ids) {
        id = next++;
        const auto &[ext, face, p] = key;
        out.vertex_external.push_back(ext ? 1 : 0);
        out.vertex_color.push_back(uint8_t(ext ? face_colors[face] : point_color(p)));
    }
    for (const auto &keys : raw) {
        std::array<uint32_t, 4> t;
        for (int c = 0; c < NUM_COLORS; c++) {
            t[c] = ids.at(keys[c]);
        }
        out.tets.push_back(t);
    }
    std::sort(out.tets.begin(), out.tets.end());
    if (std::adjacent_find(out.tets.begin(), out.tets.end()) != out.tets.end()) {
        throw std::logic_error("Two tetrahedra share all four vertices.");
    }
    return out;
}

/// Boundary plane color from its offset along a {111} normal.
int plane_color(int offset) {
    static const int BY_OFFSET[4] = {0, 3, 1, 2};
    return BY_OFFSET[floor_mod(offset, 4)];
}

}  // namespace

DualComplex tetrahedral_complex(size_t d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("Tetrahedral colex needs an odd distance d >= 3, got " + std::to_string(d) + ".");
    }
    static const Point NORMALS[4] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    int m = int(d - 1) / 2;
    std::array<int, 4> offset;
    std::vector<int> colors;
    int total = 0;
    for (int f = 0; f < 4; f++) {
        offset[f] = f + 4 * ((m + f) / 4);
        colors.push_back(plane_color(offset[f]));
        total += offset[f];
    }
    Placer place = [&](const Point &p) -> std::optional<Placement> {
        Placement pl;
        pl.canonical = p;
        for (int f = 0; f < 4; f++) {
            int v = dot(p, NORMALS[f]);
            if (v > offset[f]) {
                return std::nullopt;
            }
            if (v == offset[f]) {
                if (pl.face >= 0) {
                    throw std::logic_error("Tetrahedron vertex lies on two boundary planes.");
                }
                pl.face = f;
            }
        }
        return pl;
    };
    int r = total + 2;
    r += r % 2;
    std::vector<Point> anchors;
    for (int x = -r; x <= r; x += 2) {
        for (int y = -r; y <= r; y += 2) {
            for (int z = -r; z <= r; z += 2) {
                anchors.push_back({x, y, z});
            }
        }
    }
    return assemble("tetrahedral", anchors, place, colors);
}

DualComplex torus_complex(size_t L) {
    if (L % 2) {
        throw std::invalid_argument("Closed 3-torus needs even L for a consistent 4-coloring, got " + std::to_string(L) + ".");
    }
    if (L < 4) {
        throw std::invalid_argument("Closed 3-torus needs L >= 4, got " + std::to_string(L) + ".");
    }
    int period = int(2 * L);
    Placer place = [period](const Point &p) -> std::optional<Placement> {
        Placement pl;
        for (int i = 0; i < 3; i++) {
            pl.canonical[i] = floor_mod(p[i], period);
        }
        return pl;
    };
    std::vector<Point> anchors;
    for (int x = 0; x < period; x += 2) {
        for (int y = 0; y < period; y += 2) {
            for (int z = 0; z < period; z += 2) {
                anchors.push_back({x, y, z});
            }
        }
    }
    return assemble("torus", anchors, place, {});
}

DualComplex frozen_slab_complex(size_t L, size_t layers) {
    if (L < 4) {
        throw std::invalid_argument("Frozen slab needs L >= 4, got " + std::to_string(L) + ".");
    }
    if (layers < 1) {
        throw std::invalid_argument("Frozen slab needs at least one layer.");
    }
    int period = int(2 * L);
    int top = int(4 * layers);
    // In-plane periods (-P, P, 0) and (0, -P, P) keep the coordinate sum fixed.
    auto canonical = [period](Point p) {
        int k = floor_div(p[2], period);
        p[2] -= k * period;
        p[1] += k * period;
        k = floor_div(p[1], period);
        p[1] -= k * period;
        p[0] += k * period;
        return p;
    };
    Placer place = [&](const Point &p) -> std::optional<Placement> {
        int s = p[0] + p[1] + p[2];
        if (s < 0 || s > top) {
            return std::nullopt;
        }
        Placement pl;
        if (s == 0) {
            pl.face = 0;
        } else if (s == top) {
            pl.face = 1;
        } else {
            pl.canonical = canonical(p);
        }
        return pl;
    };
    std::vector<Point> anchors;
    for (int y = 0; y < period; y += 2) {
        for (int z = 0; z < period; z += 2) {
            for (int x = -2 * period - 4; x <= top + 4; x += 2) {
                anchors.push_back({x, y, z});
            }
        }
    }
    return assemble("frozen-slab", anchors, place, {plane_color(0), plane_color(top)});
}

DualComplex glue_with_mirror(const DualComplex &complex) {
    size_t nv = complex.vertex_color.size();
    std::vector<uint32_t> internal;
    std::vector<uint32_t> external;
    for (uint32_t v = 0; v < nv; v++) {
        (complex.vertex_external[v] ? external : internal).push_back(v);
    }
    if (external.empty()) {
        throw std::invalid_argument("Gluing needs a complex with boundary.");
    }
    std::vector<uint32_t> first(nv);
    std::vector<uint32_t> second(nv);
    DualComplex out;
    out.family = complex.family + "-glued";
    for (int copy = 0; copy < 2; copy++) {
        for (uint32_t v : internal) {
            (copy ? second : first)[v] = uint32_t(out.vertex_color.size());
            out.vertex_color.push_back(complex.vertex_color[v]);
            out.vertex_external.push_back(0);
        }
    }
    for (uint32_t v : external) {
        first[v] = second[v] = uint32_t(out.vertex_color.size());
        out.vertex_color.push_back(complex.vertex_color[v]);
        out.vertex_external.push_back(0);
    }
    for (const auto *map : {&first, &second}) {
        for (const auto &t : complex.tets) {
            out.tets.push_back({(*map)[t[0]], (*map)[t[1]], (*map)[t[2]], (*map)[t[3]]});
        }
    }
    return out;
}

Colex build_tetrahedral(size_t d) {
    return colex_from_complex(tetrahedral_complex(d));
}

Colex build_closed_3torus(size_t L) {
    return colex_from_complex(torus_complex(L));
}

Colex build_frozen_slab(size_t L, size_t layers) {
    return colex_from_complex(frozen_slab_complex(L, layers));
}

Colex build_glued_tetrahedral(size_t d) {
    return colex_from_complex(glue_with_mirror(tetrahedral_complex(d)));
}

Colex build_colex_family(const std::string &family, size_t size) {
    if (family == "tetrahedral") {
        return build_tetrahedral(size);
    }
    if (family == "torus") {
        return build_closed_3torus(size);
    }
    if (family == "frozen-slab") {
        return build_frozen_slab(size, 1);
    }
    if (family == "glued-tetrahedral") {
        return build_glued_tetrahedral(size);
    }
    throw std::invalid_argument("Unknown colex family '" + family + "'.");
}

}  // namespace singleshot
