#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "perm.hpp"

namespace diopkit::trees {

// Directed (m,n)-tree: every vertex has at least one outgoing and one
// incoming edge; n labeled leaves (open input slots), m labeled roots (open
// output slots). The unit (1,1)-strand has no vertices at all.
//
// Orientation of drawings/flow: inputs enter at leaves, results exit at
// roots. An internal edge records (src vertex, src out-slot) feeding
// (dst vertex, dst in-slot); dst is on the root side of src.

struct Shape {
    int out = 0; // number of outgoing slots
    int in = 0;  // number of incoming slots
    int weight() const { return out + in - 2; }
    bool operator==(const Shape& o) const { return out == o.out && in == o.in; }
    bool operator<(const Shape& o) const {
        return out != o.out ? out < o.out : in < o.in;
    }
};

struct Port {
    int v = -1;    // vertex id, -1 for the unit strand pass-through
    int slot = -1; // slot index within the vertex
    bool operator==(const Port& o) const { return v == o.v && slot == o.slot; }
};

struct Edge {
    int src_v, src_slot; // outgoing slot of src
    int dst_v, dst_slot; // incoming slot of dst
    bool operator==(const Edge& o) const {
        return src_v == o.src_v && src_slot == o.src_slot && dst_v == o.dst_v &&
               dst_slot == o.dst_slot;
    }
};

struct DiTree {
    std::vector<Shape> verts;
    std::vector<Edge> edges;  // discovery order when canonical
    std::vector<Port> leaves; // leaves[k] = port of leaf with label k (0-based)
    std::vector<Port> roots;

    int n_leaves() const { return static_cast<int>(leaves.size()); }
    int n_roots() const { return static_cast<int>(roots.size()); }
    int n_verts() const { return static_cast<int>(verts.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }
    bool is_unit() const { return verts.empty(); }
    int weight() const { return n_roots() + n_leaves() - 2; }

    static DiTree unit();
    static DiTree corolla(int m, int n); // single vertex, roots/leaves by slot

    bool operator==(const DiTree& o) const;
    bool operator<(const DiTree& o) const; // lexicographic on encoding-relevant data

    void validate() const; // tree axioms; throws on malformed input
};

// Conversion data produced by canonicalization: how the input's vertices,
// slots and edge list map onto the canonical output.
struct CanonCert {
    std::vector<int> vmap;                       // old vertex id -> new vertex id
    std::vector<Perm> out_slot_perm;             // per old vertex: old out slot -> new out slot
    std::vector<Perm> in_slot_perm;              // per old vertex: old in slot -> new in slot
    std::vector<int> emap;                       // old edge position -> new edge position
    int edge_sign = 1;                           // parity of emap
};

// Deterministic canonical form. Traversal starts at the vertex holding root 1
// and descends into neighbor subtrees ordered by their smallest reachable
// boundary label (leaves before roots). Within a vertex, incoming slots hold
// internal edges in discovery order followed by leaves in label order;
// outgoing slots likewise.
DiTree canonicalize(const DiTree& t, CanonCert* cert = nullptr);
bool is_canonical(const DiTree& t);

// Stable text encoding of a canonical tree; used for hashing, cache keys and
// debug dumps. Format:
//   m,n;shapes o:i ...;edges s.a>d.b ...;leaves v.s ...;roots v.s ...
std::string encode(const DiTree& t);

// graft(t1, i, j, t2): joins output j of t2 to input i of t1 (0-based slots).
// Composite labels: t2's leaves occupy the block starting at t1's leaf i;
// t1's roots occupy the block starting at t2's root j. Result is canonical.
DiTree graft(const DiTree& t1, int i, int j, const DiTree& t2, CanonCert* cert = nullptr,
             DiTree* raw_out = nullptr);

// Relabel by (pi on roots, sigma acting on the right on leaves): the root
// labeled r becomes pi(r); the leaf labeled l becomes sigma^{-1}(l).
DiTree relabel(const DiTree& t, const Perm& pi, const Perm& sigma, CanonCert* cert = nullptr);

struct Contraction {
    DiTree result;          // canonical
    int merged_vertex;      // id in result
    int sign;               // parity placing the contracted edge first
    CanonCert cert;         // from the raw merged tree to the canonical result
    std::vector<int> vmap;  // original vertex id -> result vertex id (-1 for the two merged ones... both map to merged_vertex)
    std::vector<int> emap;  // original edge pos -> result edge pos (-1 for contracted edge)
    // Slot bookkeeping of the raw merged vertex: the merged vertex's raw
    // out-slots are (src's out slots minus the contracted one, in src order)
    // then dst's out slots; raw in-slots are dst's in slots minus the
    // contracted one (dst order) then src's in slots.
    // (src = edge source = leaf-side vertex, dst = root-side vertex.)
};

// Contract an internal edge (by position in t.edges). t must be canonical.
Contraction contract_edge(const DiTree& t, int edge_pos);

// Exhaustive enumeration of canonical (m,n)-trees whose vertex shapes all
// belong to `shapes`. Includes the unit strand only if (m,n)=(1,1) and
// include_unit is set. Vertex count is bounded by the weight identity.
std::vector<DiTree> enumerate_trees(int m, int n, const std::vector<Shape>& shapes,
                                    bool include_unit = false);

// All shapes of valency >= 3 that can occur in an (m,n)-tree.
std::vector<Shape> reduced_shapes(int m, int n);
// Reduced (m,n)-trees with a given number of internal edges.
std::vector<DiTree> enumerate_reduced_trees(int m, int n, int internal_edges);

// Level functions: surjective maps Vert -> {1..N} that are monotone along
// flow (if v is on the root side of w then level(v) <= level(w)). Level 1 is
// the root side. require_saturated[i] (0-based level i+1) demands that every
// leaf-to-root path traverses a vertex at that level.
std::vector<std::vector<int>> level_functions(const DiTree& t, int N,
                                              const std::vector<bool>& require_saturated = {});

// Strict two-layer colorings: color 1 on the root side, color 2 on the leaf
// side, adjacent vertices never share a color (so every internal edge runs
// from a color-2 vertex into a color-1 vertex). Returns one vector<int> of
// colors (1 or 2) per admissible coloring, vertex-indexed.
std::vector<std::vector<int>> two_layer_colorings(const DiTree& t);

// A forest with consecutive label blocks per component.
struct DiForest {
    std::vector<DiTree> components;
    std::vector<int> m_blocks; // roots per component
    std::vector<int> n_blocks;
    void validate() const;
};

} // namespace diopkit::trees
