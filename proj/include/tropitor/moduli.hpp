#pragma once

#include <string>
#include <vector>

#include "tropitor/graph.hpp"
#include "tropitor/matroid.hpp"
#include "tropitor/matrix.hpp"

namespace tropitor {

enum class CellKind { Curve, MatroidClass };

struct Cell {
    CellKind kind = CellKind::Curve;
    int id = 0;
    int dim = 0;
    WeightedGraph graph;                       // curve cells
    Matroid matroid;                           // matroid-class cells
    std::vector<std::vector<int>> stabilizer;  // edge permutations (curve cells)
    std::string token;                         // unique within the complex
};

// Face map realizing sub's cone as a face of super's cone, stored as a
// rational matrix so that integrality is a checkable axiom (every column must
// be a coordinate indicator).
struct CoverRelation {
    int sub = 0, super = 0;
    RatMatrix map; // |E(super)| x |E(sub)|
};

struct CellComplex {
    std::vector<Cell> cells;
    std::vector<CoverRelation> covers;

    std::vector<int> maximal_cells() const;
    std::vector<int> cells_of_dim(int d) const;
    int max_dim() const;
    bool less_equal(int sub, int super) const; // reflexive-transitive closure of covers
    std::vector<int> covering_supers(int sub) const;
};

struct StructureReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
};

// All connected multigraphs with the exact degree at every vertex, up to
// isomorphism (weights zero).
std::vector<WeightedGraph> generate_multigraphs_exact_degree(int nv, int ne, int degree);
// All connected multigraphs with minimum degree 3 (no constraint when nv = 1).
std::vector<WeightedGraph> generate_multigraphs_min_degree3(int nv, int ne);
// All 3-edge-connected graphs of genus <= g, up to isomorphism.
std::vector<WeightedGraph> three_edge_connected_graphs_up_to_genus(int g);

// Cells of the genus-g curve complex: all stable weighted graphs of genus g,
// generated from the 3-regular weight-zero graphs by contraction closure.
// 2 <= g <= 4.
CellComplex enumerate_tropical_cells(int g);

// Purity, codimension-one classification and connectedness through
// codimension one for a curve complex of genus g.
StructureReport verify_purity_and_codim1(const CellComplex& x, int g);

// Cells indexed by simple cographic matroid classes of 3-edge-connected
// graphs of genus <= g; faces by matroid deletion.
CellComplex enumerate_cographic_cells(int g);
// Cells indexed by graphic matroid classes of simple connected graphs on at
// most g+1 vertices.
CellComplex enumerate_graphic_cells(int g);
// Cells lying in both of the above, up to matroid isomorphism.
CellComplex enumerate_gr_cogr_cells(int g);

// The matroid classes reachable from m by deletion + simplification.
std::vector<Matroid> deletion_closure(const Matroid& m);

// Disjointness of cells, integrality and indicator shape of face maps,
// composition coherence on 2-chains modulo cell stabilizers.
StructureReport validate_stacky_axioms(const CellComplex& x);

} // namespace tropitor
