#pragma once

#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "pog/address.hpp"

namespace pog {

struct Edge {
    cell_index u = 0;  // u < v
    cell_index v = 0;
    int mult = 0;

    auto operator<=>(const Edge&) const = default;
};

// Level-m cell multigraph. Every cell has total incident multiplicity 8 and
// no self-loops; the graph is connected.
class CellGraph {
public:
    CellGraph(int level, std::vector<Edge> edges, std::string builder_tag);

    int level() const { return level_; }
    cell_index n_cells() const { return n_cells_; }
    const std::vector<Edge>& edges() const { return edges_; }         // sorted, u < v
    const std::string& builder_tag() const { return builder_tag_; }

    int degree(cell_index i) const { return degree_[static_cast<std::size_t>(i)]; }
    int mult(cell_index i, cell_index j) const;

    // Distinct-neighbor adjacency in CSR form (multiplicities dropped).
    const std::vector<cell_index>& adj_offsets() const { return adj_off_; }
    const std::vector<cell_index>& adj_neighbors() const { return adj_nbr_; }

    bool same_multigraph(const CellGraph& other) const {
        return level_ == other.level_ && edges_ == other.edges_;
    }

private:
    void validate_and_index();

    int level_;
    cell_index n_cells_;
    std::vector<Edge> edges_;
    std::string builder_tag_;
    std::vector<int> degree_;
    std::vector<cell_index> adj_off_, adj_nbr_;
    std::vector<int> adj_mult_;
};

// Central edge-connection strengths for the pseudo-cell gluing at a level.
struct StrengthSequence {
    std::vector<int> entries;  // values in {2, 4}
};

// 2 -> (2,4,2), 4 -> (2,4,4,4,2), concatenated in order.
StrengthSequence refine_strength_sequence(const StrengthSequence& s);

CellGraph build_level1();
CellGraph build_graph_recursive(int m);
CellGraph build_graph_geometric(int m);

struct LaplacianMatrix {
    int level = 0;
    Eigen::SparseMatrix<double> mat;  // 8*I - A, symmetric
    cell_index dim() const { return mat.rows(); }
};

LaplacianMatrix assemble_laplacian(const CellGraph& g);

}  // namespace pog
