#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "weight.hpp"

namespace crr {

// Labeled arrow v --i--> w: the lowering operator f_i sends v to w.
struct Arrow {
    int source = 0;
    int label = 0;
    int target = 0;
};

// Finite crystal graph over a color alphabet, arrows labeled 0..rank.
// Per label each vertex has at most one in- and one out-arrow, and every
// label string is finite.
class CrystalGraph {
public:
    CrystalGraph(AlphabetPtr alphabet, std::vector<Arrow> arrows, int rank);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    int rank() const { return rank_; }
    int size() const { return alphabet_->size(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    // f_i image / e_i image of a vertex, if any.
    std::optional<int> lower(int v, int label) const;
    std::optional<int> raise(int v, int label) const;

    // (eps_i, phi_i): steps available upward resp. downward along the
    // i-string through v.
    std::pair<int, int> epsilonPhi(int v, int label) const;

private:
    AlphabetPtr alphabet_;
    std::vector<Arrow> arrows_;
    int rank_;
    std::vector<std::vector<int>> fwd_;  // fwd_[label][v] = target or -1
    std::vector<std::vector<int>> bwd_;
};

// Energy matrix E_{alpha beta} = H(beta (x) alpha), entries in {0,1,2}.
class EnergyMatrix {
public:
    EnergyMatrix(AlphabetPtr alphabet, std::vector<std::vector<int>> entries);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    int size() const { return alphabet_->size(); }
    int at(int alpha, int beta) const { return entries_[alpha][beta]; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    bool operator==(const EnergyMatrix& other) const { return entries_ == other.entries_; }

private:
    AlphabetPtr alphabet_;
    std::vector<std::vector<int>> entries_;
};

// Propagate wt(ground) = 0 through the graph: label i != 0 subtracts
// alpha_i, label 0 adds theta.  Errors on any inconsistent cycle or
// unreachable vertex.
std::vector<Weight> solveWeights(const CrystalGraph& g, const Weight& theta);

// Tensor square B (x) B.  Vertex (x, y) encodes x (x) y with x the left
// factor; 0-arrows remember which factor the operator moved.
class TensorSquare {
public:
    explicit TensorSquare(const CrystalGraph& g);

    int base() const { return n_; }
    int vertex(int left, int right) const { return left * n_ + right; }
    int leftOf(int v) const { return v / n_; }
    int rightOf(int v) const { return v % n_; }

    struct TArrow {
        int source;
        int label;
        int target;
        bool movedLeft;
    };
    const std::vector<TArrow>& arrows() const { return arrows_; }

    // Vertices reachable from v using 0-arrows alone (undirected).
    std::vector<int> zeroComponent(int v) const;

private:
    int n_;
    std::vector<TArrow> arrows_;
};

// Solve for the energy function on the tensor square: constant along
// classical arrows, stepping by one along 0-arrows according to the moved
// factor; each connected component shifted so its minimum is 0.  Errors if
// the constraints are inconsistent, the solution leaves {0,1,2}, or the
// normalization is ambiguous (disconnected constraint graph).
EnergyMatrix solveEnergy(const CrystalGraph& g);

}  // namespace crr
