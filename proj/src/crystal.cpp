#include "crystal.hpp"

#include <deque>
#include <queue>

#include "errors.hpp"

namespace crr {

CrystalGraph::CrystalGraph(AlphabetPtr alphabet, std::vector<Arrow> arrows, int rank)
    : alphabet_(std::move(alphabet)), arrows_(std::move(arrows)), rank_(rank) {
    if (rank_ < 0) throw DomainError("crystal rank must be >= 0");
    const int n = alphabet_->size();
    fwd_.assign(rank_ + 1, std::vector<int>(n, -1));
    bwd_.assign(rank_ + 1, std::vector<int>(n, -1));
    for (const Arrow& a : arrows_) {
        if (a.label < 0 || a.label > rank_)
            throw DomainError("arrow label out of range 0..rank");
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
            throw DomainError("arrow endpoint out of range");
        if (fwd_[a.label][a.source] != -1)
            throw DomainError("vertex '" + alphabet_->color(a.source).label +
                              "' has two outgoing arrows with label " + std::to_string(a.label));
        if (bwd_[a.label][a.target] != -1)
            throw DomainError("vertex '" + alphabet_->color(a.target).label +
                              "' has two incoming arrows with label " + std::to_string(a.label));
        fwd_[a.label][a.source] = a.target;
        bwd_[a.label][a.target] = a.source;
    }
    // classical strings must terminate; 0-strings are only walked on demand
    for (int i = 1; i <= rank_; ++i)
        for (int v = 0; v < n; ++v) {
            int steps = 0, w = v;
            while (fwd_[i][w] != -1) {
                w = fwd_[i][w];
                if (++steps > n)
                    throw DomainError("label-" + std::to_string(i) + " string through '" +
                                      alphabet_->color(v).label + "' cycles");
            }
        }
}

std::optional<int> CrystalGraph::lower(int v, int label) const {
    int w = fwd_[label][v];
    return w == -1 ? std::nullopt : std::optional<int>(w);
}

std::optional<int> CrystalGraph::raise(int v, int label) const {
    int w = bwd_[label][v];
    return w == -1 ? std::nullopt : std::optional<int>(w);
}

std::pair<int, int> CrystalGraph::epsilonPhi(int v, int label) const {
    const int n = alphabet_->size();
    int eps = 0, w = v;
    while (bwd_[label][w] != -1) {
        w = bwd_[label][w];
        if (++eps > n)
            throw DomainError("label-" + std::to_string(label) + " string through '" +
                              alphabet_->color(v).label + "' cycles");
    }
    int phi = 0;
    w = v;
    while (fwd_[label][w] != -1) {
        w = fwd_[label][w];
        if (++phi > n)
            throw DomainError("label-" + std::to_string(label) + " string through '" +
                              alphabet_->color(v).label + "' cycles");
    }
    return {eps, phi};
}

std::vector<Weight> solveWeights(const CrystalGraph& g, const Weight& theta) {
    const int n = g.size();
    if (theta.rank() != g.alphabet()->rank())
        throw DomainError("theta has rank different from the alphabet");
    std::vector<Weight> wt(n);
    std::vector<bool> known(n, false);
    const int root = g.alphabet()->ground();
    wt[root] = Weight::zero(g.alphabet()->rank());
    known[root] = true;

    // the simple roots as weight vectors
    std::vector<Weight> alpha;
    for (int i = 0; i < g.alphabet()->rank(); ++i) {
        Weight a = Weight::zero(g.alphabet()->rank());
        a.coords[i] = 1;
        alpha.push_back(a);
    }
    auto step = [&](const Weight& w, int label) {
        return label == 0 ? w + theta : w - alpha[label - 1];
    };

    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int i = 0; i <= g.rank(); ++i) {
            if (auto t = g.lower(v, i)) {
                Weight w = step(wt[v], i);
                if (!known[*t]) {
                    wt[*t] = w;
                    known[*t] = true;
                    q.push(*t);
                } else if (wt[*t] != w) {
                    throw DomainError("not a weight-consistent crystal: vertex '" +
                                      g.alphabet()->color(*t).label + "'");
                }
            }
            if (auto s = g.raise(v, i)) {
                // invert the step: wt(source) determined from wt(target)
                Weight w = i == 0 ? wt[v] - theta : wt[v] + alpha[i - 1];
                if (!known[*s]) {
                    wt[*s] = w;
                    known[*s] = true;
                    q.push(*s);
                } else if (wt[*s] != w) {
                    throw DomainError("not a weight-consistent crystal: vertex '" +
                                      g.alphabet()->color(*s).label + "'");
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!known[v])
            throw DomainError("crystal graph is not connected: vertex '" +
                              g.alphabet()->color(v).label + "' unreachable");
    return wt;
}

TensorSquare::TensorSquare(const CrystalGraph& g) : n_(g.size()) {
    // Signature rule for f_i on x (x) y, calibrated against the printed
    // A2 matrix: f_i moves the left factor when phi_i(x) > eps_i(y).
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int i = 0; i <= g.rank(); ++i) {
                const int phiX = g.epsilonPhi(x, i).second;
                const int epsY = g.epsilonPhi(y, i).first;
                const bool moveLeft = phiX > epsY;
                if (moveLeft) {
                    if (auto t = g.lower(x, i))
                        arrows_.push_back({vertex(x, y), i, vertex(*t, y), true});
                } else {
                    if (auto t = g.lower(y, i))
                        arrows_.push_back({vertex(x, y), i, vertex(x, *t), false});
                }
            }
}

std::vector<int> TensorSquare::zeroComponent(int v) const {
    std::vector<std::vector<int>> adj(n_ * n_);
    for (const TArrow& a : arrows_)
        if (a.label == 0) {
            adj[a.source].push_back(a.target);
            adj[a.target].push_back(a.source);
        }
    std::vector<bool> seen(n_ * n_, false);
    std::vector<int> comp;
    std::deque<int> q{v};
    seen[v] = true;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        comp.push_back(u);
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                q.push_back(w);
            }
    }
    return comp;
}

EnergyMatrix solveEnergy(const CrystalGraph& g) {
    const TensorSquare ts(g);
    const int n = g.size();
    const int nn = n * n;

    // difference constraints H(target) - H(source) along tensor arrows:
    // 0 on classical arrows, and on 0-arrows -1 when the left factor
    // moved, +1 when the right factor moved (the calibrated sign).
    struct Edge {
        int to;
        int diff;
    };
    std::vector<std::vector<Edge>> adj(nn);
    for (const auto& a : ts.arrows()) {
        int d = 0;
        if (a.label == 0) d = a.movedLeft ? -1 : +1;
        adj[a.source].push_back({a.target, d});
        adj[a.target].push_back({a.source, -d});
    }

    std::vector<int> h(nn, 0);
    std::vector<int> comp(nn, -1);
    int componentCount = 0;
    for (int start = 0; start < nn; ++start) {
        if (comp[start] != -1) continue;
        const int c = componentCount++;
        comp[start] = c;
        h[start] = 0;
        std::deque<int> q{start};
        int lo = 0;
        std::vector<int> members{start};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const Edge& e : adj[u]) {
                if (comp[e.to] == -1) {
                    comp[e.to] = c;
                    h[e.to] = h[u] + e.diff;
                    lo = std::min(lo, h[e.to]);
                    members.push_back(e.to);
                    q.push_back(e.to);
                } else if (h[e.to] != h[u] + e.diff) {
                    throw DomainError(
                        "no energy function: inconsistent constraint at pair (" +
                        g.alphabet()->color(ts.leftOf(u)).label + " (x) " +
                        g.alphabet()->color(ts.rightOf(u)).label + ")");
                }
            }
        }
        for (int v : members) h[v] -= lo;  // min of the component -> 0
    }
    if (componentCount > 1)
        throw DomainError("energy normalization ambiguous: tensor square has " +
                          std::to_string(componentCount) + " constraint components");

    std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
    for (int alpha = 0; alpha < n; ++alpha)
        for (int beta = 0; beta < n; ++beta) {
            const int v = ts.vertex(beta, alpha);  // E_{alpha beta} = H(beta (x) alpha)
            if (h[v] < 0 || h[v] > 2)
                throw DomainError("energy value " + std::to_string(h[v]) +
                                  " outside {0,1,2} at pair (" +
                                  g.alphabet()->color(beta).label + " (x) " +
                                  g.alphabet()->color(alpha).label + ")");
            entries[alpha][beta] = h[v];
        }
    return EnergyMatrix(g.alphabet(), std::move(entries));
}

EnergyMatrix::EnergyMatrix(AlphabetPtr alphabet, std::vector<std::vector<int>> entries)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
    const int n = alphabet_->size();
    if (static_cast<int>(entries_.size()) != n)
        throw DomainError("energy matrix must be square over the alphabet");
    for (const auto& row : entries_) {
        if (static_cast<int>(row.size()) != n)
            throw DomainError("energy matrix must be square over the alphabet");
        for (int x : row)
            if (x < 0 || x > 2) throw DomainError("energy matrix entries must lie in {0,1,2}");
    }
}

}  // namespace crr
