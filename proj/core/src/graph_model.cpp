#include "grslab/graph_model.hpp"

#include <algorithm>

namespace grslab {

MixedGrsGraph build_graph(const MatrixFq& t, const std::vector<std::size_t>& shortened) {
    GRSLAB_CHECK(t.rows() == t.cols(), "T must be square");
    std::size_t n = t.rows();
    MixedGrsGraph g;
    g.n = n;
    g.row_cols.resize(n);
    g.color.assign(n, RowColor::Black);
    g.shortened = shortened;
    std::sort(g.shortened.begin(), g.shortened.end());
    for (std::size_t p : g.shortened)
        if (p >= n) throw ParameterError("shortened position out of range");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (t.at(i, j) != 0) g.row_cols[i].push_back(j);
        std::size_t w = g.row_cols[i].size();
        if (w == 0 || w > 2)
            throw ParameterError("row " + std::to_string(i) + " has weight " + std::to_string(w));
        bool red = std::binary_search(g.shortened.begin(), g.shortened.end(), i);
        g.color[i] = red ? RowColor::Red : (w == 1 ? RowColor::Blue : RowColor::Black);
    }
    return g;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Merged classes adopt the smallest constituent index as representative.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

ReducedGraphSummary reduce_graph(const MixedGrsGraph& g) {
    std::size_t n = g.n;
    UnionFind uf(n);
    std::vector<bool> row_alive(n, true);
    std::vector<bool> class_killed(n, false);

    auto current_classes = [&](std::size_t v) {
        std::vector<std::size_t> cls;
        for (std::size_t u : g.row_cols[v]) {
            std::size_t c = uf.find(u);
            if (class_killed[c]) continue;
            if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(c);
        }
        return cls;
    };

    // Merge phase: red rows of (current) degree 2, ascending index.
    for (std::size_t v : g.shortened) {
        auto cls = current_classes(v);
        if (cls.size() == 2) {
            uf.unite(cls[0], cls[1]);
            row_alive[v] = false;
        }
        // degree-1 red rows are handled by the pruning loop
    }

    // Pruning to fixpoint.  A red degree-1 row forces its class to zero, so
    // the class and all its edges go away; rows left with no class vanish.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!row_alive[v] || g.color[v] != RowColor::Red) continue;
            auto cls = current_classes(v);
            if (cls.empty()) {  // constraint became vacuous
                row_alive[v] = false;
                changed = true;
                continue;
            }
            if (cls.size() != 1) continue;
            class_killed[cls[0]] = true;
            row_alive[v] = false;
            for (std::size_t w = 0; w < n; ++w) {
                if (!row_alive[w]) continue;
                if (current_classes(w).empty()) row_alive[w] = false;
            }
            changed = true;
        }
    }

    ReducedGraphSummary s;
    s.shortened = g.shortened;
    std::vector<std::size_t> class_size(n, 0);
    for (std::size_t u = 0; u < n; ++u) ++class_size[uf.find(u)];
    for (std::size_t c = 0; c < n; ++c)
        if (uf.find(c) == c && !class_killed[c] && class_size[c] >= 2)
            s.merged_degrees.push_back(class_size[c]);
    for (std::size_t v = 0; v < n; ++v) {
        if (g.color[v] == RowColor::Red) {
            if (g.row_cols[v].size() == 1) s.vanished_degree1.push_back(v);
            continue;
        }
        if (!row_alive[v]) {
            if (g.row_cols[v].size() == 1) s.vanished_degree1.push_back(v);
            continue;
        }
        if (current_classes(v).size() == 2) s.remaining_degree2.push_back(v);
    }
    return s;
}

std::int64_t predicted_square_dim(const ReducedGraphSummary& s, std::size_t n, std::size_t k) {
    std::int64_t nk = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k);
    return 3 * nk - 1 - 2 * static_cast<std::int64_t>(s.vanished_degree1.size()) +
           static_cast<std::int64_t>(s.remaining_degree2.size()) -
           static_cast<std::int64_t>(s.shorten_count()) -
           static_cast<std::int64_t>(s.merge_excess());
}

int predicted_puncture_delta(const ReducedGraphSummary& s, std::size_t i) {
    if (std::binary_search(s.shortened.begin(), s.shortened.end(), i))
        throw ParameterError("position is shortened");
    return std::binary_search(s.remaining_degree2.begin(), s.remaining_degree2.end(), i) ? 1 : 0;
}

}  // namespace grslab
