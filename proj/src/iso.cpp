#include "d2c/iso.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace d2c {

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (p[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(p.size());
    for (int i = 0; i < size(); ++i) inv[p[i]] = i;
    return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    std::vector<int> out(inner.p.size());
    for (size_t i = 0; i < inner.p.size(); ++i) out[i] = outer.p[inner.p[i]];
    return Permutation(std::move(out));
}

bool is_valid_permutation(const Permutation& p, int n) {
    if (p.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p.p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (!is_valid_permutation(p, g.n())) return false;
    for (auto [u, v] : g.edges())
        if (!g.has_edge(p[u], p[v])) return false;
    return true;  // injective map of edges onto edges of the same count
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& p) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) return false;
    if (!is_valid_permutation(p, g1.n())) return false;
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(p[u], p[v])) return false;
    return true;
}

bool preserves_coloring(const TwoColoring& c, const Permutation& p) {
    if (p.size() != c.size()) return false;
    for (int v = 0; v < c.size(); ++v)
        if (c[p[v]] != c[v]) return false;
    return true;
}

Graph relabel(const Graph& g, const Permutation& p) {
    if (!is_valid_permutation(p, g.n()))
        throw std::invalid_argument("relabel: not a permutation of the graph's vertices");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(p[u], p[v]);
    return Graph(g.n(), edges);
}

OrderedPartition OrderedPartition::unit(int n) {
    OrderedPartition part;
    if (n > 0) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        part.cells.push_back(std::move(all));
    }
    return part;
}

OrderedPartition OrderedPartition::from_coloring(const TwoColoring& c) {
    std::vector<int> ones, twos;
    for (int v = 0; v < c.size(); ++v) (c[v] == 1 ? ones : twos).push_back(v);
    OrderedPartition part;
    if (!ones.empty()) part.cells.push_back(std::move(ones));
    if (!twos.empty()) part.cells.push_back(std::move(twos));
    return part;
}

bool OrderedPartition::is_valid(int n) const {
    std::vector<char> seen(n, 0);
    int total = 0;
    for (const auto& cell : cells) {
        if (cell.empty()) return false;
        for (int v : cell) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++total;
        }
    }
    return total == n;
}

bool OrderedPartition::is_discrete() const {
    for (const auto& cell : cells)
        if (cell.size() != 1) return false;
    return true;
}

OrderedPartition color_refine(const Graph& g, const OrderedPartition& initial) {
    if (!initial.is_valid(g.n()))
        throw std::invalid_argument("color_refine: initial partition is not a partition of the vertices");
    OrderedPartition part = initial;
    for (auto& cell : part.cells) std::sort(cell.begin(), cell.end());

    std::vector<int> cell_of(g.n());
    while (true) {
        for (int ci = 0; ci < static_cast<int>(part.cells.size()); ++ci)
            for (int v : part.cells[ci]) cell_of[v] = ci;

        std::vector<std::vector<int>> next;
        next.reserve(part.cells.size());
        for (const auto& cell : part.cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // Signature: sorted multiset of neighbor cell indices.
            std::vector<std::pair<std::vector<int>, int>> tagged;
            tagged.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(g.neighbors(v).size());
                for (int w : g.neighbors(v)) sig.push_back(cell_of[w]);
                std::sort(sig.begin(), sig.end());
                tagged.emplace_back(std::move(sig), v);
            }
            std::stable_sort(tagged.begin(), tagged.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<int> group{tagged[0].second};
            for (size_t i = 1; i < tagged.size(); ++i) {
                if (tagged[i].first != tagged[i - 1].first) {
                    next.push_back(std::move(group));
                    group.clear();
                }
                group.push_back(tagged[i].second);
            }
            next.push_back(std::move(group));
        }
        if (next.size() == part.cells.size()) break;
        part.cells = std::move(next);
    }
    return part;
}

namespace {

// Individualization-refinement search tree shared by canonical labeling
// and automorphism detection. Automorphisms are discovered when two leaf
// labelings produce the same relabeled graph.
class RefinementSearch {
public:
    RefinementSearch(const Graph& g, const OrderedPartition& initial, bool stop_at_first_nta)
        : g_(g), stop_at_first_nta_(stop_at_first_nta) {
        root_ = color_refine(g, initial);
    }

    void run() {
        std::vector<int> prefix;
        visit(root_, prefix);
    }

    bool have_best() const { return have_best_; }
    const std::string& best_key() const { return best_key_; }
    const Permutation& best_labeling() const { return best_labeling_; }
    const std::optional<Permutation>& nta() const { return nta_; }

private:
    void visit(const OrderedPartition& part, std::vector<int>& prefix) {
        if (done_) return;
        if (part.is_discrete()) {
            handle_leaf(part);
            return;
        }
        int target = target_cell(part);
        const std::vector<int> candidates = part.cells[target];
        std::vector<int> explored;
        for (int v : candidates) {
            if (done_) return;
            if (in_explored_orbit(v, explored, prefix)) continue;
            OrderedPartition child = individualize(part, target, v);
            OrderedPartition refined = color_refine(g_, child);
            prefix.push_back(v);
            visit(refined, prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    static int target_cell(const OrderedPartition& part) {
        int best = -1;
        size_t best_size = 0;
        for (int ci = 0; ci < static_cast<int>(part.cells.size()); ++ci) {
            size_t s = part.cells[ci].size();
            if (s > 1 && (best < 0 || s < best_size)) {
                best = ci;
                best_size = s;
            }
        }
        return best;
    }

    static OrderedPartition individualize(const OrderedPartition& part, int ci, int v) {
        OrderedPartition out;
        out.cells.reserve(part.cells.size() + 1);
        for (int i = 0; i < static_cast<int>(part.cells.size()); ++i) {
            if (i != ci) {
                out.cells.push_back(part.cells[i]);
                continue;
            }
            out.cells.push_back({v});
            std::vector<int> rest;
            rest.reserve(part.cells[i].size() - 1);
            for (int w : part.cells[i])
                if (w != v) rest.push_back(w);
            out.cells.push_back(std::move(rest));
        }
        return out;
    }

    void handle_leaf(const OrderedPartition& part) {
        std::vector<int> lab(g_.n());
        for (int ci = 0; ci < static_cast<int>(part.cells.size()); ++ci) lab[part.cells[ci][0]] = ci;
        Permutation labeling(std::move(lab));
        std::string key = write_graph6(relabel(g_, labeling));

        auto it = leaves_.find(key);
        if (it == leaves_.end()) {
            leaves_.emplace(key, labeling);
        } else {
            Permutation aut = compose(labeling.inverse(), it->second);
            if (!aut.is_identity()) {
                if (!is_automorphism(g_, aut))
                    throw std::logic_error("refinement search: leaf collision is not an automorphism");
                autos_.push_back(aut);
                if (stop_at_first_nta_) {
                    nta_ = std::move(aut);
                    done_ = true;
                    return;
                }
            }
        }
        if (!have_best_ || key < best_key_) {
            best_key_ = std::move(key);
            best_labeling_ = std::move(labeling);
            have_best_ = true;
        }
    }

    // Skip a branch only when a known automorphism that fixes the whole
    // prefix pointwise maps an already-explored sibling onto it; the two
    // subtrees then contain exactly the same leaf graphs.
    bool in_explored_orbit(int v, const std::vector<int>& explored,
                           const std::vector<int>& prefix) {
        if (explored.empty() || autos_.empty()) return false;
        std::vector<int> uf(g_.n());
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&uf](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool any = false;
        for (const auto& a : autos_) {
            bool fixes_prefix = true;
            for (int x : prefix)
                if (a[x] != x) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix) continue;
            any = true;
            for (int x = 0; x < g_.n(); ++x) {
                int ra = find(x), rb = find(a[x]);
                if (ra != rb) uf[ra] = rb;
            }
        }
        if (!any) return false;
        for (int w : explored)
            if (find(w) == find(v)) return true;
        return false;
    }

    const Graph& g_;
    bool stop_at_first_nta_;
    OrderedPartition root_;
    std::unordered_map<std::string, Permutation> leaves_;
    std::vector<Permutation> autos_;
    std::string best_key_;
    Permutation best_labeling_;
    bool have_best_ = false;
    std::optional<Permutation> nta_;
    bool done_ = false;
};

OrderedPartition initial_partition(const Graph& g, const std::optional<TwoColoring>& colors) {
    if (!colors) return OrderedPartition::unit(g.n());
    if (colors->size() != g.n())
        throw std::invalid_argument("coloring length does not match the vertex count");
    return OrderedPartition::from_coloring(*colors);
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::optional<TwoColoring>& colors) {
    if (g.n() < 1) throw std::invalid_argument("canonical_form: graph must have at least one vertex");
    RefinementSearch search(g, initial_partition(g, colors), /*stop_at_first_nta=*/false);
    search.run();
    if (!search.have_best()) throw std::logic_error("canonical_form: search produced no leaf");

    CanonicalForm cf;
    cf.labeling = search.best_labeling();
    cf.canon = relabel(g, cf.labeling);
    cf.key = search.best_key();
    if (colors) {
        int ones = 0;
        for (int v = 0; v < colors->size(); ++v)
            if ((*colors)[v] == 1) ++ones;
        cf.key += ":" + std::to_string(ones) + "," + std::to_string(colors->size() - ones);
    }
    if (write_graph6(cf.canon) != search.best_key())
        throw std::logic_error("canonical_form: labeling does not reproduce the representative");
    return cf;
}

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) return std::nullopt;
    if (g1.n() == 0) return Permutation();
    CanonicalForm c1 = canonical_form(g1);
    CanonicalForm c2 = canonical_form(g2);
    if (c1.key != c2.key) return std::nullopt;
    Permutation p = compose(c2.labeling.inverse(), c1.labeling);
    if (!is_isomorphism(g1, g2, p))
        throw std::logic_error("are_isomorphic: matching keys produced an invalid mapping");
    return p;
}

std::optional<Permutation> has_nta(const Graph& g) {
    if (g.n() < 2) return std::nullopt;
    RefinementSearch search(g, OrderedPartition::unit(g.n()), /*stop_at_first_nta=*/true);
    search.run();
    if (!search.nta()) return std::nullopt;
    const Permutation& p = *search.nta();
    if (p.is_identity() || !is_automorphism(g, p))
        throw std::logic_error("has_nta: search returned an invalid certificate");
    return p;
}

std::optional<Permutation> has_color_preserving_nta(const Graph& g, const TwoColoring& c) {
    if (c.size() != g.n())
        throw std::invalid_argument("has_color_preserving_nta: coloring length mismatch");
    if (g.n() < 2) return std::nullopt;
    RefinementSearch search(g, OrderedPartition::from_coloring(c), /*stop_at_first_nta=*/true);
    search.run();
    if (!search.nta()) return std::nullopt;
    const Permutation& p = *search.nta();
    if (p.is_identity() || !is_automorphism(g, p) || !preserves_coloring(c, p))
        throw std::logic_error("has_color_preserving_nta: search returned an invalid certificate");
    return p;
}

namespace {

// Plain exhaustive scans, kept free of any engine machinery.

bool brute_check_automorphism(const Graph& g, const std::vector<int>& perm) {
    for (auto [u, v] : g.edges())
        if (!g.has_edge(perm[u], perm[v])) return false;
    return true;
}

}  // namespace

std::optional<Permutation> brute_force_nta(const Graph& g, int threshold) {
    if (g.n() > threshold)
        throw ThresholdError("brute_force_nta: n = " + std::to_string(g.n()) +
                             " exceeds brute-force threshold " + std::to_string(threshold));
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (brute_check_automorphism(g, perm)) return Permutation(perm);
    }
    return std::nullopt;
}

std::optional<Permutation> brute_force_isomorphic(const Graph& g1, const Graph& g2, int threshold) {
    if (g1.n() != g2.n()) return std::nullopt;
    if (g1.n() > threshold)
        throw ThresholdError("brute_force_isomorphic: n = " + std::to_string(g1.n()) +
                             " exceeds brute-force threshold " + std::to_string(threshold));
    if (g1.m() != g2.m()) return std::nullopt;
    std::vector<int> perm(g1.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : g1.edges()) {
            if (!g2.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return Permutation(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace d2c
