#include "abchoose/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>

#include "abchoose/structure.hpp"

namespace abch {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[at(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[at(i >> 6)] >> (i & 63)) & 1u; }
    int count() const
    {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    void remove(const Bits& o)
    {
        for (int i = 0; i < W; ++i) w[at(i)] &= ~o.w[at(i)];
    }
    template <class F>
    void for_each(F f) const
    {
        for (int i = 0; i < W; ++i)
            for (auto x = w[at(i)]; x; x &= x - 1) f(i * 64 + std::countr_zero(x));
    }
};

// Backtracking over b-subsets on colour indices 0..C-1.
template <int W>
class ListSolver {
public:
    ListSolver(const Graph& g, std::vector<Bits<W>> lists, int b, std::uint64_t budget)
        : g_(g), lists_(std::move(lists)), b_(b), budget_(budget), avail_(lists_), pick_(lists_.size()),
          done_(lists_.size(), 0), active_(lists_.size(), 1)
    {
        peel();
    }

    SearchStatus solve()
    {
        int remaining = 0;
        for (std::size_t v = 0; v < active_.size(); ++v) remaining += active_[v];
        if (!search(remaining)) return aborted_ ? SearchStatus::Inconclusive : SearchStatus::None;
        for (auto it = peeled_.rbegin(); it != peeled_.rend(); ++it) {
            Vertex v = *it;
            Bits<W> free = lists_[at(v)];
            for (Vertex w : g_.neighbors(v))
                if (done_[at(w)]) free.remove(pick_[at(w)]);
            int taken = 0;
            free.for_each([&](int c) {
                if (taken < b_) {
                    pick_[at(v)].set(c);
                    ++taken;
                }
            });
            if (taken < b_) throw std::logic_error("list solver: peeled vertex ran out of colours");
            done_[at(v)] = 1;
        }
        return SearchStatus::Found;
    }

    std::vector<std::vector<int>> picks() const
    {
        std::vector<std::vector<int>> out(pick_.size());
        for (std::size_t v = 0; v < pick_.size(); ++v) pick_[v].for_each([&](int c) { out[v].push_back(c); });
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void peel()
    {
        const int n = g_.num_vertices();
        std::vector<int> deg(at(n));
        for (Vertex v = 0; v < n; ++v) deg[at(v)] = g_.degree(v);
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < n; ++v) {
                if (!active_[at(v)] || lists_[at(v)].count() < b_ * (deg[at(v)] + 1)) continue;
                active_[at(v)] = 0;
                peeled_.push_back(v);
                for (Vertex w : g_.neighbors(v)) --deg[at(w)];
                changed = true;
            }
        }
    }

    bool search(int remaining)
    {
        if (remaining == 0) return true;
        Vertex best = -1;
        int best_count = std::numeric_limits<int>::max();
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (!active_[at(v)] || done_[at(v)]) continue;
            int c = avail_[at(v)].count();
            if (c < best_count) {
                best = v;
                best_count = c;
            }
        }
        if (best_count < b_) return false;

        std::vector<int> colors;
        avail_[at(best)].for_each([&](int c) { colors.push_back(c); });
        std::vector<int> idx(at(b_));
        for (int i = 0; i < b_; ++i) idx[at(i)] = i;
        const int total = static_cast<int>(colors.size());
        std::vector<std::pair<Vertex, Bits<W>>> undo;
        for (;;) {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return false;
            }
            Bits<W> s;
            for (int i : idx) s.set(colors[at(i)]);
            undo.clear();
            bool ok = true;
            for (Vertex w : g_.neighbors(best)) {
                if (!active_[at(w)] || done_[at(w)]) continue;
                undo.emplace_back(w, avail_[at(w)]);
                avail_[at(w)].remove(s);
                if (avail_[at(w)].count() < b_) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                pick_[at(best)] = s;
                done_[at(best)] = 1;
                if (search(remaining - 1)) return true;
                done_[at(best)] = 0;
                pick_[at(best)] = {};
            }
            for (auto& [w, old] : undo) avail_[at(w)] = old;
            if (aborted_) return false;

            int i = b_ - 1;
            while (i >= 0 && idx[at(i)] == total - b_ + i) --i;
            if (i < 0) return false;
            ++idx[at(i)];
            for (int j = i + 1; j < b_; ++j) idx[at(j)] = idx[at(j - 1)] + 1;
        }
    }

    const Graph& g_;
    std::vector<Bits<W>> lists_;
    int b_;
    std::uint64_t budget_;
    std::vector<Bits<W>> avail_;
    std::vector<Bits<W>> pick_;
    std::vector<char> done_;
    std::vector<char> active_;
    std::vector<Vertex> peeled_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

template <int W>
ListColoringResult solve_with(const Graph& g, const ListAssignment& lists, const std::vector<Color>& palette, int b,
                              std::uint64_t budget)
{
    std::vector<Bits<W>> bits(at(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Color c : lists[v]) {
            auto pos = std::lower_bound(palette.begin(), palette.end(), c) - palette.begin();
            bits[at(v)].set(static_cast<int>(pos));
        }
    ListSolver<W> solver(g, std::move(bits), b, budget);
    ListColoringResult out;
    out.status = solver.solve();
    out.nodes = solver.nodes();
    if (out.status == SearchStatus::Found) {
        std::vector<std::vector<Color>> sets;
        for (auto& p : solver.picks()) {
            std::vector<Color> s;
            for (int i : p) s.push_back(palette[at(i)]);
            sets.push_back(std::move(s));
        }
        out.choice = Choice(std::move(sets));
        if (auto bad = choice_violation(g, lists, *out.choice, b))
            throw std::logic_error("list solver produced an invalid choice: " + *bad);
    }
    return out;
}

// Lex-ordered k-subsets of `items`; `visit` returns false to stop.
template <class T, class F>
bool for_each_subset(const std::vector<T>& items, int k, F visit)
{
    const int total = static_cast<int>(items.size());
    if (k > total) return true;
    std::vector<int> idx(at(k));
    for (int i = 0; i < k; ++i) idx[at(i)] = i;
    std::vector<T> cur(at(k));
    for (;;) {
        for (int i = 0; i < k; ++i) cur[at(i)] = items[at(idx[at(i)])];
        if (!visit(cur)) return false;
        int i = k - 1;
        while (i >= 0 && idx[at(i)] == total - k + i) --i;
        if (i < 0) return true;
        ++idx[at(i)];
        for (int j = i + 1; j < k; ++j) idx[at(j)] = idx[at(j - 1)] + 1;
    }
}

// Lists for one position: e colours already in use plus a fresh block.
template <class F>
bool for_each_canonical_list(int s, int m, F visit)
{
    std::vector<Color> used(at(m));
    for (int i = 0; i < m; ++i) used[at(i)] = i + 1;
    for (int fresh = 0; fresh <= s; ++fresh) {
        int reuse = s - fresh;
        if (reuse > m) continue;
        bool go = for_each_subset(used, reuse, [&](const std::vector<Color>& sub) {
            std::vector<Color> list = sub;
            for (int j = 1; j <= fresh; ++j) list.push_back(m + j);
            return visit(list, m + fresh);
        });
        if (!go) return false;
    }
    return true;
}

// One connected piece of the instance, vertices renumbered by enumeration position.
struct Piece {
    Graph graph;
    std::vector<Vertex> original;  // position -> vertex of the input graph
    std::vector<int> sizes;
    int prefix = 0;                // positions >= prefix have all neighbours earlier
};

Piece make_piece(const Graph& g, const std::vector<Vertex>& comp, const std::vector<int>& sizes, bool prune)
{
    Graph h = g.induced(comp);
    const int n = h.num_vertices();
    std::vector<char> closer(at(n), 0);
    if (prune) {
        std::vector<Vertex> byDeg(at(n));
        for (int i = 0; i < n; ++i) byDeg[at(i)] = i;
        std::stable_sort(byDeg.begin(), byDeg.end(), [&](Vertex a, Vertex b) { return h.degree(a) < h.degree(b); });
        for (Vertex v : byDeg) {
            bool free = true;
            for (Vertex w : h.neighbors(v)) free = free && !closer[at(w)];
            if (free) closer[at(v)] = 1;
        }
        // Keep at least one vertex in the prefix so a component is never all closers.
        if (std::all_of(closer.begin(), closer.end(), [](char c) { return c != 0; })) closer[0] = 0;
    }

    std::vector<Vertex> order;
    std::vector<char> seen(at(n), 0);
    std::queue<Vertex> q;
    Vertex start = 0;
    while (start < n && closer[at(start)]) ++start;
    q.push(start);
    seen[at(start)] = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (!closer[at(v)]) order.push_back(v);
        for (Vertex w : h.neighbors(v))
            if (!seen[at(w)]) {
                seen[at(w)] = 1;
                q.push(w);
            }
    }
    Piece p;
    p.prefix = static_cast<int>(order.size());
    for (Vertex v = 0; v < n; ++v)
        if (closer[at(v)]) order.push_back(v);

    std::vector<int> pos(at(n));
    for (int i = 0; i < n; ++i) pos[at(order[at(i)])] = i;
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) edges.push_back({std::min(pos[at(e.u)], pos[at(e.v)]), std::max(pos[at(e.u)], pos[at(e.v)])});
    p.graph = Graph(n, edges);
    for (Vertex v : order) {
        p.original.push_back(comp[at(v)]);
        p.sizes.push_back(sizes[at(comp[at(v)])]);
    }
    return p;
}

struct SharedState {
    std::atomic<std::uint64_t> count{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<std::size_t> witness_task{std::numeric_limits<std::size_t>::max()};
    std::mutex mu;
    std::optional<std::vector<std::vector<Color>>> witness;
    std::string note;
};

class PieceEnumerator {
public:
    PieceEnumerator(const Piece& p, int b, const OracleOptions& opt, SharedState& shared, std::size_t task)
        : p_(p), b_(b), opt_(opt), shared_(shared), task_(task), lists_(p.sizes.size())
    {
    }

    void run(std::vector<std::vector<Color>> prefix_lists, int depth, int m)
    {
        for (int i = 0; i < depth; ++i) lists_[at(i)] = std::move(prefix_lists[at(i)]);
        walk(depth, m);
    }

private:
    bool walk(int pos, int m)
    {
        const int n = static_cast<int>(p_.sizes.size());
        if (pos == n) return leaf();
        const int s = p_.sizes[at(pos)];
        if (pos < p_.prefix) {
            return for_each_canonical_list(s, m, [&](const std::vector<Color>& list, int m2) {
                lists_[at(pos)] = list;
                return walk(pos + 1, m2);
            });
        }
        std::vector<Color> uni;
        for (Vertex w : p_.graph.neighbors(pos)) uni.insert(uni.end(), lists_[at(w)].begin(), lists_[at(w)].end());
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        if (static_cast<int>(uni.size()) >= s) {
            return for_each_subset(uni, s, [&](const std::vector<Color>& list) {
                lists_[at(pos)] = list;
                return walk(pos + 1, m);
            });
        }
        std::vector<Color> list = uni;
        const int fresh = s - static_cast<int>(uni.size());
        for (int j = 1; j <= fresh; ++j) list.push_back(m + j);
        lists_[at(pos)] = std::move(list);
        return walk(pos + 1, m + fresh);
    }

    bool leaf()
    {
        if (shared_.out_of_budget.load() || shared_.witness_task.load() < task_) return false;
        std::uint64_t c = shared_.count.fetch_add(1) + 1;
        if (c > opt_.budget) {
            shared_.out_of_budget = true;
            std::lock_guard lock(shared_.mu);
            if (shared_.note.empty()) shared_.note = "enumeration budget of " + std::to_string(opt_.budget) + " exceeded";
            return false;
        }
        if (opt_.progress && (c & ((std::uint64_t{1} << 20) - 1)) == 0) opt_.progress(c);
        ListAssignment la(lists_);
        auto r = find_list_coloring(p_.graph, la, b_, opt_.solver_budget);
        if (r.status == SearchStatus::Found) return true;
        if (r.status == SearchStatus::Inconclusive) {
            shared_.out_of_budget = true;
            std::lock_guard lock(shared_.mu);
            if (shared_.note.empty()) shared_.note = "inner solver budget of " + std::to_string(opt_.solver_budget) + " exceeded";
            return false;
        }
        std::lock_guard lock(shared_.mu);
        if (task_ < shared_.witness_task.load()) {
            shared_.witness_task = task_;
            shared_.witness = lists_;
        }
        return false;
    }

    const Piece& p_;
    int b_;
    const OracleOptions& opt_;
    SharedState& shared_;
    std::size_t task_;
    std::vector<std::vector<Color>> lists_;
};

struct PrefixTask {
    std::vector<std::vector<Color>> lists;
    int m = 0;
};

// Expands prefix positions breadth-first until there are enough tasks for the workers.
std::vector<PrefixTask> split_tasks(const Piece& p, int jobs, int& depth)
{
    std::vector<PrefixTask> tasks(1);
    tasks[0].lists.resize(p.sizes.size());
    depth = 0;
    if (jobs <= 1) return tasks;
    while (depth < p.prefix && tasks.size() < static_cast<std::size_t>(8 * jobs)) {
        std::vector<PrefixTask> next;
        for (auto& t : tasks)
            for_each_canonical_list(p.sizes[at(depth)], t.m, [&](const std::vector<Color>& list, int m2) {
                PrefixTask nt = t;
                nt.lists[at(depth)] = list;
                nt.m = m2;
                next.push_back(std::move(nt));
                return true;
            });
        tasks = std::move(next);
        ++depth;
    }
    return tasks;
}

void enumerate_piece(const Piece& p, int b, const OracleOptions& opt, SharedState& shared)
{
    int depth = 0;
    auto tasks = split_tasks(p, opt.jobs, depth);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size() || shared.out_of_budget.load() || shared.witness_task.load() < t) return;
            PieceEnumerator e(p, b, opt, shared, t);
            e.run(tasks[t].lists, depth, tasks[t].m);
        }
    };
    const int threads = std::max(1, std::min<int>(opt.jobs, static_cast<int>(tasks.size())));
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("ABCHOOSE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

ListColoringResult find_list_coloring(const Graph& g, const ListAssignment& lists, int b, std::uint64_t node_budget)
{
    if (b < 1) throw std::invalid_argument("find_list_coloring: b must be at least 1");
    if (lists.size() != g.num_vertices())
        throw std::invalid_argument("find_list_coloring: " + std::to_string(lists.size()) + " lists for " +
                                    std::to_string(g.num_vertices()) + " vertices");
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (static_cast<int>(lists[v].size()) < b) return {SearchStatus::None, std::nullopt, 0};

    std::vector<Color> palette;
    for (const auto& s : lists.sets()) palette.insert(palette.end(), s.begin(), s.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    if (palette.size() <= 64) return solve_with<1>(g, lists, palette, b, node_budget);
    if (palette.size() <= 256) return solve_with<4>(g, lists, palette, b, node_budget);
    if (palette.size() <= 1024) return solve_with<16>(g, lists, palette, b, node_budget);
    throw std::invalid_argument("find_list_coloring: more than 1024 distinct colours");
}

void for_each_canonical_assignment(const std::vector<int>& sizes,
                                   const std::function<bool(const ListAssignment&)>& visit)
{
    std::vector<std::vector<Color>> lists(sizes.size());
    std::function<bool(std::size_t, int)> walk = [&](std::size_t pos, int m) -> bool {
        if (pos == sizes.size()) return visit(ListAssignment(lists));
        return for_each_canonical_list(sizes[pos], m, [&](const std::vector<Color>& list, int m2) {
            lists[pos] = list;
            return walk(pos + 1, m2);
        });
    };
    walk(0, 0);
}

std::uint64_t count_canonical_assignments(const std::vector<int>& sizes)
{
    std::uint64_t count = 0;
    for_each_canonical_assignment(sizes, [&](const ListAssignment&) {
        ++count;
        return true;
    });
    return count;
}

ChoosabilityVerdict decide_choosability(const Graph& g, const std::vector<int>& sizes, int b, const OracleOptions& opt)
{
    const int n = g.num_vertices();
    if (b < 1) throw std::invalid_argument("choosability: b must be at least 1");
    if (static_cast<int>(sizes.size()) != n)
        throw std::invalid_argument("choosability: " + std::to_string(sizes.size()) + " list sizes for " +
                                    std::to_string(n) + " vertices");
    for (Vertex v = 0; v < n; ++v)
        if (sizes[at(v)] < 1) throw std::invalid_argument("choosability: list size of vertex " + std::to_string(v) + " must be positive");
    if (opt.budget == 0) throw std::invalid_argument("choosability: budget must be positive");

    ChoosabilityVerdict out;
    out.budget = opt.budget;

    // Fresh colours for vertices outside the refuted piece.
    auto fill_witness = [&](std::vector<std::vector<Color>> lists) {
        Color next = 1;
        for (const auto& l : lists)
            if (!l.empty()) next = std::max(next, l.back() + 1);
        for (Vertex v = 0; v < n; ++v)
            if (lists[at(v)].empty())
                for (int i = 0; i < sizes[at(v)]; ++i) lists[at(v)].push_back(next++);
        ListAssignment w(std::move(lists));
        auto check = find_list_coloring(g, w, b, opt.solver_budget);
        if (check.status != SearchStatus::None)
            throw std::logic_error(std::string("choosability: refutation failed re-verification (") +
                                   to_string(check.status) + ")");
        out.verdict = Verdict::No;
        out.witness = std::move(w);
    };

    for (Vertex v = 0; v < n; ++v)
        if (sizes[at(v)] < b) {
            out.note = "vertex " + std::to_string(v) + " has a list shorter than b";
            fill_witness(std::vector<std::vector<Color>>(at(n)));
            return out;
        }

    // Peel vertices whose list outlasts every neighbour.
    std::vector<char> alive(at(n), 1);
    std::vector<int> deg(at(n));
    for (Vertex v = 0; v < n; ++v) deg[at(v)] = g.degree(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[at(v)] || sizes[at(v)] < b * (deg[at(v)] + 1)) continue;
            alive[at(v)] = 0;
            out.peeled.push_back(v);
            for (Vertex w : g.neighbors(v)) --deg[at(w)];
            changed = true;
        }
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (alive[at(v)]) rest.push_back(v);
    const Graph reduced = g.induced(rest);

    bool inconclusive = false;
    for (const auto& localComp : reduced.components()) {
        std::vector<Vertex> comp;
        for (Vertex v : localComp) comp.push_back(rest[at(v)]);
        Piece piece = make_piece(g, comp, sizes, opt.prune_closers);
        SharedState shared;
        enumerate_piece(piece, b, opt, shared);
        out.assignments += std::min<std::uint64_t>(shared.count.load(), opt.budget);
        if (shared.witness) {
            std::vector<std::vector<Color>> lists(at(n));
            for (std::size_t i = 0; i < piece.original.size(); ++i)
                lists[at(piece.original[i])] = (*shared.witness)[i];
            fill_witness(std::move(lists));
            return out;
        }
        if (shared.out_of_budget) {
            inconclusive = true;
            if (out.note.empty()) out.note = shared.note;
        }
    }
    out.verdict = inconclusive ? Verdict::Inconclusive : Verdict::Yes;
    return out;
}

ChoosabilityVerdict is_ab_choosable(const Graph& g, int a, int b, const OracleOptions& opt)
{
    if (b < 1 || a < b) throw std::invalid_argument("is_ab_choosable: need a >= b >= 1");
    return decide_choosability(g, std::vector<int>(at(g.num_vertices()), a), b, opt);
}

ChoosabilityVerdict is_f_choosable(const Graph& g, const std::vector<int>& f, const OracleOptions& opt)
{
    return decide_choosability(g, f, 1, opt);
}

ChoiceNumberResult choice_number(const Graph& g, int b, const OracleOptions& opt)
{
    if (b < 1) throw std::invalid_argument("choice_number: b must be at least 1");
    ChoiceNumberResult out;
    const int top = b * (degeneracy(g).degeneracy + 1);
    for (int a = b; a <= top; ++a) {
        auto r = is_ab_choosable(g, a, b, opt);
        out.assignments += r.assignments;
        if (r.verdict == Verdict::Inconclusive) return out;
        if (r.verdict == Verdict::Yes) {
            out.verdict = Verdict::Yes;
            out.value = a;
            return out;
        }
    }
    throw std::logic_error("choice_number: not choosable at b(degeneracy+1)");
}

HalveResult halve_choice(const Graph& g, const ListAssignment& lists2m, int m, int k, std::uint64_t node_budget)
{
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("halve_choice: k must be a positive odd integer");
    if (m < 1) throw std::invalid_argument("halve_choice: m must be at least 1");
    const int n = g.num_vertices();
    if (lists2m.size() != n) throw std::invalid_argument("halve_choice: list assignment does not match the graph");
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(lists2m[v].size()) != 2 * m)
            throw std::invalid_argument("halve_choice: list of vertex " + std::to_string(v) + " has " +
                                        std::to_string(lists2m[v].size()) + " colours, expected 2m = " +
                                        std::to_string(2 * m));

    std::vector<Color> palette;
    for (const auto& s : lists2m.sets()) palette.insert(palette.end(), s.begin(), s.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    auto block_of = [&](Color c) {
        return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
    };

    std::vector<std::vector<Color>> blown(at(n));
    for (Vertex v = 0; v < n; ++v)
        for (Color c : lists2m[v]) {
            int i = block_of(c);
            for (int j = 0; j < k; ++j) blown[at(v)].push_back(i * k + j);
        }
    HalveResult out;
    out.blown_lists = ListAssignment(std::move(blown));
    auto r = find_list_coloring(g, out.blown_lists, m * k, node_budget);
    out.status = r.status;
    if (r.status != SearchStatus::Found) return out;
    out.blown_choice = r.choice;

    out.coloring.assign(at(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> hits(palette.size(), 0);
        for (Color x : (*r.choice)[v]) ++hits[at(x / k)];
        for (std::size_t i = 0; i < hits.size() && out.coloring[at(v)] < 0; ++i)
            if (2 * hits[i] > k) out.coloring[at(v)] = palette[i];
        if (out.coloring[at(v)] < 0) throw std::logic_error("halve_choice: no block holds a majority");
    }
    for (const Edge& e : g.edges())
        if (out.coloring[at(e.u)] == out.coloring[at(e.v)])
            throw std::logic_error("halve_choice: extracted colouring is not proper");
    return out;
}

}  // namespace abch
