#include "spokit/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace spokit {

namespace {

void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Engine::Engine(const Presentation& p, std::size_t scale)
    : num_symbols_(p.alphabet.size()), scale_(scale), budget_(p.budget) {
    margin_ = std::max<std::size_t>(1, p.effective_margin());
    switch (p.data.index()) {
        case 0:
            exact_ = true;
            build_sft(p);
            break;
        case 1:
            exact_ = true;
            build_sofic(p);
            break;
        case 2:
            build_coded(std::get<CodedData>(p.data).words);
            break;
        case 3:
            build_spo(p);
            break;
        case 4:
            build_markov(p);
            break;
        case 5:
            build_exclusion(p);
            break;
    }
    build_prev();
    if (exact_) {
        trim_exact();
    } else {
        compute_margin_sets();
    }
    has_words_ = false;
    for (Symbol a = 0; a < num_symbols_ && !has_words_; ++a) {
        has_words_ = !step(start_set_, a).empty();
    }
}

void Engine::add_edge(int from, Symbol a, int to) {
    next_[static_cast<std::size_t>(from) * num_symbols_ + a].push_back(to);
}

void Engine::build_prev() {
    prev_.assign(static_cast<std::size_t>(num_states_) * num_symbols_, {});
    for (int s = 0; s < num_states_; ++s) {
        for (std::size_t a = 0; a < num_symbols_; ++a) {
            for (int t : next_[s * num_symbols_ + a]) {
                prev_[static_cast<std::size_t>(t) * num_symbols_ + a].push_back(s);
            }
        }
    }
}

void Engine::build_sft(const Presentation& p) {
    const auto& forb = std::get<SftData>(p.data).forbidden;
    std::size_t m = 1;
    for (const auto& f : forb) m = std::max(m, f.size());
    const std::size_t blk = m - 1;
    const std::size_t q = num_symbols_;

    double est = blk * std::log(static_cast<double>(q));
    if (est > std::log(static_cast<double>(budget_))) {
        throw ResourceError("block state space exceeds the work budget");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < blk; ++i) total *= q;

    auto decode = [&](std::size_t id) {
        Word b(blk);
        for (std::size_t i = blk; i-- > 0;) {
            b[i] = static_cast<Symbol>(id % q);
            id /= q;
        }
        return b;
    };
    auto clean = [&](const Word& w) {
        for (const auto& f : forb) {
            if (is_factor(f, w)) return false;
        }
        return true;
    };

    num_states_ = static_cast<int>(total);
    next_.assign(total * q, {});
    end_syms_.assign(total, {});
    std::vector<std::uint8_t> ok(total, 0);
    for (std::size_t id = 0; id < total; ++id) {
        ok[id] = clean(decode(id)) ? 1 : 0;
    }
    for (std::size_t id = 0; id < total; ++id) {
        if (!ok[id]) continue;
        Word b = decode(id);
        for (Symbol a = 0; a < q; ++a) {
            Word u = b;
            u.push_back(a);
            bool bad = false;
            for (const auto& f : forb) {
                if (f.size() <= u.size() && is_suffix(f, u)) {
                    bad = true;
                    break;
                }
            }
            if (bad) continue;
            std::size_t tid = 0;
            if (blk > 0) tid = (id % (total / q)) * q + a;
            if (!ok[tid]) continue;
            add_edge(static_cast<int>(id), a, static_cast<int>(tid));
        }
    }
    for (std::size_t id = 0; id < total; ++id) {
        if (ok[id]) entries_.push_back(static_cast<int>(id));
    }
}

void Engine::build_sofic(const Presentation& p) {
    const auto& d = std::get<SoficData>(p.data);
    num_states_ = static_cast<int>(d.state_names.size());
    next_.assign(static_cast<std::size_t>(num_states_) * num_symbols_, {});
    end_syms_.assign(num_states_, {});
    for (const auto& e : d.edges) add_edge(e.from, e.label, e.to);
    for (int s = 0; s < num_states_; ++s) entries_.push_back(s);
}

void Engine::build_coded(const std::vector<Word>& words) {
    std::vector<int> base;
    int n = 0;
    for (const auto& w : words) {
        base.push_back(n);
        n += static_cast<int>(w.size());
    }
    num_states_ = n;
    next_.assign(static_cast<std::size_t>(n) * num_symbols_, {});
    end_syms_.assign(n, {});
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        int b = base[i];
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            add_edge(b + static_cast<int>(pos), w[pos], b + static_cast<int>(pos) + 1);
        }
        int last = b + static_cast<int>(w.size()) - 1;
        for (int e : base) add_edge(last, w.back(), e);
        end_syms_[last].push_back(w.back());
        entries_.push_back(b);
    }
}

void Engine::build_spo(const Presentation& p) {
    const auto& d = std::get<SpoData>(p.data);
    std::vector<int> base;
    int n = 0;
    for (const auto& mw : d.words) {
        base.push_back(n);
        n += static_cast<int>(mw.word.size());
    }
    std::vector<int> fbase;
    for (const auto& w : d.flagged_words) {
        fbase.push_back(n);
        n += static_cast<int>(w.size());
    }
    num_states_ = n;
    next_.assign(static_cast<std::size_t>(n) * num_symbols_, {});
    end_syms_.assign(n, {});
    for (std::size_t i = 0; i < d.words.size(); ++i) {
        const Word& w = d.words[i].word;
        int b = base[i];
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            add_edge(b + static_cast<int>(pos), w[pos], b + static_cast<int>(pos) + 1);
        }
        std::size_t ring = d.words[i].word.size() - d.words[i].suffix_len;
        int ring_last = b + static_cast<int>(ring) - 1;
        for (std::size_t j = 0; j < d.words.size(); ++j) {
            if (chainable(d.words[i], d.words[j])) {
                add_edge(ring_last, w[ring - 1], base[j]);
            }
        }
        end_syms_[b + static_cast<int>(w.size()) - 1].push_back(w.back());
        entries_.push_back(b);
    }
    for (std::size_t i = 0; i < d.flagged_words.size(); ++i) {
        const Word& w = d.flagged_words[i];
        int b = fbase[i];
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            add_edge(b + static_cast<int>(pos), w[pos], b + static_cast<int>(pos) + 1);
        }
        end_syms_[b + static_cast<int>(w.size()) - 1].push_back(w.back());
        entries_.push_back(b);
    }
}

void Engine::build_markov(const Presentation& p) {
    const auto& d = std::get<MarkovData>(p.data);
    std::vector<int> base;
    int n = 0;
    for (const auto& w : d.words) {
        base.push_back(n);
        n += static_cast<int>(w.size());
    }
    num_states_ = n;
    next_.assign(static_cast<std::size_t>(n) * num_symbols_, {});
    end_syms_.assign(n, {});
    for (std::size_t i = 0; i < d.words.size(); ++i) {
        const Word& w = d.words[i];
        int b = base[i];
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            add_edge(b + static_cast<int>(pos), w[pos], b + static_cast<int>(pos) + 1);
        }
        int last = b + static_cast<int>(w.size()) - 1;
        for (std::size_t j = 0; j < d.words.size(); ++j) {
            if (d.transition[i][j]) add_edge(last, w.back(), base[j]);
        }
        end_syms_[last].push_back(w.back());
        entries_.push_back(b);
    }
}

void Engine::build_exclusion(const Presentation& p) {
    const auto& d = std::get<ExclusionData>(p.data);
    length_capped_ = true;
    std::size_t horizon = scale_ + 2 * margin_;
    std::vector<Word> excl = d.exclusions->words_up_to(horizon);

    // keyword automaton over the excluded words
    struct Node {
        std::map<Symbol, int> child;
        int fail = 0;
        bool hit = false;
        bool dead = false;
    };
    std::vector<Node> ac(1);
    for (const auto& w : excl) {
        int u = 0;
        for (Symbol a : w) {
            auto it = ac[u].child.find(a);
            if (it == ac[u].child.end()) {
                ac.push_back(Node{});
                it = ac[u].child.emplace(a, static_cast<int>(ac.size()) - 1).first;
            }
            u = it->second;
        }
        ac[u].hit = true;
    }
    std::vector<std::vector<int>> delta(ac.size(), std::vector<int>(num_symbols_, 0));
    std::queue<int> bfs;
    for (Symbol a = 0; a < num_symbols_; ++a) {
        auto it = ac[0].child.find(a);
        if (it != ac[0].child.end()) {
            ac[it->second].fail = 0;
            delta[0][a] = it->second;
            bfs.push(it->second);
        }
    }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        ac[u].dead = ac[u].hit || ac[ac[u].fail].dead;
        for (Symbol a = 0; a < num_symbols_; ++a) {
            auto it = ac[u].child.find(a);
            if (it != ac[u].child.end()) {
                ac[it->second].fail = delta[ac[u].fail][a];
                delta[u][a] = it->second;
                bfs.push(it->second);
            } else {
                delta[u][a] = delta[ac[u].fail][a];
            }
        }
    }

    // bare concatenation graph over the code words
    const auto& words = d.words;
    std::vector<int> fbase;
    int fn = 0;
    for (const auto& w : words) {
        fbase.push_back(fn);
        fn += static_cast<int>(w.size());
    }
    auto flower_edges = [&](int s) {
        std::vector<std::pair<Symbol, int>> out;
        for (std::size_t i = 0; i < words.size(); ++i) {
            int b = fbase[i];
            int len = static_cast<int>(words[i].size());
            if (s < b || s >= b + len) continue;
            int pos = s - b;
            if (pos + 1 < len) {
                out.emplace_back(words[i][pos], s + 1);
            } else {
                for (int e : fbase) out.emplace_back(words[i].back(), e);
            }
            break;
        }
        return out;
    };
    auto flower_end = [&](int s) -> std::optional<Symbol> {
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (s == fbase[i] + static_cast<int>(words[i].size()) - 1) {
                return words[i].back();
            }
        }
        return std::nullopt;
    };

    // product of the two, built over reachable pairs
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](int f, int a) {
        auto it = id.find({f, a});
        if (it != id.end()) return it->second;
        int k = static_cast<int>(pairs.size());
        if (pairs.size() >= budget_) {
            throw ResourceError("exclusion product exceeds the work budget");
        }
        id[{f, a}] = k;
        pairs.emplace_back(f, a);
        return k;
    };
    std::queue<int> work;
    for (int e : fbase) {
        entries_.push_back(intern(e, 0));
    }
    for (int e : entries_) work.push(e);
    std::vector<std::vector<std::pair<Symbol, int>>> edges_tmp;
    std::vector<std::vector<Symbol>> ends_tmp;
    while (!work.empty()) {
        int s = work.front();
        work.pop();
        if (static_cast<std::size_t>(s) >= edges_tmp.size()) {
            edges_tmp.resize(s + 1);
            ends_tmp.resize(s + 1);
        }
        auto [f, a] = pairs[s];
        for (auto [sym, f2] : flower_edges(f)) {
            int a2 = delta[a][sym];
            if (ac[a2].dead) continue;
            std::size_t before = pairs.size();
            int t = intern(f2, a2);
            edges_tmp[s].emplace_back(sym, t);
            if (pairs.size() > before) work.push(t);
        }
        if (auto es = flower_end(f)) {
            if (!ac[delta[a][*es]].dead) ends_tmp[s].push_back(*es);
        }
    }
    num_states_ = static_cast<int>(pairs.size());
    next_.assign(static_cast<std::size_t>(num_states_) * num_symbols_, {});
    end_syms_.assign(num_states_, {});
    edges_tmp.resize(num_states_);
    ends_tmp.resize(num_states_);
    for (int s = 0; s < num_states_; ++s) {
        for (auto [sym, t] : edges_tmp[s]) add_edge(s, sym, t);
        end_syms_[s] = ends_tmp[s];
    }
}

void Engine::trim_exact() {
    std::vector<int> outd(num_states_, 0), ind(num_states_, 0);
    std::vector<std::uint8_t> alive(num_states_, 1);
    for (int s = 0; s < num_states_; ++s) {
        for (std::size_t a = 0; a < num_symbols_; ++a) {
            for (int t : next_[s * num_symbols_ + a]) {
                outd[s]++;
                ind[t]++;
            }
        }
    }
    std::queue<int> dead;
    for (int s = 0; s < num_states_; ++s) {
        if (outd[s] == 0 || ind[s] == 0) {
            alive[s] = 0;
            dead.push(s);
        }
    }
    while (!dead.empty()) {
        int s = dead.front();
        dead.pop();
        for (std::size_t a = 0; a < num_symbols_; ++a) {
            for (int t : next_[s * num_symbols_ + a]) {
                if (alive[t] && --ind[t] == 0) {
                    alive[t] = 0;
                    dead.push(t);
                }
            }
            for (int t : prev_[s * num_symbols_ + a]) {
                if (alive[t] && --outd[t] == 0) {
                    alive[t] = 0;
                    dead.push(t);
                }
            }
        }
    }
    for (int s = 0; s < num_states_; ++s) {
        for (std::size_t a = 0; a < num_symbols_; ++a) {
            auto& v = next_[s * num_symbols_ + a];
            if (!alive[s]) {
                v.clear();
                continue;
            }
            v.erase(std::remove_if(v.begin(), v.end(), [&](int t) { return !alive[t]; }),
                    v.end());
        }
    }
    build_prev();
    in_fstar_.assign(num_states_, 0);
    in_bstar_.assign(num_states_, 0);
    entries_.clear();
    start_set_.clear();
    bstar_set_.clear();
    for (int s = 0; s < num_states_; ++s) {
        if (alive[s]) {
            in_fstar_[s] = 1;
            in_bstar_[s] = 1;
            entries_.push_back(s);
            start_set_.push_back(s);
            bstar_set_.push_back(s);
        }
    }
}

void Engine::compute_margin_sets() {
    // forward side: states reachable from a product start with at least
    // `margin` symbols already emitted
    std::vector<std::uint8_t> layer(num_states_, 0);
    for (int e : entries_) layer[e] = 1;
    for (std::size_t j = 0; j < margin_; ++j) {
        std::vector<std::uint8_t> nl(num_states_, 0);
        for (int s = 0; s < num_states_; ++s) {
            if (!layer[s]) continue;
            for (std::size_t a = 0; a < num_symbols_; ++a) {
                for (int t : next_[s * num_symbols_ + a]) nl[t] = 1;
            }
        }
        layer.swap(nl);
    }
    in_fstar_.assign(num_states_, 0);
    std::queue<int> q;
    for (int s = 0; s < num_states_; ++s) {
        if (layer[s]) {
            in_fstar_[s] = 1;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (std::size_t a = 0; a < num_symbols_; ++a) {
            for (int t : next_[s * num_symbols_ + a]) {
                if (!in_fstar_[t]) {
                    in_fstar_[t] = 1;
                    q.push(t);
                }
            }
        }
    }

    // backward side: states from which a product end is still at least
    // `margin` emissions away
    std::vector<std::uint8_t> blayer(num_states_, 0);
    for (int s = 0; s < num_states_; ++s) {
        if (!end_syms_[s].empty()) blayer[s] = 1;
    }
    for (std::size_t j = 1; j < margin_; ++j) {
        std::vector<std::uint8_t> nl(num_states_, 0);
        for (int s = 0; s < num_states_; ++s) {
            if (!blayer[s]) continue;
            for (std::size_t a = 0; a < num_symbols_; ++a) {
                for (int t : prev_[s * num_symbols_ + a]) nl[t] = 1;
            }
        }
        blayer.swap(nl);
    }
    in_bstar_.assign(num_states_, 0);
    for (int s = 0; s < num_states_; ++s) {
        if (blayer[s]) {
            in_bstar_[s] = 1;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (std::size_t a = 0; a < num_symbols_; ++a) {
            for (int t : prev_[s * num_symbols_ + a]) {
                if (!in_bstar_[t]) {
                    in_bstar_[t] = 1;
                    q.push(t);
                }
            }
        }
    }
    start_set_.clear();
    bstar_set_.clear();
    for (int s = 0; s < num_states_; ++s) {
        if (in_fstar_[s]) start_set_.push_back(s);
        if (in_bstar_[s]) bstar_set_.push_back(s);
    }
}

Engine::StateSet Engine::step(const StateSet& s, Symbol a) const {
    StateSet out;
    for (int x : s) {
        for (int t : next_[static_cast<std::size_t>(x) * num_symbols_ + a]) {
            if (in_bstar_[t]) out.push_back(t);
        }
    }
    sort_unique(out);
    return out;
}

Engine::StateSet Engine::raw_step(const StateSet& s, Symbol a) const {
    StateSet out;
    for (int x : s) {
        for (int t : next_[static_cast<std::size_t>(x) * num_symbols_ + a]) {
            out.push_back(t);
        }
    }
    sort_unique(out);
    return out;
}

Engine::StateSet Engine::reverse_step(const StateSet& s, Symbol a) const {
    StateSet out;
    for (int x : s) {
        for (int t : prev_[static_cast<std::size_t>(x) * num_symbols_ + a]) {
            if (in_fstar_[t]) out.push_back(t);
        }
    }
    sort_unique(out);
    return out;
}

Engine::StateSet Engine::simulate(const Word& w) const {
    if (w.empty()) throw DomainError("empty word");
    if (length_capped_ && w.size() > scale_)
        throw DomainError("word longer than the compiled horizon");
    StateSet s = start_set_;
    for (Symbol a : w) {
        if (a >= num_symbols_) throw DomainError("symbol out of range");
        s = step(s, a);
        if (s.empty()) break;
    }
    return s;
}

bool Engine::admissible(const Word& w) const { return !simulate(w).empty(); }

std::vector<Word> Engine::language(std::size_t n) const {
    if (length_capped_ && n > scale_)
        throw DomainError("enumeration beyond the compiled horizon");
    std::vector<Word> out;
    std::size_t nodes = 0;
    Word cur;
    auto dfs = [&](auto&& self, const StateSet& s) -> void {
        if (cur.size() >= n) return;
        for (Symbol a = 0; a < num_symbols_; ++a) {
            StateSet t = step(s, a);
            if (t.empty()) continue;
            if (++nodes > budget_ || out.size() >= budget_) {
                throw ResourceError("language enumeration exceeds the work budget");
            }
            cur.push_back(a);
            out.push_back(cur);
            self(self, t);
            cur.pop_back();
        }
    };
    dfs(dfs, start_set_);
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

Engine::Counts Engine::counts(std::size_t n) const {
    if (length_capped_ && n > scale_)
        throw DomainError("enumeration beyond the compiled horizon");
    Counts res;
    res.count.assign(n, 0);
    res.count_exact.assign(n, true);
    res.log_count.assign(n, 0.0);

    std::map<StateSet, int> id;
    std::vector<StateSet> sets;
    std::vector<std::vector<int>> dnext;
    auto intern = [&](const StateSet& s) {
        auto it = id.find(s);
        if (it != id.end()) return it->second;
        if (sets.size() >= budget_) {
            throw ResourceError("count automaton exceeds the work budget");
        }
        int k = static_cast<int>(sets.size());
        id[s] = k;
        sets.push_back(s);
        dnext.emplace_back();
        return k;
    };
    auto expand = [&](int k) {
        if (!dnext[k].empty()) return;
        dnext[k].assign(num_symbols_, -1);
        for (Symbol a = 0; a < num_symbols_; ++a) {
            StateSet t = step(sets[k], a);
            if (!t.empty()) dnext[k][a] = intern(t);
        }
    };

    int root = intern(start_set_);
    std::vector<double> v(1, 1.0);
    std::vector<std::uint64_t> cv(1, 1);
    double logscale = 0.0;
    bool saturated = false;
    const std::uint64_t satmax = std::numeric_limits<std::uint64_t>::max();
    (void)root;

    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t cur_states = sets.size();
        for (std::size_t s = 0; s < cur_states; ++s) {
            if (v[s] > 0.0 || cv[s] > 0) expand(static_cast<int>(s));
        }
        std::vector<double> nv(sets.size(), 0.0);
        std::vector<std::uint64_t> ncv(sets.size(), 0);
        for (std::size_t s = 0; s < cur_states; ++s) {
            if (v[s] <= 0.0 && cv[s] == 0) continue;
            for (std::size_t a = 0; a < num_symbols_; ++a) {
                int t = dnext[s][a];
                if (t < 0) continue;
                nv[t] += v[s];
                if (!saturated) {
                    if (ncv[t] > satmax - cv[s]) {
                        saturated = true;
                    } else {
                        ncv[t] += cv[s];
                    }
                }
            }
        }
        double total = 0.0;
        std::uint64_t ctotal = 0;
        for (std::size_t s = 0; s < nv.size(); ++s) {
            total += nv[s];
            if (!saturated) {
                if (ctotal > satmax - ncv[s]) {
                    saturated = true;
                } else {
                    ctotal += ncv[s];
                }
            }
        }
        res.count[k - 1] = saturated ? satmax : ctotal;
        res.count_exact[k - 1] = !saturated;
        res.log_count[k - 1] = (total > 0.0) ? std::log(total) + logscale : 0.0;
        if (total <= 0.0) res.count[k - 1] = 0;

        double mx = 0.0;
        for (double x : nv) mx = std::max(mx, x);
        if (mx > 1e250) {
            for (double& x : nv) x /= mx;
            logscale += std::log(mx);
        }
        v.swap(nv);
        cv.swap(ncv);
    }
    return res;
}

std::vector<Word> Engine::followers(const Word& w, std::size_t depth) const {
    if (length_capped_ && w.size() + depth > scale_)
        throw DomainError("extension beyond the compiled horizon");
    StateSet s = simulate(w);
    if (s.empty()) throw DomainError("word is not admissible");
    std::vector<Word> out;
    std::size_t nodes = 0;
    Word cur;
    auto dfs = [&](auto&& self, const StateSet& set) -> void {
        if (cur.size() >= depth) return;
        for (Symbol a = 0; a < num_symbols_; ++a) {
            StateSet t = step(set, a);
            if (t.empty()) continue;
            if (++nodes > budget_) {
                throw ResourceError("follower enumeration exceeds the work budget");
            }
            cur.push_back(a);
            out.push_back(cur);
            self(self, t);
            cur.pop_back();
        }
    };
    dfs(dfs, s);
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

std::vector<Word> Engine::predecessors(const Word& w, std::size_t depth) const {
    if (w.empty()) throw DomainError("empty word");
    if (length_capped_ && w.size() + depth > scale_)
        throw DomainError("extension beyond the compiled horizon");
    StateSet u = bstar_set_;
    for (std::size_t i = w.size(); i-- > 0;) {
        StateSet nu;
        for (int x : u) {
            for (int t : prev_[static_cast<std::size_t>(x) * num_symbols_ + w[i]]) {
                if (in_fstar_[t]) nu.push_back(t);
            }
        }
        sort_unique(nu);
        u.swap(nu);
        if (u.empty()) break;
    }
    if (u.empty()) throw DomainError("word is not admissible");
    std::vector<Word> out;
    std::size_t nodes = 0;
    Word cur;  // built reversed
    auto dfs = [&](auto&& self, const StateSet& set) -> void {
        if (cur.size() >= depth) return;
        for (Symbol a = 0; a < num_symbols_; ++a) {
            StateSet t = reverse_step(set, a);
            if (t.empty()) continue;
            if (++nodes > budget_) {
                throw ResourceError("predecessor enumeration exceeds the work budget");
            }
            cur.push_back(a);
            Word b(cur.rbegin(), cur.rend());
            out.push_back(b);
            self(self, t);
            cur.pop_back();
        }
    };
    dfs(dfs, u);
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

bool Engine::extendable_right(const Word& w) const {
    StateSet s = simulate(w);
    if (s.empty()) throw DomainError("word is not admissible");
    for (Symbol a = 0; a < num_symbols_; ++a) {
        if (!step(s, a).empty()) return true;
    }
    return false;
}

bool Engine::extendable_left(const Word& w) const {
    if (w.empty()) throw DomainError("empty word");
    StateSet u = bstar_set_;
    for (std::size_t i = w.size(); i-- > 0;) {
        StateSet nu;
        for (int x : u) {
            for (int t : prev_[static_cast<std::size_t>(x) * num_symbols_ + w[i]]) {
                if (in_fstar_[t]) nu.push_back(t);
            }
        }
        sort_unique(nu);
        u.swap(nu);
        if (u.empty()) break;
    }
    if (u.empty()) throw DomainError("word is not admissible");
    for (Symbol a = 0; a < num_symbols_; ++a) {
        if (!reverse_step(u, a).empty()) return true;
    }
    return false;
}

std::vector<Word> Engine::product_words(std::size_t n) const {
    if (exact_) throw DomainError("presentation has no concatenation structure");
    if (length_capped_ && n > scale_)
        throw DomainError("enumeration beyond the compiled horizon");
    std::vector<Word> out;
    std::size_t nodes = 0;
    Word cur;
    StateSet start(entries_.begin(), entries_.end());
    sort_unique(start);
    auto dfs = [&](auto&& self, const StateSet& s) -> void {
        if (cur.size() >= n) return;
        for (Symbol a = 0; a < num_symbols_; ++a) {
            bool ends = false;
            for (int x : s) {
                for (Symbol e : end_syms_[x]) {
                    if (e == a) ends = true;
                }
            }
            StateSet t = raw_step(s, a);
            if (!ends && t.empty()) continue;
            if (++nodes > budget_ || out.size() >= budget_) {
                throw ResourceError("product enumeration exceeds the work budget");
            }
            cur.push_back(a);
            if (ends) out.push_back(cur);
            if (!t.empty()) self(self, t);
            cur.pop_back();
        }
    };
    dfs(dfs, start);
    std::sort(out.begin(), out.end(), shortlex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Engine::is_product_word(const Word& w) const {
    if (exact_) throw DomainError("presentation has no concatenation structure");
    if (w.empty()) return false;
    if (length_capped_ && w.size() > scale_)
        throw DomainError("word longer than the compiled horizon");
    StateSet s(entries_.begin(), entries_.end());
    sort_unique(s);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        s = raw_step(s, w[i]);
        if (s.empty()) return false;
    }
    for (int x : s) {
        for (Symbol e : end_syms_[x]) {
            if (e == w.back()) return true;
        }
    }
    return false;
}

std::vector<std::vector<std::int64_t>> Engine::adjacency() const {
    if (!exact_) throw DomainError("edge counts need an exact presentation");
    std::size_t n = start_set_.size();
    std::vector<int> pos(num_states_, -1);
    for (std::size_t i = 0; i < n; ++i) pos[start_set_[i]] = static_cast<int>(i);
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        int s = start_set_[i];
        for (std::size_t a = 0; a < num_symbols_; ++a) {
            for (int t : next_[static_cast<std::size_t>(s) * num_symbols_ + a]) {
                if (pos[t] >= 0) m[i][pos[t]]++;
            }
        }
    }
    return m;
}

std::optional<Engine::SyncCert> Engine::exact_synchronizing(const Word& w) const {
    if (!exact_) return std::nullopt;
    StateSet full = start_set_;
    if (full.empty()) return std::nullopt;

    // subset family reachable from the full state set, with back pointers
    // so a refuting left context can be reconstructed
    std::map<StateSet, std::pair<StateSet, Symbol>> parent;
    std::deque<StateSet> work;
    parent.emplace(full, std::make_pair(StateSet{}, Symbol{0}));
    work.push_back(full);
    while (!work.empty()) {
        StateSet s = work.front();
        work.pop_front();
        for (Symbol a = 0; a < num_symbols_; ++a) {
            StateSet t = step(s, a);
            if (t.empty()) continue;
            if (parent.emplace(t, std::make_pair(s, a)).second) {
                if (parent.size() > budget_) {
                    throw ResourceError("subset family exceeds the work budget");
                }
                work.push_back(t);
            }
        }
    }

    auto run = [&](StateSet s) {
        for (Symbol a : w) {
            s = step(s, a);
            if (s.empty()) break;
        }
        return s;
    };
    StateSet target = run(full);
    if (target.empty()) return std::nullopt;

    // r is always a subset of target, so its right language is contained in
    // the target's; w fails to synchronize only if some context leaves a
    // strictly smaller right language, witnessed by a word dead from r but
    // alive from the target
    auto right_gap = [&](const StateSet& r) -> std::optional<Word> {
        using Pair = std::pair<StateSet, StateSet>;
        std::map<Pair, std::pair<Pair, Symbol>> seen;
        std::deque<Pair> queue;
        Pair start{r, target};
        seen.emplace(start, std::make_pair(Pair{}, Symbol{0}));
        queue.push_back(start);
        while (!queue.empty()) {
            Pair cur = queue.front();
            queue.pop_front();
            for (Symbol a = 0; a < num_symbols_; ++a) {
                StateSet tr = step(cur.first, a);
                StateSet tt = step(cur.second, a);
                if (tt.empty()) continue;
                if (tr.empty()) {
                    Word u{a};
                    Pair walk = cur;
                    while (walk != start) {
                        auto& link = seen.at(walk);
                        u.push_back(link.second);
                        walk = link.first;
                    }
                    std::reverse(u.begin(), u.end());
                    return u;
                }
                if (tr == tt) continue;
                Pair nxt{tr, tt};
                if (seen.emplace(nxt, std::make_pair(cur, a)).second) {
                    if (seen.size() > budget_) {
                        throw ResourceError("equivalence search exceeds the work budget");
                    }
                    queue.push_back(nxt);
                }
            }
        }
        return std::nullopt;
    };

    for (const auto& entry : parent) {
        const StateSet& s = entry.first;
        StateSet r = run(s);
        if (r.empty() || r == target) continue;
        auto gap = right_gap(r);
        if (!gap) continue;
        Word u_minus;
        StateSet walk = s;
        while (walk != full) {
            auto& link = parent.at(walk);
            u_minus.push_back(link.second);
            walk = link.first;
        }
        std::reverse(u_minus.begin(), u_minus.end());
        return SyncCert{false, u_minus, *gap};
    }
    return SyncCert{true, {}, {}};
}

}  // namespace spokit
