#include "spokit/synchro.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spokit {

namespace {

Word glue(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word glue3(const Word& a, const Word& b, const Word& c) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

}  // namespace

SynchroVerdict is_synchronizing_at_depth(const Engine& eng, const Word& w,
                                         std::size_t depth) {
    if (w.empty() || !eng.admissible(w)) {
        throw DomainError("synchronizing test needs an admissible word");
    }
    SynchroVerdict v;
    v.word = w;
    v.depth = depth;
    if (eng.exact()) {
        auto cert = eng.exact_synchronizing(w);
        if (cert) {
            v.exact = true;
            v.synchronizing = cert->sync;
            v.refuted_left = cert->left;
            v.refuted_right = cert->right;
            return v;
        }
    }
    auto preds = eng.predecessors(w, depth);
    auto fols = eng.followers(w, depth);
    for (const auto& um : preds) {
        Word uw = glue(um, w);
        for (const auto& up : fols) {
            if (!eng.admissible(glue(uw, up))) {
                v.synchronizing = false;
                v.refuted_left = um;
                v.refuted_right = up;
                return v;
            }
        }
    }
    v.synchronizing = true;
    return v;
}

JProfile j_profile(const Engine& eng, const Word& w, std::size_t depth) {
    if (w.empty() || !eng.admissible(w)) {
        throw DomainError("profile window must be admissible");
    }
    JProfile prof;
    prof.window = w;
    prof.depth = depth;
    prof.values.resize(w.size());
    std::map<Word, bool> cache;
    auto sync = [&](const Word& sub) {
        auto it = cache.find(sub);
        if (it != cache.end()) return it->second;
        bool s = is_synchronizing_at_depth(eng, sub, depth).synchronizing;
        cache.emplace(sub, s);
        return s;
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j-- > 0;) {
            Word sub(w.begin() + static_cast<long>(j),
                     w.begin() + static_cast<long>(i) + 1);
            if (sync(sub)) {
                prof.values[i] = j;
                break;
            }
        }
    }
    return prof;
}

CanonicalCodeResult extract_canonical_code(const Engine& eng,
                                           const Alphabet& alphabet,
                                           std::size_t max_len,
                                           std::size_t depth) {
    CanonicalCodeResult res;
    res.max_len = max_len;
    res.depth = depth;

    if (eng.exact()) {
        // transitivity at the tested scale: the live graph is strongly
        // connected
        auto adj = eng.adjacency();
        std::size_t n = adj.size();
        if (n == 0) {
            res.transitive = false;
        } else {
            auto reach = [&](bool forward) {
                std::vector<char> seen(n, 0);
                std::vector<std::size_t> work{0};
                seen[0] = 1;
                while (!work.empty()) {
                    std::size_t s = work.back();
                    work.pop_back();
                    for (std::size_t t = 0; t < n; ++t) {
                        bool edge = forward ? adj[s][t] > 0 : adj[t][s] > 0;
                        if (edge && !seen[t]) {
                            seen[t] = 1;
                            work.push_back(t);
                        }
                    }
                }
                return seen;
            };
            auto fwd = reach(true);
            auto bwd = reach(false);
            bool conn = true;
            for (std::size_t s = 0; s < n; ++s) {
                if (!fwd[s] || !bwd[s]) conn = false;
            }
            res.transitive = conn;
        }
    }

    auto lang = eng.language(max_len);
    std::set<Word> sync_set;
    bool all_exact = true;
    for (const auto& w : lang) {
        auto v = is_synchronizing_at_depth(eng, w, depth);
        if (v.synchronizing) {
            sync_set.insert(w);
            if (!v.exact) all_exact = false;
        }
    }
    if (sync_set.empty()) {
        res.diagnostic = "no synchronizing word found within the bounds";
        return res;
    }
    res.all_exact = all_exact;

    for (const auto& w : sync_set) {
        bool minimal = true;
        for (std::size_t len = 1; minimal && len < w.size(); ++len) {
            for (std::size_t off = 0; off + len <= w.size(); ++off) {
                Word sub(w.begin() + static_cast<long>(off),
                         w.begin() + static_cast<long>(off + len));
                if (sync_set.count(sub)) {
                    minimal = false;
                    break;
                }
            }
        }
        if (minimal) res.minimal_words.push_back(w);
    }
    std::sort(res.minimal_words.begin(), res.minimal_words.end(),
              shortlex_less);

    // occurrences of minimal words inside a synchronizing candidate; a code
    // word has exactly the designated proper prefix and proper suffix
    // occurrence and nothing else
    for (const auto& s : sync_set) {
        std::size_t total = 0;
        bool at_front = false;
        bool at_back = false;
        for (const auto& mu : res.minimal_words) {
            if (mu.size() >= s.size()) continue;
            for (std::size_t off = 0; off + mu.size() <= s.size(); ++off) {
                if (!std::equal(mu.begin(), mu.end(),
                                s.begin() + static_cast<long>(off))) {
                    continue;
                }
                ++total;
                if (off == 0) at_front = true;
                if (off + mu.size() == s.size()) at_back = true;
            }
        }
        if (total == 2 && at_front && at_back) res.code_words.push_back(s);
    }
    std::sort(res.code_words.begin(), res.code_words.end(), shortlex_less);

    for (std::size_t i = 0; i < res.minimal_words.size(); ++i) {
        for (std::size_t j = 0; j < res.minimal_words.size(); ++j) {
            if (i == j) continue;
            const Word& a = res.minimal_words[i];
            const Word& b = res.minimal_words[j];
            if (a.size() < b.size() && (is_prefix(a, b) || is_suffix(a, b))) {
                res.bifix_violations.emplace_back(a, b);
            }
        }
    }
    if (res.bifix_violations.empty()) {
        res.bifix = BifixCode(res.minimal_words);
        if (!res.code_words.empty()) {
            res.code = SpoCode(alphabet, *res.bifix, res.code_words);
        } else {
            res.diagnostic = "no code word found within the bounds";
        }
    } else {
        res.diagnostic = "minimal synchronizing words violate the bifix property";
    }
    return res;
}

ConditionHReport condition_h_report(const SpoCode& code, std::size_t n) {
    ConditionHReport rep;
    rep.max_len = n;
    for (const auto& mw : code.words()) {
        if (mw.word.size() > n) continue;
        ConditionHEntry e;
        e.word = mw.word;
        e.gap = static_cast<long>(mw.word.size()) -
                static_cast<long>(mw.prefix_len) -
                static_cast<long>(mw.suffix_len);
        rep.entries.push_back(e);
    }
    rep.flagged_skipped = code.flagged().size();
    rep.running_max.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
        std::optional<long> best;
        for (const auto& e : rep.entries) {
            if (e.word.size() > k) continue;
            if (!best || e.gap > *best) best = e.gap;
        }
        rep.running_max[k - 1] = best;
    }
    return rep;
}

bool condition_h_consistent(const ConditionHReport& r,
                            const std::vector<std::size_t>& lens) {
    std::optional<long> prev;
    for (std::size_t len : lens) {
        if (len == 0 || len > r.running_max.size()) return false;
        auto cur = r.running_max[len - 1];
        if (!cur) return false;
        if (prev && *cur <= *prev) return false;
        prev = cur;
    }
    return true;
}

MarkovBoundaryReport markov_boundary_test(const Engine& eng, const Word& a,
                                          std::size_t pred_len,
                                          std::size_t ctx_depth) {
    if (a.empty() || !eng.admissible(a)) {
        throw DomainError("boundary test needs an admissible word");
    }
    MarkovBoundaryReport rep;
    rep.word = a;
    rep.pred_len = pred_len;
    rep.ctx_depth = ctx_depth;
    auto preds = eng.predecessors(a, pred_len);
    std::vector<std::pair<std::size_t, std::vector<Word>>> fsets;
    for (const auto& b : preds) {
        fsets.emplace_back(b.size(), eng.followers(glue(b, a), ctx_depth));
    }
    for (std::size_t m = 1; m <= pred_len; ++m) {
        std::set<std::vector<Word>> distinct;
        for (const auto& fs : fsets) {
            if (fs.first <= m) distinct.insert(fs.second);
        }
        rep.distinct_counts.push_back(distinct.size());
    }
    rep.strictly_growing = rep.distinct_counts.size() > 1;
    for (std::size_t m = 1; m < rep.distinct_counts.size(); ++m) {
        if (rep.distinct_counts[m] <= rep.distinct_counts[m - 1]) {
            rep.strictly_growing = false;
        }
    }
    return rep;
}

std::vector<Word> omega_set_bounded(const Engine& eng, const Word& a,
                                    std::size_t depth) {
    if (a.empty() || !eng.admissible(a)) {
        throw DomainError("omega set needs an admissible word");
    }
    auto preds = eng.predecessors(a, depth);
    auto fols = eng.followers(a, depth);
    std::vector<Word> out;
    for (const auto& wp : fols) {
        bool all = true;
        for (const auto& wm : preds) {
            if (!eng.admissible(glue3(wm, a, wp))) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(wp);
    }
    return out;
}

std::vector<Word> omega_set_bounded_left(const Engine& eng, const Word& a,
                                         std::size_t depth) {
    if (a.empty() || !eng.admissible(a)) {
        throw DomainError("omega set needs an admissible word");
    }
    auto preds = eng.predecessors(a, depth);
    auto fols = eng.followers(a, depth);
    std::vector<Word> out;
    for (const auto& wm : preds) {
        bool all = true;
        for (const auto& wp : fols) {
            if (!eng.admissible(glue3(wm, a, wp))) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(wm);
    }
    return out;
}

}  // namespace spokit
