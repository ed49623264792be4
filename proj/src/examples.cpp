#include "spokit/examples.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace spokit {

namespace {

Word run_word(Symbol s, std::size_t count) {
    return Word(count, s);
}

void append(Word& w, const Word& t) {
    w.insert(w.end(), t.begin(), t.end());
}

Word mark_word(Symbol gamma, Symbol delta, std::size_t n) {
    Word w{gamma};
    append(w, run_word(delta, n));
    w.push_back(gamma);
    return w;
}

Word cycle_block(const Word& block, std::size_t len) {
    Word out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(block[i % block.size()]);
    return out;
}

}  // namespace

Example1 build_example1(const std::vector<std::string>& inner,
                        const std::vector<std::vector<std::size_t>>& periods,
                        std::size_t k_max) {
    if (inner.empty()) throw DomainError("inner alphabet must be nonempty");
    if (periods.empty()) throw DomainError("need at least one periodic point");
    if (k_max < 1) throw DomainError("k_max must be at least 1");

    std::vector<std::string> names{"g", "d"};
    for (const auto& s : inner) names.push_back(s);
    Alphabet alphabet(names);

    std::size_t R = 1;
    std::vector<Word> blocks;
    for (const auto& p : periods) {
        if (p.empty()) throw DomainError("period block must be nonempty");
        Word b;
        for (std::size_t idx : p) {
            if (idx >= inner.size()) throw DomainError("period symbol out of range");
            b.push_back(static_cast<Symbol>(2 + idx));
        }
        for (std::size_t d = 1; d < b.size(); ++d) {
            if (b.size() % d != 0) continue;
            bool drops = true;
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (b[i] != b[i % d]) drops = false;
            }
            if (drops) throw DomainError("period block is not a least period");
        }
        if (std::find(blocks.begin(), blocks.end(), b) != blocks.end()) {
            throw DomainError("duplicate periodic point");
        }
        blocks.push_back(b);
        R *= b.size();
        if (R > 100000) throw ResourceError("period product too large");
    }

    std::vector<Word> fwords;
    for (std::size_t n = 1; n <= k_max + 1; ++n) {
        fwords.push_back(mark_word(0, 1, n));
    }
    BifixCode bifix(fwords);

    std::vector<Word> words;
    for (const auto& b : blocks) {
        for (std::size_t q = 2; q <= k_max; ++q) {
            Word w = mark_word(0, 1, 1);
            append(w, cycle_block(b, 2 * q * R));
            append(w, mark_word(0, 1, 1));
            words.push_back(w);
        }
        for (std::size_t n = 1; n <= k_max; ++n) {
            for (std::size_t q = n; q <= k_max; ++q) {
                Word w = mark_word(0, 1, n);
                append(w, cycle_block(b, 2 * q * R));
                append(w, mark_word(0, 1, n + 1));
                words.push_back(w);
            }
        }
        for (std::size_t n = 2; n <= k_max; ++n) {
            for (std::size_t q = n; q <= k_max; ++q) {
                Word w = mark_word(0, 1, n);
                append(w, cycle_block(b, 2 * q * R));
                append(w, run_word(1, n - 1));
                words.push_back(w);
            }
        }
    }

    return Example1{alphabet, 0,     1,
                    blocks,   R,     k_max,
                    SpoCode(alphabet, bifix, words, true)};
}

Word example1_pblock(const Example1& ex, std::size_t period_index,
                     std::size_t len) {
    if (period_index >= ex.periods.size()) {
        throw DomainError("no such periodic point");
    }
    return cycle_block(ex.periods[period_index], len);
}

std::size_t example2_rk(std::size_t k) {
    return 1 + (k * (k - 1)) / 2;
}

Example2 build_example2(std::size_t K) {
    if (K < 1) throw DomainError("K must be at least 1");
    Alphabet alphabet({"g", "d", "0", "1"});

    auto pblock = [](std::size_t period, std::size_t len) {
        Word out;
        out.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            out.push_back(i % period == period - 1 ? Symbol{3} : Symbol{2});
        }
        return out;
    };

    std::size_t top = std::max(example2_rk(K), 2 * K - 1);
    std::vector<Word> fwords;
    for (std::size_t n = 1; n <= top; ++n) fwords.push_back(mark_word(0, 1, n));
    BifixCode bifix(fwords);

    std::vector<Word> words;
    for (std::size_t k = 1; k <= K; ++k) {
        Word w = mark_word(0, 1, k);
        append(w, pblock(1, 2 * k));
        append(w, mark_word(0, 1, example2_rk(k)));
        words.push_back(w);
        for (std::size_t m = 2; m <= k; ++m) {
            Word v = mark_word(0, 1, k);
            append(v, pblock(m, 2 * m * k));
            append(v, mark_word(0, 1, k + m - 1));
            words.push_back(v);
        }
    }
    return Example2{alphabet, 0, 1, 2, 3, K, SpoCode(alphabet, bifix, words)};
}

Word example2_pblock(const Example2& ex, std::size_t period, std::size_t len) {
    if (period < 1) throw DomainError("period must be positive");
    Word out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(i % period == period - 1 ? ex.one : ex.zero);
    }
    return out;
}

Word example2_bminus(const Example2& ex, std::size_t q, std::size_t k,
                     std::size_t m) {
    Word w = run_word(ex.delta, q);
    w.push_back(ex.gamma);
    append(w, example2_pblock(ex, k, 2 * m * k));
    return w;
}

Word example2_bplus(const Example2& ex, std::size_t q, std::size_t k,
                    std::size_t m) {
    Word w = example2_pblock(ex, k, 2 * k * m);
    w.push_back(ex.gamma);
    append(w, run_word(ex.delta, q));
    return w;
}

BoundaryReport verify_boundary_ex1(const Example1& ex, const Engine& eng,
                                   std::size_t n_max) {
    BoundaryReport rep;
    rep.which = "ex1";
    for (std::size_t pi = 0; pi < ex.periods.size(); ++pi) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            BoundaryInstance inst;
            inst.label = "p" + std::to_string(pi) + " n" + std::to_string(n);
            inst.base = run_word(ex.delta, n + 1);
            inst.base.push_back(ex.gamma);
            append(inst.base, example1_pblock(ex, pi, ex.R));
            inst.claimed_in = example1_pblock(ex, pi, n * ex.R);
            inst.claimed_in.push_back(ex.gamma);
            inst.claimed_out = example1_pblock(ex, pi, (n + 1) * ex.R);
            inst.claimed_out.push_back(ex.gamma);
            if (!eng.admissible(inst.base)) {
                inst.skipped = true;
                inst.note = "base word inadmissible at this truncation";
                rep.instances.push_back(inst);
                continue;
            }
            Word win = inst.base;
            append(win, inst.claimed_in);
            Word wout = inst.base;
            append(wout, inst.claimed_out);
            inst.in_holds = eng.admissible(win);
            inst.out_absent = !eng.admissible(wout);
            rep.instances.push_back(inst);
        }
    }
    return rep;
}

BoundaryReport verify_boundary_ex2(const Example2& ex, const Engine& eng,
                                   std::size_t k_bound, std::size_t m_bound,
                                   std::size_t extra) {
    BoundaryReport rep;
    rep.which = "ex2";
    for (std::size_t k = 1; k <= k_bound; ++k) {
        for (std::size_t q = 1; q <= k; ++q) {
            for (std::size_t m = 1; m <= m_bound; ++m) {
                std::size_t kcirc = q < k ? k - q : 0;
                for (std::size_t K = kcirc; K <= kcirc + extra; ++K) {
                    BoundaryInstance inst;
                    inst.label = "bminus q" + std::to_string(q) + " k" +
                                 std::to_string(k) + " m" + std::to_string(m) +
                                 " K" + std::to_string(K);
                    inst.base = Word{ex.gamma};
                    append(inst.base, run_word(ex.delta, K));
                    append(inst.base, example2_bminus(ex, m, k, q));
                    inst.claimed_in = example2_pblock(ex, m, 2 * m * k);
                    inst.claimed_in.push_back(ex.gamma);
                    inst.claimed_out = example2_pblock(ex, m, 2 * m * (K + 1));
                    inst.claimed_out.push_back(ex.gamma);
                    if (!eng.admissible(inst.base)) {
                        inst.skipped = true;
                        inst.note = "base word inadmissible at this truncation";
                        rep.instances.push_back(inst);
                        continue;
                    }
                    Word win = inst.base;
                    append(win, inst.claimed_in);
                    Word wout = inst.base;
                    append(wout, inst.claimed_out);
                    inst.in_holds = eng.admissible(win);
                    inst.out_absent = !eng.admissible(wout);
                    rep.instances.push_back(inst);
                }
            }
        }
    }
    for (std::size_t k = 1; k <= k_bound; ++k) {
        for (std::size_t q = 1; q <= k_bound; ++q) {
            for (std::size_t m = 1; m <= m_bound; ++m) {
                std::size_t mcirc = q > m ? q - m : 0;
                for (std::size_t M = mcirc; M <= mcirc + extra; ++M) {
                    std::size_t J = std::max(q, m) + M - mcirc;
                    BoundaryInstance inst;
                    inst.label = "bplus q" + std::to_string(q) + " k" +
                                 std::to_string(k) + " m" + std::to_string(m) +
                                 " M" + std::to_string(M);
                    inst.base = Word{ex.gamma};
                    append(inst.base, example2_pblock(ex, k, 2 * k * M));
                    append(inst.base, example2_bplus(ex, q, k, m));
                    std::size_t e = example2_rk(J) + J - q;
                    inst.claimed_in = run_word(ex.delta, e - 1);
                    inst.claimed_in.push_back(ex.gamma);
                    inst.claimed_out = run_word(ex.delta, e);
                    if (J > ex.K) {
                        inst.skipped = true;
                        inst.note = "claimed exponent beyond the truncation";
                        rep.instances.push_back(inst);
                        continue;
                    }
                    if (!eng.admissible(inst.base)) {
                        inst.skipped = true;
                        inst.note = "base word inadmissible at this truncation";
                        rep.instances.push_back(inst);
                        continue;
                    }
                    Word win = inst.base;
                    append(win, inst.claimed_in);
                    Word wout = inst.base;
                    append(wout, inst.claimed_out);
                    inst.in_holds = eng.admissible(win);
                    inst.out_absent = !eng.admissible(wout);
                    rep.instances.push_back(inst);
                }
            }
        }
    }
    return rep;
}

Word charge_word(std::size_t k, int sign) {
    if (k < 1) throw DomainError("charge word needs a positive zero run");
    Symbol s = sign < 0 ? 0 : 2;
    Word w{s};
    append(w, run_word(1, k));
    w.push_back(s);
    return w;
}

Word charge_head(std::size_t k, int sign) {
    Symbol s = sign < 0 ? 0 : 2;
    Word w{s};
    append(w, run_word(1, k));
    return w;
}

Word charge_tail(std::size_t k, int sign) {
    Symbol s = sign < 0 ? 0 : 2;
    Word w = run_word(1, k);
    w.push_back(s);
    return w;
}

std::vector<Word> charge_brackets(std::size_t m_max, std::size_t max_len) {
    std::set<Word> all;
    std::vector<Word> uni;
    std::vector<Word> level;
    if (max_len >= 3) {
        level.push_back(charge_word(1, -1));
        level.push_back(charge_word(1, 1));
    }
    for (std::size_t m = 1; m <= m_max; ++m) {
        if (m > 1) {
            // wrap nonempty interior sequences over the union so far
            std::set<Word> next;
            std::vector<Word> seq;
            std::function<void(Word&)> grow = [&](Word& acc) {
                if (!acc.empty()) {
                    for (Symbol s : {Symbol{0}, Symbol{2}}) {
                        Word w{s};
                        append(w, acc);
                        w.push_back(s);
                        next.insert(w);
                        if (next.size() + all.size() > 4000000) {
                            throw ResourceError(
                                "exclusion generation exceeds the budget");
                        }
                    }
                }
                for (const auto& u : uni) {
                    if (acc.size() + u.size() + 2 > max_len) continue;
                    std::size_t old = acc.size();
                    append(acc, u);
                    grow(acc);
                    acc.resize(old);
                }
            };
            Word acc;
            grow(acc);
            level.assign(next.begin(), next.end());
        }
        for (const auto& w : level) {
            if (w.size() <= max_len && all.insert(w).second) {
                uni.push_back(w);
            }
        }
        if (level.empty()) break;
    }
    std::vector<Word> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

std::vector<Word> ChargeExclusions::words_up_to(std::size_t n) const {
    std::set<Word> out;
    for (std::size_t k = 1; (k + 2) + (k + 4) <= n; ++k) {
        for (std::size_t m = 2; (k + 2) + (k + m + 2) <= n; ++m) {
            for (int s1 : {-1, 1}) {
                for (int s2 : {-1, 1}) {
                    Word w = charge_word(k, s1);
                    append(w, charge_word(k + m, s2));
                    out.insert(w);
                }
            }
        }
    }
    for (const auto& w : charge_brackets(m_max_, n)) out.insert(w);
    std::vector<Word> res(out.begin(), out.end());
    std::sort(res.begin(), res.end(), shortlex_less);
    return res;
}

std::string ChargeExclusions::describe() const {
    return "charge pair jumps and nested brackets to depth " +
           std::to_string(m_max_);
}

ChargeSystem build_charge_system(std::size_t k_max, std::size_t m_max) {
    if (k_max < 2) throw DomainError("k_max must be at least 2");
    if (m_max < 1) throw DomainError("m_max must be at least 1");
    Alphabet alphabet({"-1", "0", "1"});
    std::vector<Word> words;
    for (std::size_t k = 1; k <= k_max; ++k) {
        words.push_back(charge_word(k, -1));
        words.push_back(charge_word(k, 1));
    }
    auto excl = std::make_shared<ChargeExclusions>(m_max);
    ChargeSystem sys{alphabet, k_max, m_max,
                     make_exclusion(alphabet, words, excl)};
    return sys;
}

bool contains_charge_word(const ChargeSystem& sys, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) continue;
        std::size_t j = i + 1;
        while (j < w.size() && w[j] == 1) ++j;
        if (j < w.size() && w[j] == w[i]) {
            std::size_t k = j - i - 1;
            if (k >= 1 && k <= sys.k_max) return true;
        }
    }
    return false;
}

namespace {

std::optional<Word> find_charge_factor(const ChargeSystem& sys, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) continue;
        std::size_t j = i + 1;
        while (j < w.size() && w[j] == 1) ++j;
        if (j < w.size() && w[j] == w[i]) {
            std::size_t k = j - i - 1;
            if (k >= 1 && k <= sys.k_max) {
                return Word(w.begin() + static_cast<long>(i),
                            w.begin() + static_cast<long>(j) + 1);
            }
        }
    }
    return std::nullopt;
}

// shortest admissible extension of a that picks up a code word; prefix
// admissibility prunes the search because factors of admissible words are
// admissible
std::optional<Word> search_extension(const ChargeSystem& sys,
                                     const Engine& eng, const Word& a,
                                     std::size_t cap) {
    for (std::size_t extra = 1; a.size() + extra <= cap; ++extra) {
        std::optional<Word> found;
        std::function<void(Word&)> dfs = [&](Word& acc) {
            if (found) return;
            if (acc.size() == a.size() + extra) {
                if (contains_charge_word(sys, acc)) found = acc;
                return;
            }
            for (Symbol s = 0; s < 3; ++s) {
                acc.push_back(s);
                if (eng.admissible(acc)) dfs(acc);
                acc.pop_back();
                if (found) return;
            }
        };
        Word acc = a;
        dfs(acc);
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace

RemarkExtension remark_extension(const ChargeSystem& sys, const Engine& eng,
                                 const Word& a) {
    if (a.empty()) throw DomainError("empty word has no shape");
    if (!eng.admissible(a)) throw DomainError("word must be admissible");
    if (contains_charge_word(sys, a)) {
        throw DomainError("word already contains a code word");
    }
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 1) nz.push_back(i);
    }
    RemarkExtension res;
    res.input = a;
    Word b;
    Word promise;
    if (nz.size() == 1 && nz[0] == 0) {
        res.shape = 1;
        std::size_t k = a.size() - 1;
        int sign = a[0] == 0 ? -1 : 1;
        b = a;
        b.push_back(a[0]);
        if (k >= 1) promise = charge_word(k, sign);
    } else if (nz.size() == 1 && nz[0] == a.size() - 1) {
        res.shape = 2;
        std::size_t k = a.size() - 1;
        int sign = a.back() == 0 ? -1 : 1;
        b = a;
        append(b, charge_word(k + 1, sign));
        promise = charge_word(k + 1, sign);
    } else if (nz.size() == 2 && nz[1] == nz[0] + 1) {
        std::size_t km = nz[0];
        std::size_t kp = a.size() - 1 - nz[1];
        int signp = a[nz[1]] == 0 ? -1 : 1;
        if (kp > km) {
            res.shape = 3;
            b = a;
            b.push_back(a[nz[1]]);
            promise = charge_word(kp, signp);
        } else {
            res.shape = 4;
            b = a;
            append(b, run_word(1, km - kp + 1));
            b.push_back(a[nz[1]]);
            promise = charge_word(km + 1, signp);
        }
    } else {
        throw DomainError("word does not match a recognized shape");
    }

    bool literal_ok = !promise.empty() && eng.admissible(b) &&
                      contains_charge_word(sys, b);
    if (literal_ok) {
        res.extension = b;
        res.promised = promise;
        res.admissible = true;
        return res;
    }
    std::size_t cap = a.size() + 2 * (sys.k_max + 2) + 2;
    auto found = search_extension(sys, eng, a, cap);
    res.fallback_used = true;
    if (found) {
        res.extension = *found;
        res.promised = *find_charge_factor(sys, *found);
        res.admissible = true;
    } else {
        res.extension = a;
        res.admissible = false;
    }
    return res;
}

ContinuationSources continuation_sources(const std::vector<int>& ks) {
    if (ks.empty()) throw DomainError("need at least one exponent");
    int last = ks.back();
    int top = *std::max_element(ks.begin(), ks.end());
    if (top <= last) throw DomainError("no exponent above the final one");
    ContinuationSources out;
    out.q_count = static_cast<std::size_t>(top - last);
    int want = last + 1;
    std::size_t bound = ks.size() - 1;
    while (true) {
        std::optional<std::size_t> pick;
        for (std::size_t r = 0; r < bound; ++r) {
            if (ks[r] == want) pick = r;
        }
        if (!pick) break;
        out.sources.push_back(*pick);
        if (ks[*pick] == top) {
            out.complete = true;
            break;
        }
        want = ks[*pick] + 1;
        bound = *pick;
    }
    return out;
}

ChainContinuation chain_continuation(const ChargeSystem& sys,
                                     const Engine& eng,
                                     const std::vector<std::pair<int, int>>& factors) {
    if (factors.empty()) throw DomainError("need at least one factor");
    Word a;
    std::vector<int> ks;
    for (const auto& f : factors) {
        if (f.first < 1 || static_cast<std::size_t>(f.first) > sys.k_max) {
            throw DomainError("factor exponent outside the built code");
        }
        append(a, charge_word(static_cast<std::size_t>(f.first), f.second));
        ks.push_back(f.first);
    }
    if (!eng.admissible(a)) throw DomainError("factor product inadmissible");

    ChainContinuation res;
    auto src = continuation_sources(ks);
    res.extended = a;
    if (!src.complete) {
        res.gap_at = src.sources.size() + 1;
        res.admissible = eng.admissible(a);
        return res;
    }
    int base = ks.back();
    for (std::size_t q = 1; q <= src.q_count; ++q) {
        int sign = factors[src.sources[q - 1]].second;
        res.steps.emplace_back(base + static_cast<int>(q), sign);
        append(res.extended,
               charge_word(static_cast<std::size_t>(base) + q, sign));
    }
    res.admissible = eng.admissible(res.extended);
    return res;
}

namespace {

struct ChargeProduct {
    std::optional<std::pair<std::size_t, int>> lead;  // tail fragment
    std::vector<std::pair<std::size_t, int>> factors;
};

ChargeProduct parse_charge_product(const Word& a) {
    ChargeProduct out;
    std::size_t i = 0;
    while (i < a.size() && a[i] == 1) ++i;
    if (i == a.size()) throw DomainError("word carries no charge");
    std::size_t lead_zeros = i;
    bool lead_allowed = true;
    if (lead_zeros > 0) {
        out.lead = {lead_zeros, a[i] == 0 ? -1 : 1};
        ++i;
        lead_allowed = false;
    }
    while (i < a.size()) {
        if (a[i] == 1) throw DomainError("misplaced zero run");
        int sign = a[i] == 0 ? -1 : 1;
        std::size_t j = i + 1;
        while (j < a.size() && a[j] == 1) ++j;
        std::size_t k = j - i - 1;
        if (j < a.size() && a[j] == a[i] && k >= 1) {
            out.factors.emplace_back(k, sign);
            i = j + 1;
            lead_allowed = false;
            continue;
        }
        if (lead_allowed && k == 0 && j < a.size()) {
            out.lead = {std::size_t{0}, sign};
            i = j;
            lead_allowed = false;
            continue;
        }
        throw DomainError("word is not a charge product");
    }
    if (out.factors.empty()) throw DomainError("word is not a charge product");
    return out;
}

}  // namespace

ContextBlockingReport context_blocking_report(const ChargeSystem& sys,
                                              const Engine& eng,
                                              const Word& a,
                                              std::size_t depth) {
    if (!eng.admissible(a)) throw DomainError("word must be admissible");
    auto parsed = parse_charge_product(a);
    std::size_t k_last = parsed.factors.back().first;
    for (const auto& f : parsed.factors) {
        if (f.first > k_last) {
            throw DomainError("final exponent must be maximal");
        }
    }

    ContextBlockingReport rep;
    rep.word = a;
    rep.depth = depth;
    Word cont;
    for (std::size_t q = 1; cont.size() < depth; ++q) {
        append(cont, charge_word(k_last + q, 1));
    }
    cont.resize(std::min(cont.size(), depth));
    rep.continuation = cont;

    Word ac = a;
    append(ac, cont);
    rep.continuation_follows = eng.admissible(ac);

    auto preds = eng.predecessors(a, depth);
    rep.contexts = preds.size();
    if (rep.continuation_follows) {
        for (const auto& x : preds) {
            Word full = x;
            append(full, ac);
            if (!eng.admissible(full)) ++rep.blocked;
        }
    }
    rep.fraction = rep.contexts == 0
                       ? 0.0
                       : static_cast<double>(rep.blocked) /
                             static_cast<double>(rep.contexts);
    rep.inconclusive = rep.blocked == 0;
    return rep;
}

}  // namespace spokit
