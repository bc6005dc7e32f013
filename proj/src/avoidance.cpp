#include "fibcorr/avoidance.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "fibcorr/fibonacci.hpp"

namespace fibcorr {

std::size_t PatternAutomaton::live_state_count() const {
    std::size_t live = 0;
    for (std::uint8_t d : dead) {
        if (!d) ++live;
    }
    return live;
}

bool PatternAutomaton::accepts(const Word& w) const {
    std::int32_t state = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        state = next[static_cast<std::size_t>(state)][w[i]];
        if (dead[static_cast<std::size_t>(state)]) return false;
    }
    return !dead[static_cast<std::size_t>(state)];
}

PatternAutomaton build_automaton(const std::vector<Word>& patterns) {
    for (const Word& p : patterns) {
        if (p.empty()) throw std::domain_error("patterns must be nonempty");
    }

    // Prefix trie with terminal marks.
    std::vector<std::array<std::int32_t, 2>> child(1, {-1, -1});
    std::vector<std::uint8_t> terminal(1, 0);
    for (const Word& p : patterns) {
        std::int32_t node = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto& slot = child[static_cast<std::size_t>(node)][p[i]];
            if (slot < 0) {
                slot = static_cast<std::int32_t>(child.size());
                child.push_back({-1, -1});
                terminal.push_back(0);
            }
            node = slot;
        }
        terminal[static_cast<std::size_t>(node)] = 1;
    }

    // Failure links by BFS; goto closure; a node is bad once its failure
    // chain passes through a terminal.
    const std::size_t trie_size = child.size();
    std::vector<std::int32_t> fail(trie_size, 0);
    std::vector<std::array<std::int32_t, 2>> go(trie_size);
    std::vector<std::uint8_t> bad(terminal);
    std::queue<std::int32_t> bfs;
    for (int c = 0; c < 2; ++c) {
        const std::int32_t t = child[0][static_cast<std::size_t>(c)];
        go[0][static_cast<std::size_t>(c)] = std::max(t, 0);
        if (t > 0) bfs.push(t);
    }
    while (!bfs.empty()) {
        const std::int32_t node = bfs.front();
        bfs.pop();
        const auto f = static_cast<std::size_t>(fail[static_cast<std::size_t>(node)]);
        if (bad[f]) bad[static_cast<std::size_t>(node)] = 1;
        for (int c = 0; c < 2; ++c) {
            const std::int32_t t = child[static_cast<std::size_t>(node)][static_cast<std::size_t>(c)];
            if (t < 0) {
                go[static_cast<std::size_t>(node)][static_cast<std::size_t>(c)] =
                    go[f][static_cast<std::size_t>(c)];
            } else {
                fail[static_cast<std::size_t>(t)] = go[f][static_cast<std::size_t>(c)];
                go[static_cast<std::size_t>(node)][static_cast<std::size_t>(c)] = t;
                bfs.push(t);
            }
        }
    }

    // Keep the live nodes reachable from the root and collapse every bad
    // node into one absorbing sink. (A live trie node below a bad one can
    // never be entered, so reachability prunes it.)
    std::vector<std::int32_t> id(trie_size, -1);
    std::vector<std::int32_t> order;
    id[0] = 0;
    order.push_back(0);
    bool any_bad = std::find(bad.begin(), bad.end(), 1) != bad.end();
    for (std::size_t at = 0; at < order.size(); ++at) {
        const auto s = static_cast<std::size_t>(order[at]);
        for (int c = 0; c < 2; ++c) {
            const std::int32_t t = go[s][static_cast<std::size_t>(c)];
            if (bad[static_cast<std::size_t>(t)]) continue;
            if (id[static_cast<std::size_t>(t)] < 0) {
                id[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(order.size());
                order.push_back(t);
            }
        }
    }
    PatternAutomaton out;
    out.next.resize(order.size() + (any_bad ? 1 : 0));
    out.dead.assign(out.next.size(), 0);
    const auto sink = static_cast<std::int32_t>(order.size());
    if (any_bad) {
        out.dead[static_cast<std::size_t>(sink)] = 1;
        out.next[static_cast<std::size_t>(sink)] = {sink, sink};
    }
    for (std::size_t at = 0; at < order.size(); ++at) {
        const auto s = static_cast<std::size_t>(order[at]);
        for (int c = 0; c < 2; ++c) {
            const std::int32_t t = go[s][static_cast<std::size_t>(c)];
            out.next[at][static_cast<std::size_t>(c)] =
                bad[static_cast<std::size_t>(t)] ? sink : id[static_cast<std::size_t>(t)];
        }
    }
    return out;
}

std::vector<BigCount> count_avoiding(const std::vector<Word>& patterns, int max_len) {
    if (max_len < 0) throw std::domain_error("max_len must be nonnegative");
    const PatternAutomaton a = build_automaton(patterns);
    std::vector<BigCount> population(a.state_count(), 0);
    population[0] = 1;
    std::vector<BigCount> counts;
    counts.reserve(static_cast<std::size_t>(max_len) + 1);
    auto total_live = [&]() {
        BigCount sum = 0;
        for (std::size_t s = 0; s < a.state_count(); ++s) {
            if (!a.dead[s]) sum += population[s];
        }
        return sum;
    };
    counts.push_back(total_live());
    for (int len = 1; len <= max_len; ++len) {
        std::vector<BigCount> stepped(a.state_count(), 0);
        for (std::size_t s = 0; s < a.state_count(); ++s) {
            if (a.dead[s] || population[s] == 0) continue;
            for (int c = 0; c < 2; ++c) {
                stepped[static_cast<std::size_t>(a.next[s][static_cast<std::size_t>(c)])] +=
                    population[s];
            }
        }
        population = std::move(stepped);
        counts.push_back(total_live());
    }
    return counts;
}

std::vector<BigCount> count_avoiding_bruteforce(const std::vector<Word>& patterns, int max_len) {
    if (max_len < 0) throw std::domain_error("max_len must be nonnegative");
    if (max_len > kBruteforceLenCap) {
        throw std::domain_error("bruteforce counting is capped at max_len " +
                                std::to_string(kBruteforceLenCap));
    }
    for (const Word& p : patterns) {
        if (p.empty()) throw std::domain_error("patterns must be nonempty");
    }
    std::vector<BigCount> counts;
    std::vector<std::uint8_t> symbols;
    for (int len = 0; len <= max_len; ++len) {
        const std::size_t n = static_cast<std::size_t>(len);
        std::uint64_t avoiding = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            symbols.assign(n, 0);
            for (std::size_t i = 0; i < n; ++i) symbols[i] = (mask >> i) & 1u;
            bool clean = true;
            for (const Word& p : patterns) {
                if (p.size() > n) continue;
                for (std::size_t at = 0; clean && at + p.size() <= n; ++at) {
                    bool hit = true;
                    for (std::size_t i = 0; i < p.size(); ++i) {
                        if (symbols[at + i] != p[i]) { hit = false; break; }
                    }
                    if (hit) clean = false;
                }
                if (!clean) break;
            }
            if (clean) ++avoiding;
        }
        counts.emplace_back(avoiding);
    }
    return counts;
}

std::vector<Word> forbidden_family(int max_index) {
    if (max_index < 3 || max_index > kMaxWordIndex) {
        throw std::domain_error("family pattern index must lie in [3, " +
                                std::to_string(kMaxWordIndex) + "], got " +
                                std::to_string(max_index));
    }
    std::vector<Word> out;
    for (int n = 3; n <= max_index; ++n) out.push_back(min_forbidden(n));
    return out;
}

}  // namespace fibcorr
