#include "influ/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace influ::scoring {

std::int64_t ScoreTable::spreader_of(const UserId& u) const {
    auto it = spreader.find(u);
    return it == spreader.end() ? 0 : it->second;
}

std::int64_t ScoreTable::broker_of(const UserId& u) const {
    auto it = broker.find(u);
    return it == broker.end() ? 0 : it->second;
}

std::int64_t spreader_score(const EventSlice& slice, const UserId& u) {
    auto it = slice.tweets_by_author.find(u);
    if (it == slice.tweets_by_author.end()) return 0;
    std::int64_t total = 0;
    for (const auto& tweet : it->second) {
        auto cit = slice.cascades.find(tweet);
        if (cit != slice.cascades.end()) total += static_cast<std::int64_t>(cit->second.size());
    }
    return total;
}

// Count of retweets after position i in a cascade sorted by (ts, user):
// entries with a strictly greater timestamp.
static std::int64_t later_count(const std::vector<Retweet>& rts, std::size_t i) {
    const std::int64_t ts = rts[i].ts_ms;
    auto it = std::upper_bound(rts.begin(), rts.end(), ts,
                               [](std::int64_t t, const Retweet& r) { return t < r.ts_ms; });
    return static_cast<std::int64_t>(rts.end() - it);
}

std::int64_t broker_score(const EventSlice& slice, const UserId& u) {
    std::int64_t total = 0;
    for (const auto& [tweet, rts] : slice.cascades) {
        for (std::size_t i = 0; i < rts.size(); ++i) {
            if (rts[i].user == u) {
                total += later_count(rts, i);
                break;  // at most one retweet per user per tweet
            }
        }
    }
    return total;
}

double change_rate(std::int64_t score_first, std::int64_t score_second) {
    return std::log(static_cast<double>(score_second + 1) /
                    static_cast<double>(score_first + 1));
}

double unique_user_rate(const EventSlice& slice, const UserId& u) {
    auto it = slice.tweets_by_author.find(u);
    if (it == slice.tweets_by_author.end()) return 0.0;
    std::set<UserId> uniq;
    std::int64_t total = 0;
    for (const auto& tweet : it->second) {
        auto cit = slice.cascades.find(tweet);
        if (cit == slice.cascades.end()) continue;
        total += static_cast<std::int64_t>(cit->second.size());
        for (const auto& rt : cit->second) uniq.insert(rt.user);
    }
    if (total == 0) return 0.0;
    return static_cast<double>(uniq.size()) / static_cast<double>(total);
}

ScoreTable score_all(const EventSlice& slice) {
    ScoreTable table;
    table.window = slice.window;
    for (const UserId& u : slice.users()) {
        table.spreader[u] = 0;
        table.broker[u] = 0;
    }
    for (const auto& [tweet, rts] : slice.cascades) {
        table.spreader[slice.author_of.at(tweet)] += static_cast<std::int64_t>(rts.size());
        // One backward sweep: later[i] = count of entries with ts > ts[i].
        std::size_t k = rts.size();
        std::size_t j = k;  // index of first element with ts > current group
        for (std::size_t i = k; i-- > 0;) {
            if (i + 1 < k && rts[i].ts_ms != rts[i + 1].ts_ms) j = i + 1;
            table.broker[rts[i].user] += static_cast<std::int64_t>(k - j);
        }
    }
    return table;
}

std::map<UserId, double> unique_user_rates(const EventSlice& slice) {
    std::map<UserId, double> out;
    for (const auto& [author, tweets] : slice.tweets_by_author) {
        out[author] = unique_user_rate(slice, author);
    }
    return out;
}

}  // namespace influ::scoring
