#pragma once

#include <cstdint>
#include <map>

#include "influ/types.hpp"

namespace influ::scoring {

// Per-window influence scores. Every user appearing in the slice (as author
// or retweeter) has an entry; lookups of unknown users read as 0.
struct ScoreTable {
    TimeWindow window;
    std::map<UserId, std::int64_t> spreader;
    std::map<UserId, std::int64_t> broker;

    std::int64_t spreader_of(const UserId& u) const;
    std::int64_t broker_of(const UserId& u) const;
    std::size_t user_count() const { return spreader.size(); }
};

// Total retweets of u's tweets inside the slice window.
std::int64_t spreader_score(const EventSlice& slice, const UserId& u);

// Over every tweet u retweeted in the window: count of retweets of that tweet
// with a strictly later timestamp.
std::int64_t broker_score(const EventSlice& slice, const UserId& u);

// ln((second + 1) / (first + 1)).
double change_rate(std::int64_t score_first, std::int64_t score_second);

// Distinct retweeters across u's tweets divided by u's spreader score;
// 0 when the spreader score is 0.
double unique_user_rate(const EventSlice& slice, const UserId& u);

// Both score columns for every user in the slice, in one pass.
ScoreTable score_all(const EventSlice& slice);

// Unique-user rate for every author in the slice (others read as 0).
std::map<UserId, double> unique_user_rates(const EventSlice& slice);

}  // namespace influ::scoring
