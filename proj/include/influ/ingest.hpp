#pragma once

#include <map>
#include <string>
#include <vector>

#include "influ/types.hpp"

namespace influ::ingest {

enum class EventFormat { jsonl, csv };

EventFormat parse_format(const std::string& s);

struct LoadResult {
    std::vector<RetweetEvent> events;   // valid, deduplicated, self-retweets removed
    std::vector<TweetRecord> tweets;    // synthesized from first occurrence per tweet id
    std::size_t dropped_self = 0;
    std::size_t dropped_duplicate = 0;
};

// Reads retweet events from a JSONL or CSV file. Duplicate
// (tweet_id, retweeter) rows keep the earliest timestamp; self-retweets are
// dropped. Tweet records are synthesized as (author, min event timestamp).
LoadResult load_retweet_events(const std::string& path, EventFormat format);

struct SnapshotLoadResult {
    std::map<MonthId, FollowSnapshot> snapshots;
    std::vector<std::string> warnings;  // e.g. gaps in the month sequence
    std::size_t dropped_self_loops = 0;
};

// Loads every follows_YYYY-MM.csv in the directory. Gaps in the month
// sequence produce warnings, not errors.
SnapshotLoadResult load_follow_snapshots(const std::string& dir);

// Restricts events to the window and indexes them by cascade. Cascades are
// ordered by (timestamp, retweeter id).
EventSlice slice(const std::vector<RetweetEvent>& events, const TimeWindow& window);

}  // namespace influ::ingest
