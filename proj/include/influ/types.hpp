#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace influ {

using UserId = std::string;
using TweetId = std::string;

// Configuration / usage problems: bad flags, bad config values, unknown formats.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with input data: missing files, malformed rows, missing artifacts.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Calendar month in UTC. Total order; arithmetic across year boundaries.
struct MonthId {
    int year = 0;
    int month = 1;  // 1-12

    int index() const { return year * 12 + (month - 1); }
    static MonthId from_index(int idx) {
        MonthId m;
        m.year = idx >= 0 ? idx / 12 : (idx - 11) / 12;
        m.month = idx - m.year * 12 + 1;
        return m;
    }
    MonthId next() const { return from_index(index() + 1); }
    MonthId plus(int k) const { return from_index(index() + k); }

    bool operator==(const MonthId& o) const { return year == o.year && month == o.month; }
    bool operator!=(const MonthId& o) const { return !(*this == o); }
    bool operator<(const MonthId& o) const { return index() < o.index(); }
    bool operator<=(const MonthId& o) const { return index() <= o.index(); }
    bool operator>(const MonthId& o) const { return index() > o.index(); }
    bool operator>=(const MonthId& o) const { return index() >= o.index(); }

    std::string str() const;                     // "YYYY-MM"
    static MonthId parse(const std::string& s);  // from "YYYY-MM"
};

enum class WindowKind { full_month, first_half, second_half };

const char* window_kind_name(WindowKind k);

// Half-open interval of UTC epoch milliseconds.
struct TimeWindow {
    std::int64_t start_ms = 0;  // inclusive
    std::int64_t end_ms = 0;    // exclusive
    WindowKind kind = WindowKind::full_month;

    bool contains(std::int64_t ts) const { return ts >= start_ms && ts < end_ms; }
};

// UTC epoch milliseconds of 00:00:00 on the given civil date.
std::int64_t civil_to_epoch_ms(int year, int month, int day);

std::int64_t month_start_ms(const MonthId& m);

TimeWindow full_month_window(const MonthId& m);
// Days 1-15 of the month.
TimeWindow first_half_window(const MonthId& m);
// Day 16 through month end.
TimeWindow second_half_window(const MonthId& m);

struct RetweetEvent {
    TweetId tweet_id;
    UserId author;     // original poster
    UserId retweeter;
    std::int64_t ts_ms = 0;
};

struct TweetRecord {
    TweetId tweet_id;
    UserId author;
    std::int64_t posted_at = 0;
};

struct FollowSnapshot {
    MonthId month;
    // Directed (follower, followee) pairs; deduplicated, no self-loops.
    std::vector<std::pair<UserId, UserId>> edges;
};

struct Retweet {
    UserId user;
    std::int64_t ts_ms = 0;
};

// tweet id -> retweets ordered by (timestamp, retweeter id).
using CascadeIndex = std::map<TweetId, std::vector<Retweet>>;

struct EventSlice {
    TimeWindow window;
    CascadeIndex cascades;
    std::map<UserId, std::vector<TweetId>> tweets_by_author;
    std::map<TweetId, UserId> author_of;

    // Authors and retweeters appearing in the slice.
    std::set<UserId> users() const;
    std::size_t event_count() const;
};

}  // namespace influ
