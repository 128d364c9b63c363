#include "influ/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "influ/csv.hpp"

namespace influ::ingest {

namespace fs = std::filesystem;
using nlohmann::json;

EventFormat parse_format(const std::string& s) {
    if (s == "jsonl") return EventFormat::jsonl;
    if (s == "csv") return EventFormat::csv;
    throw ConfigError("unknown event format '" + s + "' (expected jsonl or csv)");
}

namespace {

void validate_event(const RetweetEvent& ev, const std::string& where) {
    if (ev.tweet_id.empty()) throw DataError("empty tweet_id at " + where);
    if (ev.author.empty() || ev.retweeter.empty()) throw DataError("empty user id at " + where);
    if (ev.ts_ms < 0) throw DataError("negative timestamp at " + where);
}

std::vector<RetweetEvent> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<RetweetEvent> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw DataError("malformed JSON at " + where + ": " + e.what());
        }
        try {
            RetweetEvent ev;
            ev.tweet_id = j.at("tweet_id").get<std::string>();
            ev.author = j.at("author").get<std::string>();
            ev.retweeter = j.at("retweeter").get<std::string>();
            ev.ts_ms = j.at("ts_ms").get<std::int64_t>();
            validate_event(ev, where);
            raw.push_back(std::move(ev));
        } catch (const json::exception& e) {
            throw DataError("bad event record at " + where + ": " + e.what());
        }
    }
    return raw;
}

std::vector<RetweetEvent> read_csv_events(const std::string& path) {
    csv::Reader reader(path);
    std::vector<std::string> row;
    if (!reader.next_row(row)) return {};
    const std::vector<std::string> expect = {"tweet_id", "author", "retweeter", "ts_ms"};
    if (row != expect) {
        throw DataError("bad CSV header in " + path +
                        " (expected tweet_id,author,retweeter,ts_ms)");
    }
    std::vector<RetweetEvent> raw;
    while (reader.next_row(row)) {
        const std::string where = path + ":" + std::to_string(reader.line_number());
        if (row.size() != 4) throw DataError("expected 4 columns at " + where);
        RetweetEvent ev;
        ev.tweet_id = row[0];
        ev.author = row[1];
        ev.retweeter = row[2];
        ev.ts_ms = csv::parse_int(row[3], where);
        validate_event(ev, where);
        raw.push_back(std::move(ev));
    }
    return raw;
}

}  // namespace

LoadResult load_retweet_events(const std::string& path, EventFormat format) {
    std::vector<RetweetEvent> raw =
        format == EventFormat::jsonl ? read_jsonl(path) : read_csv_events(path);

    LoadResult out;
    // Keep the earliest event per (tweet_id, retweeter); reject self-retweets.
    std::map<std::pair<TweetId, UserId>, std::size_t> first_seen;
    for (auto& ev : raw) {
        if (ev.author == ev.retweeter) {
            ++out.dropped_self;
            continue;
        }
        auto key = std::make_pair(ev.tweet_id, ev.retweeter);
        auto it = first_seen.find(key);
        if (it == first_seen.end()) {
            first_seen.emplace(std::move(key), out.events.size());
            out.events.push_back(std::move(ev));
        } else {
            ++out.dropped_duplicate;
            if (ev.ts_ms < out.events[it->second].ts_ms) out.events[it->second] = std::move(ev);
        }
    }

    std::map<TweetId, TweetRecord> tweets;
    for (const auto& ev : out.events) {
        auto it = tweets.find(ev.tweet_id);
        if (it == tweets.end()) {
            tweets.emplace(ev.tweet_id, TweetRecord{ev.tweet_id, ev.author, ev.ts_ms});
        } else if (ev.ts_ms < it->second.posted_at) {
            it->second.posted_at = ev.ts_ms;
        }
    }
    out.tweets.reserve(tweets.size());
    for (auto& [id, rec] : tweets) out.tweets.push_back(std::move(rec));
    return out;
}

SnapshotLoadResult load_follow_snapshots(const std::string& dir) {
    if (!fs::is_directory(dir)) throw DataError("not a directory: " + dir);
    std::vector<std::pair<MonthId, std::string>> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("follows_", 0) != 0 || name.size() != std::string("follows_YYYY-MM.csv").size() ||
            name.substr(name.size() - 4) != ".csv") {
            continue;
        }
        files.emplace_back(MonthId::parse(name.substr(8, 7)), entry.path().string());
    }
    std::sort(files.begin(), files.end());

    SnapshotLoadResult out;
    for (const auto& [month, path] : files) {
        csv::Reader reader(path);
        std::vector<std::string> row;
        if (!reader.next_row(row)) throw DataError("empty snapshot file: " + path);
        if (row != std::vector<std::string>{"follower", "followee"}) {
            throw DataError("bad CSV header in " + path + " (expected follower,followee)");
        }
        std::set<std::pair<UserId, UserId>> edges;
        while (reader.next_row(row)) {
            const std::string where = path + ":" + std::to_string(reader.line_number());
            if (row.size() != 2 || row[0].empty() || row[1].empty()) {
                throw DataError("bad edge at " + where);
            }
            if (row[0] == row[1]) {
                ++out.dropped_self_loops;
                continue;
            }
            edges.emplace(row[0], row[1]);
        }
        FollowSnapshot snap;
        snap.month = month;
        snap.edges.assign(edges.begin(), edges.end());
        out.snapshots.emplace(month, std::move(snap));
    }

    // Warn about gaps in the month sequence.
    if (!out.snapshots.empty()) {
        auto it = out.snapshots.begin();
        MonthId prev = it->first;
        for (++it; it != out.snapshots.end(); ++it) {
            for (MonthId m = prev.next(); m < it->first; m = m.next()) {
                out.warnings.push_back("missing follow snapshot for " + m.str());
            }
            prev = it->first;
        }
    }
    return out;
}

EventSlice slice(const std::vector<RetweetEvent>& events, const TimeWindow& window) {
    EventSlice out;
    out.window = window;
    for (const auto& ev : events) {
        if (!window.contains(ev.ts_ms)) continue;
        out.cascades[ev.tweet_id].push_back(Retweet{ev.retweeter, ev.ts_ms});
        auto [it, inserted] = out.author_of.emplace(ev.tweet_id, ev.author);
        (void)it;
        (void)inserted;
    }
    for (auto& [tweet, rts] : out.cascades) {
        std::sort(rts.begin(), rts.end(), [](const Retweet& a, const Retweet& b) {
            if (a.ts_ms != b.ts_ms) return a.ts_ms < b.ts_ms;
            return a.user < b.user;
        });
    }
    for (const auto& [tweet, author] : out.author_of) {
        out.tweets_by_author[author].push_back(tweet);
    }
    return out;
}

}  // namespace influ::ingest
