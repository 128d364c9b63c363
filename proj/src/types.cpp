#include "influ/types.hpp"

#include <cstdio>

namespace influ {

std::string MonthId::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

MonthId MonthId::parse(const std::string& s) {
    int y = 0, m = 0;
    if (std::sscanf(s.c_str(), "%d-%d", &y, &m) != 2 || m < 1 || m > 12) {
        throw DataError("bad month id '" + s + "', expected YYYY-MM");
    }
    return MonthId{y, m};
}

const char* window_kind_name(WindowKind k) {
    switch (k) {
        case WindowKind::full_month: return "full";
        case WindowKind::first_half: return "first_half";
        case WindowKind::second_half: return "second_half";
    }
    return "?";
}

// Howard Hinnant's days-from-civil; valid far beyond any timestamp we see.
static std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::int64_t civil_to_epoch_ms(int year, int month, int day) {
    return days_from_civil(year, month, day) * 86400000LL;
}

std::int64_t month_start_ms(const MonthId& m) {
    return civil_to_epoch_ms(m.year, m.month, 1);
}

TimeWindow full_month_window(const MonthId& m) {
    return TimeWindow{month_start_ms(m), month_start_ms(m.next()), WindowKind::full_month};
}

TimeWindow first_half_window(const MonthId& m) {
    return TimeWindow{month_start_ms(m), civil_to_epoch_ms(m.year, m.month, 16),
                      WindowKind::first_half};
}

TimeWindow second_half_window(const MonthId& m) {
    return TimeWindow{civil_to_epoch_ms(m.year, m.month, 16), month_start_ms(m.next()),
                      WindowKind::second_half};
}

std::set<UserId> EventSlice::users() const {
    std::set<UserId> out;
    for (const auto& [author, tweets] : tweets_by_author) out.insert(author);
    for (const auto& [tweet, rts] : cascades) {
        for (const auto& rt : rts) out.insert(rt.user);
    }
    return out;
}

std::size_t EventSlice::event_count() const {
    std::size_t n = 0;
    for (const auto& [tweet, rts] : cascades) n += rts.size();
    return n;
}

}  // namespace influ
