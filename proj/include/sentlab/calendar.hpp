#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sentlab {

// Calendar date at trading-day granularity, stored as days since 1970-01-01.
class Date {
public:
    Date() = default;

    static Date from_serial(int64_t days) { return Date(days); }
    static Date from_ymd(int year, int month, int day);
    // Strict ISO-8601 YYYY-MM-DD; throws DataError on anything else.
    static Date parse(const std::string& iso);

    int64_t serial() const { return days_; }
    std::string iso() const;
    // 0 = Monday .. 6 = Sunday.
    int weekday() const;
    bool is_weekend() const { int w = weekday(); return w >= 5; }
    Date next_weekday() const;

    auto operator<=>(const Date&) const = default;

private:
    explicit Date(int64_t days) : days_(days) {}
    int64_t days_ = 0;
};

// `count` consecutive weekdays starting at `start` (moved forward if it falls
// on a weekend).
std::vector<Date> business_days(Date start, std::size_t count);

}  // namespace sentlab
