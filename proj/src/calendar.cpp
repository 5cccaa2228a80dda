#include "sentlab/calendar.hpp"

#include <cctype>
#include <cstdio>

#include "sentlab/errors.hpp"

namespace sentlab {

namespace {

// Civil-calendar conversions (proleptic Gregorian), Hinnant's algorithms.
int64_t days_from_civil(int64_t y, int m, int d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const int64_t yoe = y - era * 400;
    const int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

void civil_from_days(int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const int64_t doe = z - era * 146097;
    const int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t yr = yoe + era * 400;
    const int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const int64_t mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

int days_in_month(int year, int month) {
    static const int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[month - 1];
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        throw DataError("invalid calendar date");
    return Date(days_from_civil(year, month, day));
}

Date Date::parse(const std::string& iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw DataError("unparseable date '" + iso + "' (expected YYYY-MM-DD)");
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!std::isdigit(static_cast<unsigned char>(iso[i])))
            throw DataError("unparseable date '" + iso + "' (expected YYYY-MM-DD)");
    const int y = std::stoi(iso.substr(0, 4));
    const int m = std::stoi(iso.substr(5, 2));
    const int d = std::stoi(iso.substr(8, 2));
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m))
        throw DataError("invalid calendar date '" + iso + "'");
    return Date(days_from_civil(y, m, d));
}

std::string Date::iso() const {
    int y, m, d;
    civil_from_days(days_, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

int Date::weekday() const {
    // 1970-01-01 was a Thursday (index 3).
    int64_t w = (days_ + 3) % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w);
}

Date Date::next_weekday() const {
    Date d = Date(days_ + 1);
    while (d.is_weekend()) d = Date(d.days_ + 1);
    return d;
}

std::vector<Date> business_days(Date start, std::size_t count) {
    std::vector<Date> out;
    out.reserve(count);
    Date d = start.is_weekend() ? start.next_weekday() : start;
    while (out.size() < count) {
        out.push_back(d);
        d = d.next_weekday();
    }
    return out;
}

}  // namespace sentlab
