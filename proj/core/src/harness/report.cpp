#include "ostrowski/harness/report.hpp"

#include <array>
#include <charconv>

namespace ostrowski::harness {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

void write_violations_csv(std::ostream& os, std::span<const ChainViolation> violations) {
    os << "fn_id,x,p,member_pair,lhs,rhs,slack\n";
    for (const ChainViolation& v : violations) {
        os << v.fn_id << ',' << format_double(v.x) << ',' << (v.p ? format_double(*v.p) : "")
           << ',' << v.member_pair << ',' << format_double(v.lhs) << ',' << format_double(v.rhs)
           << ',' << format_double(v.slack) << '\n';
    }
}

void write_probe_csv(std::ostream& os, std::span<const SharpnessPoint> points) {
    os << "family,eps,lhs,bound,ratio\n";
    for (const SharpnessPoint& p : points) {
        os << to_string(p.family) << ',' << format_double(p.epsilon) << ',' << format_double(p.lhs)
           << ',' << format_double(p.bound) << ',' << format_double(p.ratio) << '\n';
    }
}

}  // namespace ostrowski::harness
