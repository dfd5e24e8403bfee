#include "nsjac/divisor.hpp"

#include <algorithm>

namespace nsjac {

Divisor::Divisor(Curve curve) : curve_(std::move(curve)) {}

Divisor::Divisor(Curve curve, std::vector<AffinePoint> sorted_points)
    : curve_(std::move(curve)), points_(std::move(sorted_points)) {}

Divisor Divisor::from_points(Curve curve, std::vector<AffinePoint> points) {
    for (const auto& pt : points) {
        if (!curve.is_on_curve(pt)) throw PointNotOnCurve("(" + pt.to_string() + ") is not on " + curve.describe());
    }
    std::sort(points.begin(), points.end());
    return Divisor(std::move(curve), std::move(points));
}

std::vector<std::pair<AffinePoint, int>> Divisor::support() const {
    std::vector<std::pair<AffinePoint, int>> out;
    for (const auto& pt : points_) {
        if (!out.empty() && out.back().first == pt) {
            ++out.back().second;
        } else {
            out.emplace_back(pt, 1);
        }
    }
    return out;
}

int Divisor::multiplicity(const AffinePoint& pt) const {
    return static_cast<int>(std::count(points_.begin(), points_.end(), pt));
}

bool Divisor::has_repeated_points() const {
    return std::adjacent_find(points_.begin(), points_.end()) != points_.end();
}

Divisor Divisor::operator+(const Divisor& o) const {
    if (curve_ != o.curve_) throw FieldMismatch("divisor union across curves");
    std::vector<AffinePoint> merged;
    merged.reserve(points_.size() + o.points_.size());
    std::merge(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(), std::back_inserter(merged));
    return Divisor(curve_, std::move(merged));
}

bool Divisor::operator==(const Divisor& o) const {
    if (curve_ != o.curve_) throw FieldMismatch("divisor comparison across curves");
    return points_ == o.points_;
}

Divisor Divisor::embed(const Curve& target) const {
    std::vector<AffinePoint> pts;
    pts.reserve(points_.size());
    for (const auto& pt : points_) {
        pts.push_back({embed_prime(pt.x, target.field()), embed_prime(pt.y, target.field())});
    }
    return from_points(target, std::move(pts));
}

UniPoly mumford_u(const Divisor& d) {
    const Field& f = d.curve().field();
    UniPoly u = UniPoly::constant(f.one());
    for (const auto& pt : d.points()) u *= UniPoly(f, {-pt.x, f.one()});
    return u;
}

bool divisor_equal(const Divisor& a, const Divisor& b) { return a == b; }

std::string format_divisor(const Divisor& d) {
    std::string out;
    for (const auto& pt : d.points()) {
        out += pt.to_string();
        out += '\n';
    }
    return out;
}

Divisor parse_divisor(const Curve& curve, std::string_view text) {
    std::vector<AffinePoint> pts;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const bool blank = std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
        if (!blank) {
            const auto semi = line.find(';');
            if (semi == std::string_view::npos || line.find(';', semi + 1) != std::string_view::npos) {
                throw InvalidInput("divisor line " + std::to_string(line_no) + ": expected 'x;y'");
            }
            pts.push_back({curve.field().parse(line.substr(0, semi)), curve.field().parse(line.substr(semi + 1))});
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return Divisor::from_points(curve, std::move(pts));
}

}  // namespace nsjac
