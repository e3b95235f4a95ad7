#pragma once

#include "geograph/rational.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geograph {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // lexicographic; used for canonical sorting, not geometry
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

/// Line through `base` toward `tip`; the travel direction doubles as the
/// "North" of the line, so West is the left side and East the right.
struct DirectedLine {
    Point base;
    Point tip;

    DirectedLine(Point b, Point t) : base(std::move(b)), tip(std::move(t)) {
        if (base == tip) throw std::invalid_argument("DirectedLine: base == tip");
    }

    DirectedLine reversed() const { return DirectedLine(tip, base); }
};

enum class Side { West, East, On };

inline const char* to_string(Side s) {
    switch (s) {
        case Side::West: return "West";
        case Side::East: return "East";
        default: return "On";
    }
}

/// Sign of the cross product (q-p) x (r-p): +1 if r lies strictly left of
/// p->q, -1 strictly right, 0 collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
    Rational lhs = (q.x - p.x) * (r.y - p.y);
    Rational rhs = (q.y - p.y) * (r.x - p.x);
    if (lhs == rhs) return 0;
    return lhs < rhs ? -1 : 1;
}

inline Side side_of(const DirectedLine& l, const Point& p) {
    int s = orient(l.base, l.tip, p);
    if (s > 0) return Side::West;
    if (s < 0) return Side::East;
    return Side::On;
}

/// West count minus East count over `points`; points on the line contribute 0.
inline long side_balance(std::span<const Point> points, const DirectedLine& l) {
    long balance = 0;
    for (const Point& p : points) balance += orient(l.base, l.tip, p);
    return balance;
}

struct SingularTransform : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invertible affine map p -> M p + t with M = [[a, b], [c, d]].
struct AffineMap {
    Rational a, b, c, d;
    Rational tx, ty;

    static AffineMap identity() { return {1, 0, 0, 1, 0, 0}; }

    Rational det() const { return a * d - b * c; }

    Point apply(const Point& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }

    /// Composition: apply `other` first, then this.
    AffineMap compose(const AffineMap& other) const {
        return {a * other.a + b * other.c, a * other.b + b * other.d,
                c * other.a + d * other.c, c * other.b + d * other.d,
                a * other.tx + b * other.ty + tx,
                c * other.tx + d * other.ty + ty};
    }
};

struct OddSize : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicatePoints : std::runtime_error {
    DuplicatePoints(int i, int j, const std::string& msg) : std::runtime_error(msg), first(i), second(j) {}
    int first, second;
};

struct CollinearTriple : std::runtime_error {
    CollinearTriple(int i, int j, int k, const std::string& msg) : std::runtime_error(msg), a(i), b(j), c(k) {}
    int a, b, c;
};

namespace detail {

/// Integer view of a point sequence: every x scaled by the common x-denominator
/// and every y by the common y-denominator. Independent positive per-axis
/// scalings preserve all orientation signs, so predicates may run on the
/// scaled integers. This keeps the hot loops on mpz instead of mpq.
struct ScaledPoints {
    std::vector<mpz_class> x;
    std::vector<mpz_class> y;

    explicit ScaledPoints(std::span<const Point> pts) {
        mpz_class lx(1), ly(1);
        for (const Point& p : pts) {
            mpz_lcm(lx.get_mpz_t(), lx.get_mpz_t(), p.x.denominator().get_mpz_t());
            mpz_lcm(ly.get_mpz_t(), ly.get_mpz_t(), p.y.denominator().get_mpz_t());
        }
        x.reserve(pts.size());
        y.reserve(pts.size());
        for (const Point& p : pts) {
            x.push_back(p.x.numerator() * (lx / p.x.denominator()));
            y.push_back(p.y.numerator() * (ly / p.y.denominator()));
        }
    }

    std::size_t size() const { return x.size(); }

    /// orient() on the scaled coordinates; allocation-free in steady state.
    int orient(std::size_t p, std::size_t q, std::size_t r) const {
        static thread_local mpz_class t1, t2, t3, t4;
        mpz_sub(t1.get_mpz_t(), x[q].get_mpz_t(), x[p].get_mpz_t());
        mpz_sub(t2.get_mpz_t(), y[r].get_mpz_t(), y[p].get_mpz_t());
        mpz_mul(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_sub(t3.get_mpz_t(), y[q].get_mpz_t(), y[p].get_mpz_t());
        mpz_sub(t4.get_mpz_t(), x[r].get_mpz_t(), x[p].get_mpz_t());
        mpz_mul(t3.get_mpz_t(), t3.get_mpz_t(), t4.get_mpz_t());
        return mpz_cmp(t1.get_mpz_t(), t3.get_mpz_t());
    }
};

}  // namespace detail

/// Even-sized point set in general position: pairwise distinct, no three
/// collinear. The only way to build one is through make(), so holding a
/// PointConfig is proof the invariants were checked.
class PointConfig {
public:
    static PointConfig make(std::vector<Point> points) {
        const int n = static_cast<int>(points.size());
        if (n < 2) throw std::invalid_argument("PointConfig: need at least 2 points");
        if (n % 2 != 0) throw OddSize("PointConfig: point count " + std::to_string(n) + " is odd");

        detail::ScaledPoints sp(points);

        // duplicates: sort index view by coordinates, compare neighbours
        std::vector<int> idx(points.size());
        for (int i = 0; i < n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int i, int j) {
            int cx = mpz_cmp(sp.x[i].get_mpz_t(), sp.x[j].get_mpz_t());
            if (cx != 0) return cx < 0;
            return mpz_cmp(sp.y[i].get_mpz_t(), sp.y[j].get_mpz_t()) < 0;
        });
        for (int k = 0; k + 1 < n; ++k) {
            int i = idx[k], j = idx[k + 1];
            if (sp.x[i] == sp.x[j] && sp.y[i] == sp.y[j]) {
                int lo = std::min(i, j), hi = std::max(i, j);
                throw DuplicatePoints(lo, hi,
                                      "PointConfig: points " + std::to_string(lo) + " and " +
                                          std::to_string(hi) + " coincide");
            }
        }

        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (sp.orient(i, j, k) == 0)
                        throw CollinearTriple(i, j, k,
                                              "PointConfig: points " + std::to_string(i) + ", " +
                                                  std::to_string(j) + ", " + std::to_string(k) +
                                                  " are collinear");

        return PointConfig(std::move(points));
    }

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const PointConfig& a, const PointConfig& b) { return a.points_ == b.points_; }

private:
    explicit PointConfig(std::vector<Point> points) : points_(std::move(points)) {}

    std::vector<Point> points_;
};

/// Applies p -> M p + t to every point. The map must be invertible; general
/// position and the halving edge set survive any invertible affine map.
inline PointConfig affine_apply(const AffineMap& m, const PointConfig& c) {
    if (m.det().is_zero()) throw SingularTransform("affine_apply: matrix is singular");
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(c.size()));
    for (const Point& p : c.points()) out.push_back(m.apply(p));
    return PointConfig::make(std::move(out));
}

}  // namespace geograph
