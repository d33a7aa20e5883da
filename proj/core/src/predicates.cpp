#include "spritemesh/predicates.hpp"

#include <cmath>
#include <vector>

namespace spritemesh {

namespace {

// Error-free transforms. Expansions are vectors of nonoverlapping doubles in
// increasing magnitude order whose sum is the represented value; the sign of
// an expansion is the sign of its last (largest) component.

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void fast_two_sum(double a, double b, double& x, double& y) {
    // requires |a| >= |b|
    x = a + b;
    y = b - (x - a);
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    const double bv = a - x;
    const double av = x + bv;
    y = (a - av) + (bv - b);
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

using Expansion = std::vector<double>;

Expansion make_diff(double a, double b) {
    double x, y;
    two_diff(a, b, x, y);
    if (y == 0.0) return {x};
    return {y, x};
}

// e * b, exact (scale_expansion_zeroelim).
Expansion scale(const Expansion& e, double b) {
    Expansion h;
    h.reserve(e.size() * 2);
    double q, hh;
    two_product(e[0], b, q, hh);
    if (hh != 0.0) h.push_back(hh);
    for (size_t i = 1; i < e.size(); ++i) {
        double p1, p0, sum;
        two_product(e[i], b, p1, p0);
        two_sum(q, p0, sum, hh);
        if (hh != 0.0) h.push_back(hh);
        fast_two_sum(p1, sum, q, hh);
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

// e + f, exact (fast_expansion_sum_zeroelim).
Expansion sum(const Expansion& e, const Expansion& f) {
    Expansion h;
    h.reserve(e.size() + f.size());
    size_t ei = 0, fi = 0;
    auto take_e = [&] {
        // merge by increasing magnitude
        if (fi >= f.size()) return true;
        if (ei >= e.size()) return false;
        return std::abs(e[ei]) <= std::abs(f[fi]);
    };
    double q = take_e() ? e[ei++] : f[fi++];
    double qnew, hh;
    if (ei < e.size() || fi < f.size()) {
        const double now = take_e() ? e[ei++] : f[fi++];
        fast_two_sum(now, q, qnew, hh);
        q = qnew;
        if (hh != 0.0) h.push_back(hh);
        while (ei < e.size() || fi < f.size()) {
            const double next = take_e() ? e[ei++] : f[fi++];
            two_sum(q, next, qnew, hh);
            q = qnew;
            if (hh != 0.0) h.push_back(hh);
        }
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

Expansion negate(Expansion e) {
    for (double& v : e) v = -v;
    return e;
}

// e * f, exact: sum of per-component scales.
Expansion mul(const Expansion& e, const Expansion& f) {
    Expansion acc{0.0};
    for (double c : f) {
        if (c == 0.0) continue;
        acc = sum(acc, scale(e, c));
    }
    return acc;
}

inline int expansion_sign(const Expansion& e) {
    const double top = e.back();
    if (top > 0.0) return 1;
    if (top < 0.0) return -1;
    return 0;
}

int orient2d_exact(double ax, double ay, double bx, double by, double cx, double cy) {
    const Expansion acx = make_diff(ax, cx);
    const Expansion acy = make_diff(ay, cy);
    const Expansion bcx = make_diff(bx, cx);
    const Expansion bcy = make_diff(by, cy);
    const Expansion det = sum(mul(acx, bcy), negate(mul(acy, bcx)));
    return expansion_sign(det);
}

int incircle_exact(double ax, double ay, double bx, double by, double cx, double cy,
                   double dx, double dy) {
    const Expansion adx = make_diff(ax, dx);
    const Expansion ady = make_diff(ay, dy);
    const Expansion bdx = make_diff(bx, dx);
    const Expansion bdy = make_diff(by, dy);
    const Expansion cdx = make_diff(cx, dx);
    const Expansion cdy = make_diff(cy, dy);

    const Expansion alift = sum(mul(adx, adx), mul(ady, ady));
    const Expansion blift = sum(mul(bdx, bdx), mul(bdy, bdy));
    const Expansion clift = sum(mul(cdx, cdx), mul(cdy, cdy));

    const Expansion bxcy = sum(mul(bdx, cdy), negate(mul(cdx, bdy)));
    const Expansion cxay = sum(mul(cdx, ady), negate(mul(adx, cdy)));
    const Expansion axby = sum(mul(adx, bdy), negate(mul(bdx, ady)));

    const Expansion det = sum(sum(mul(alift, bxcy), mul(blift, cxay)), mul(clift, axby));
    return expansion_sign(det);
}

// Forward-error multipliers, several times larger than the tight Shewchuk
// bounds so they stay safe with the translation roundoff folded in.
constexpr double kOrientErrBound = 1e-14;
constexpr double kIncircleErrBound = 1e-13;

}  // namespace

int orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
    const double detleft = (ax - cx) * (by - cy);
    const double detright = (ay - cy) * (bx - cx);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    }
    const double errbound = kOrientErrBound * detsum;
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    return orient2d_exact(ax, ay, bx, by, cx, cy);
}

int incircle(double ax, double ay, double bx, double by, double cx, double cy,
             double dx, double dy) {
    const double adx = ax - dx, ady = ay - dy;
    const double bdx = bx - dx, bdy = by - dy;
    const double cdx = cx - dx, cdy = cy - dy;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    const double errbound = kIncircleErrBound * permanent;
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    return incircle_exact(ax, ay, bx, by, cx, cy, dx, dy);
}

}  // namespace spritemesh
