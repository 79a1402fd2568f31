// Exact-sign orientation test on doubles: a floating-point filter decides
// the easy cases, an expansion-arithmetic fallback (after Shewchuk's
// adaptive predicates) decides the near-degenerate ones.

#include "ripsym/geometry.hpp"

#include <cmath>

namespace ripsym {

namespace {

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
constexpr double kResultErrBound = (3.0 + 8.0 * kEps) * kEps;
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kCcwErrBoundB = (2.0 + 12.0 * kEps) * kEps;
constexpr double kCcwErrBoundC = (9.0 + 64.0 * kEps) * kEps * kEps;

inline void fast_two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    y = b - bv;
}

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    double bv = a - x;
    double av = x + bv;
    y = (a - av) + (bv - b);
}

inline double two_diff_tail(double a, double b, double x) {
    double bv = a - x;
    double av = x + bv;
    return (a - av) + (bv - b);
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1, double& x0) {
    double i;
    two_diff(a0, b, i, x0);
    two_sum(a1, i, x2, x1);
}

inline void two_two_diff(double a1, double a0, double b1, double b0, double& x3, double& x2, double& x1,
                         double& x0) {
    double j, t;
    two_one_diff(a1, a0, b0, j, t, x0);
    two_one_diff(j, t, b1, x3, x2, x1);
}

int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f, double* h) {
    double q, qnew, hh;
    int eindex = 0, findex = 0, hindex = 0;
    double enow = e[0], fnow = f[0];
    if ((fnow > enow) == (fnow > -enow)) {
        q = enow;
        enow = e[++eindex];
    } else {
        q = fnow;
        fnow = f[++findex];
    }
    if ((eindex < elen) && (findex < flen)) {
        if ((fnow > enow) == (fnow > -enow)) {
            fast_two_sum(enow, q, qnew, hh);
            enow = e[++eindex];
        } else {
            fast_two_sum(fnow, q, qnew, hh);
            fnow = f[++findex];
        }
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
        while ((eindex < elen) && (findex < flen)) {
            if ((fnow > enow) == (fnow > -enow)) {
                two_sum(q, enow, qnew, hh);
                enow = e[++eindex];
            } else {
                two_sum(q, fnow, qnew, hh);
                fnow = f[++findex];
            }
            q = qnew;
            if (hh != 0.0) h[hindex++] = hh;
        }
    }
    while (eindex < elen) {
        two_sum(q, enow, qnew, hh);
        enow = e[++eindex];
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    while (findex < flen) {
        two_sum(q, fnow, qnew, hh);
        fnow = f[++findex];
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    if ((q != 0.0) || (hindex == 0)) h[hindex++] = q;
    return hindex;
}

double estimate(int elen, const double* e) {
    double q = e[0];
    for (int i = 1; i < elen; ++i) q += e[i];
    return q;
}

double orient2d_adapt(double ax, double ay, double bx, double by, double cx, double cy, double detsum) {
    double acx = ax - cx, bcx = bx - cx, acy = ay - cy, bcy = by - cy;

    double detleft, detlefttail, detright, detrighttail;
    two_product(acx, bcy, detleft, detlefttail);
    two_product(acy, bcx, detright, detrighttail);

    double B[4];
    two_two_diff(detleft, detlefttail, detright, detrighttail, B[3], B[2], B[1], B[0]);

    double det = estimate(4, B);
    double errbound = kCcwErrBoundB * detsum;
    if ((det >= errbound) || (-det >= errbound)) return det;

    double acxtail = two_diff_tail(ax, cx, acx);
    double bcxtail = two_diff_tail(bx, cx, bcx);
    double acytail = two_diff_tail(ay, cy, acy);
    double bcytail = two_diff_tail(by, cy, bcy);
    if ((acxtail == 0.0) && (acytail == 0.0) && (bcxtail == 0.0) && (bcytail == 0.0)) return det;

    errbound = kCcwErrBoundC * detsum + kResultErrBound * std::fabs(det);
    det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail);
    if ((det >= errbound) || (-det >= errbound)) return det;

    double s1, s0, t1, t0, u[4];
    double C1[8], C2[12], D[16];

    two_product(acxtail, bcy, s1, s0);
    two_product(acytail, bcx, t1, t0);
    two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
    int c1len = fast_expansion_sum_zeroelim(4, B, 4, u, C1);

    two_product(acx, bcytail, s1, s0);
    two_product(acy, bcxtail, t1, t0);
    two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
    int c2len = fast_expansion_sum_zeroelim(c1len, C1, 4, u, C2);

    two_product(acxtail, bcytail, s1, s0);
    two_product(acytail, bcxtail, t1, t0);
    two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
    int dlen = fast_expansion_sum_zeroelim(c2len, C2, 4, u, D);

    return D[dlen - 1];
}

}  // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    double detleft = (a.x - c.x) * (b.y - c.y);
    double detright = (a.y - c.y) * (b.x - c.x);
    double det = detleft - detright;
    double detsum;

    if (detleft > 0.0) {
        if (detright <= 0.0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0 ? 1 : (det < 0 ? -1 : 0);
    }

    double errbound = kCcwErrBoundA * detsum;
    if ((det >= errbound) || (-det >= errbound)) return det > 0 ? 1 : -1;

    det = orient2d_adapt(a.x, a.y, b.x, b.y, c.x, c.y, detsum);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace ripsym
