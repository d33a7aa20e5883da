#pragma once

namespace spritemesh {

// Orientation of c relative to the directed line a->b: +1 left, -1 right,
// 0 collinear (in the shoelace sense: +1 means positive signed area of abc).
// Evaluated in double with a conservative forward-error filter; falls back
// to exact expansion arithmetic when the filter cannot certify the sign.
int orient2d(double ax, double ay, double bx, double by, double cx, double cy);

// In-circle test for the circumcircle of CCW triangle abc: +1 if d lies
// strictly inside, -1 strictly outside, 0 cocircular. Same filter + exact
// fallback scheme as orient2d.
int incircle(double ax, double ay, double bx, double by, double cx, double cy,
             double dx, double dy);

}  // namespace spritemesh
