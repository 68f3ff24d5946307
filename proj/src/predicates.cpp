#include "cgeom/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>

namespace cgeom::predicates {
namespace {

using Exact = boost::multiprecision::cpp_rational;

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
// Static filter bounds for the leading-order floating-point evaluation.
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kO3dErrBound = (7.0 + 56.0 * kEps) * kEps;

int sign_of(const Exact& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

int orient2d(const double* a, const double* b, const double* c) {
  const double acx = a[0] - c[0], acy = a[1] - c[1];
  const double bcx = b[0] - c[0], bcy = b[1] - c[1];
  const double left = acx * bcy;
  const double right = acy * bcx;
  const double det = left - right;
  const double bound = kCcwErrBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;

  const Exact eacx = Exact(a[0]) - Exact(c[0]), eacy = Exact(a[1]) - Exact(c[1]);
  const Exact ebcx = Exact(b[0]) - Exact(c[0]), ebcy = Exact(b[1]) - Exact(c[1]);
  return sign_of(eacx * ebcy - eacy * ebcx);
}

double orient3d_approx(const double* a, const double* b, const double* c, const double* d) {
  const double bax = b[0] - a[0], bay = b[1] - a[1], baz = b[2] - a[2];
  const double cax = c[0] - a[0], cay = c[1] - a[1], caz = c[2] - a[2];
  const double dax = d[0] - a[0], day = d[1] - a[1], daz = d[2] - a[2];
  return (bay * caz - baz * cay) * dax + (baz * cax - bax * caz) * day +
         (bax * cay - bay * cax) * daz;
}

int orient3d(const double* a, const double* b, const double* c, const double* d) {
  // det[a-d; b-d; c-d] = -det[b-a; c-a; d-a].
  const double adx = a[0] - d[0], ady = a[1] - d[1], adz = a[2] - d[2];
  const double bdx = b[0] - d[0], bdy = b[1] - d[1], bdz = b[2] - d[2];
  const double cdx = c[0] - d[0], cdy = c[1] - d[1], cdz = c[2] - d[2];

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;

  const double det = adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy) + cdz * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * std::abs(adz) +
                           (std::abs(cdxady) + std::abs(adxcdy)) * std::abs(bdz) +
                           (std::abs(adxbdy) + std::abs(bdxady)) * std::abs(cdz);
  const double bound = kO3dErrBound * permanent;
  if (det > bound) return -1;
  if (-det > bound) return 1;

  const Exact eadx = Exact(a[0]) - Exact(d[0]), eady = Exact(a[1]) - Exact(d[1]),
              eadz = Exact(a[2]) - Exact(d[2]);
  const Exact ebdx = Exact(b[0]) - Exact(d[0]), ebdy = Exact(b[1]) - Exact(d[1]),
              ebdz = Exact(b[2]) - Exact(d[2]);
  const Exact ecdx = Exact(c[0]) - Exact(d[0]), ecdy = Exact(c[1]) - Exact(d[1]),
              ecdz = Exact(c[2]) - Exact(d[2]);
  const Exact exact = eadz * (ebdx * ecdy - ecdx * ebdy) + ebdz * (ecdx * eady - eadx * ecdy) +
                      ecdz * (eadx * ebdy - ebdx * eady);
  return -sign_of(exact);
}

}  // namespace cgeom::predicates
