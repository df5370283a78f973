#include "sl2pf/mat2.hpp"

#include <sstream>

namespace sl2pf {

Mat2 Mat2::identity(FieldPtr f) {
    Poly one = Poly::one(f);
    Poly zero = Poly::zero(f);
    return Mat2(one, zero, zero, one);
}

Mat2 Mat2::zero(FieldPtr f) {
    Poly z = Poly::zero(f);
    return Mat2(z, z, z, z);
}

Mat2 Mat2::upper(const Poly& m) {
    FieldPtr f = m.field_ptr();
    return Mat2(Poly::one(f), m, Poly::zero(f), Poly::one(f));
}

Mat2 Mat2::lower(const Poly& m) {
    FieldPtr f = m.field_ptr();
    return Mat2(Poly::one(f), Poly::zero(f), m, Poly::one(f));
}

Mat2 Mat2::diag(const Poly& x, const Poly& y) {
    FieldPtr f = x.field_ptr();
    return Mat2(x, Poly::zero(f), Poly::zero(f), y);
}

bool Mat2::is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

void Mat2::rmul_upper(const Poly& t) {
    b = a * t + b;
    d = c * t + d;
}

void Mat2::rmul_lower(const Poly& t) {
    a = b * t + a;
    c = d * t + c;
}

void Mat2::lmul_upper(const Poly& t) {
    a = a + t * c;
    b = b + t * d;
}

void Mat2::lmul_lower(const Poly& t) {
    c = c + t * a;
    d = d + t * b;
}

std::string Mat2::to_string() const {
    std::ostringstream os;
    os << "[[" << a.to_string() << ", " << b.to_string() << "], [" << c.to_string() << ", "
       << d.to_string() << "]]";
    return os.str();
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d);
}

Mat2 operator*(const Mat2& x, const Mat2& y) { return mat_mul(x, y); }

Mat2 mat_neg(const Mat2& x) { return Mat2(-x.a, -x.b, -x.c, -x.d); }

Poly mat_det(const Mat2& x) { return x.det(); }

Mat2 mat_inv(const Mat2& x) {
    Poly det = x.det();
    require(det.is_unit(), Errc::NonUnitDeterminant,
            "matrix determinant is not a unit of A");
    Fq u = x.field().inv(det.constant_part());
    return Mat2(x.d.mul_scalar(u), (-x.b).mul_scalar(u), (-x.c).mul_scalar(u), x.a.mul_scalar(u));
}

Mat2 mat_transpose(const Mat2& x) { return x.transpose(); }

Mat2 j_conjugate(const Mat2& x) { return Mat2(x.d, -x.c, -x.b, x.a); }

void require_sl2(const Mat2& x, const char* what) {
    require(x.det().is_one(), Errc::NotSL2, std::string(what) + ": determinant is not 1");
}

}  // namespace sl2pf
