#pragma once

#include "sl2pf/poly.hpp"

namespace sl2pf {

// 2x2 matrix over A, row-major [[a, b], [c, d]].
struct Mat2 {
    Poly a, b, c, d;

    Mat2(Poly a_, Poly b_, Poly c_, Poly d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity(FieldPtr f);
    static Mat2 zero(FieldPtr f);
    // [[1, m], [0, 1]]
    static Mat2 upper(const Poly& m);
    // [[1, 0], [m, 1]]
    static Mat2 lower(const Poly& m);
    // [[x, 0], [0, y]]
    static Mat2 diag(const Poly& x, const Poly& y);

    const FieldPtr& field_ptr() const { return a.field_ptr(); }
    const Field& field() const { return a.field(); }

    Poly det() const { return a * d - b * c; }
    bool is_identity() const;
    Mat2 transpose() const { return Mat2(a, c, b, d); }

    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    // In-place elementary column/row operations (right/left products with
    // elementary matrices), cheaper than a full multiply.
    void rmul_upper(const Poly& t);  // M <- M * [[1,t],[0,1]]
    void rmul_lower(const Poly& t);  // M <- M * [[1,0],[t,1]]
    void lmul_upper(const Poly& t);  // M <- [[1,t],[0,1]] * M
    void lmul_lower(const Poly& t);  // M <- [[1,0],[t,1]] * M

    std::string to_string() const;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 mat_neg(const Mat2& x);
Poly mat_det(const Mat2& x);
// Inverse for unit determinant; NonUnitDeterminant otherwise.
Mat2 mat_inv(const Mat2& x);
Mat2 mat_transpose(const Mat2& x);
// x -> J x J^{-1} with J = [[0,1],[-1,0]]; equals (x^{-1})^T on SL2.
Mat2 j_conjugate(const Mat2& x);

void require_sl2(const Mat2& x, const char* what);

}  // namespace sl2pf
