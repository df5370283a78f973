#include "sl2pf/maps.hpp"

namespace sl2pf {

Mat2 psi_eval(const Poly& m1, const Poly& m2, const Poly& m3) {
    FieldPtr f = m1.field_ptr();
    Poly w = m1 * m2 * m3;
    Poly one = Poly::one(f);
    return Mat2(one + w, m1 * m1 * m3, -(m2 * m2 * m3), one - w);
}

PsiTriple psi_factor(const Mat2& m) {
    FieldPtr f = m.field_ptr();
    const Field& F = *f;
    require_sl2(m, "psi_factor");
    Poly trace = m.a + m.d;
    require(trace == Poly::from_int(f, 2), Errc::NotUnipotent, "psi_factor needs trace 2");

    Poly w = m.a - Poly::one(f);
    if (m.b.is_zero() && m.c.is_zero()) {
        // w^2 = -bc = 0, so m is the identity
        Poly z = Poly::zero(f);
        return {z, z, z};
    }

    Poly g = poly_gcd(m.b, m.c);
    for (Fq eps = 1; eps < F.q(); ++eps) {
        Poly m3 = g.mul_scalar(eps);
        auto m1 = poly_sqrt(exact_div(m.b, m3));
        if (!m1) continue;
        auto m2 = poly_sqrt(-exact_div(m.c, m3));
        if (!m2) continue;
        // fix the sign so m1*m2*m3 equals w rather than -w
        if (*m1 * *m2 * m3 != w) m2 = -*m2;
        if (*m1 * *m2 * m3 != w) continue;
        return {*m1, *m2, m3};
    }
    fail(Errc::NoUnitAdjustment, "no unit scaling of gcd(b, c) splits the unipotent matrix");
}

namespace {

// [[1 - xy, x^2], [-y^2, 1 + xy]]
Mat2 gamma_block(const Poly& x, const Poly& y) {
    FieldPtr f = x.field_ptr();
    Poly xy = x * y;
    Poly one = Poly::one(f);
    return Mat2(one - xy, x * x, -(y * y), one + xy);
}

}  // namespace

Mat2 gamma_eval(const Poly& m1, const Poly& m2, const Poly& m3, const Poly& m4) {
    FieldPtr f = m1.field_ptr();
    Mat2 outer = gamma_block(m2, m4);
    Mat2 inner = gamma_block(m1, m3);
    Poly one = Poly::one(f);
    Poly zero = Poly::zero(f);
    Mat2 k(zero, -one, one, zero);
    return outer * inner * outer * k;
}

std::array<Poly, 4> gamma_factor(const Mat2& alpha) {
    require_sl2(alpha, "gamma_factor");
    return {alpha.a, alpha.b, alpha.c, alpha.d};
}

Quintuple Quintuple::zeros(FieldPtr f) {
    Poly z = Poly::zero(f);
    return {z, z, z, z, z};
}

Mat2 lambda_m1(const Quintuple& t) {
    FieldPtr f = t.field_ptr();
    Poly one = Poly::one(f);
    Poly e2 = t.e * t.e;
    return Mat2(one + t.a * t.e, t.b * e2, t.c, one + t.d * t.e);
}

Mat2 lambda_m2(const Quintuple& t) {
    FieldPtr f = t.field_ptr();
    Poly one = Poly::one(f);
    Poly e2 = t.e * t.e;
    return Mat2(one + t.a * t.e, t.c * e2, t.b, one + t.d * t.e);
}

bool quintuple_valid(const Quintuple& t) { return lambda_m1(t).det().is_one(); }

void require_quintuple(const Quintuple& t, const char* what) {
    require(quintuple_valid(t), Errc::QuintupleNotSL2,
            std::string(what) + ": quintuple violates det M1 = 1");
}

Mat2 lambda_eval(const Quintuple& t) {
    require_quintuple(t, "lambda_eval");
    return lambda_m1(t) * lambda_m2(t);
}

Mat2 lambda_t_eval(const Quintuple& t) { return j_conjugate(lambda_eval(t)); }

Quintuple quintuple_inverse(const Quintuple& t) {
    // M2(t)^{-1} = M1(t'), M1(t)^{-1} = M2(t') for t' = (d, -c, -b, a, e),
    // so lambda(t') = lambda(t)^{-1}.
    return {t.d, -t.c, -t.b, t.a, t.e};
}

}  // namespace sl2pf
